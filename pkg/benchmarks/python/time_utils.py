# Copyright © 2024 laxcomma contributors.

import time


def time_fn(fn, *args, num_iters=10, **kwargs):
    print(f"Timing {fn.__name__} ...", end=" ")

    # warmup
    fn(*args, **kwargs)

    tic = time.perf_counter()
    for _ in range(num_iters):
        fn(*args, **kwargs)
    toc = time.perf_counter()

    msec = 1e3 * (toc - tic) / num_iters
    print(f"{msec:.5f} msec")
