# Copyright © 2024 laxcomma contributors.

import argparse

from laxcomma.catalog import parallel, square, two
from laxcomma.constructions import comma_category, fam_build
from laxcomma.corpus import pocategory_corpus, preorders
from laxcomma.fincat import functors, identity_functor
from laxcomma.suites import SuiteOptions, run_suite
from time_utils import time_fn


def time_preorders(max_elems):
    def labelled_preorders():
        return [preorders(n, up_to_iso=False) for n in range(max_elems + 1)]

    def preorders_up_to_iso():
        return [preorders(n) for n in range(max_elems + 1)]

    time_fn(labelled_preorders)
    time_fn(preorders_up_to_iso)


def time_functors():
    def functors_into_square():
        return list(functors(two(), square()))

    def functors_from_square():
        return list(functors(square(), square()))

    time_fn(functors_into_square)
    time_fn(functors_from_square)


def time_constructions():
    sq = square()

    def comma_of_identities():
        return comma_category(identity_functor(sq), identity_functor(sq))

    def fam_of_parallel():
        return fam_build(parallel(), 2)

    time_fn(comma_of_identities)
    time_fn(fam_of_parallel)


def time_pocategories():
    def pocategories():
        return list(pocategory_corpus())

    time_fn(pocategories, num_iters=3)


def time_suites(names, max_elems):
    for name in names:

        def suite():
            return run_suite(name, SuiteOptions(max_elems=max_elems))

        suite.__name__ = name
        time_fn(suite, num_iters=1)


if __name__ == "__main__":
    parser = argparse.ArgumentParser("laxcomma benchmarks.")
    parser.add_argument("--max-elems", type=int, default=3, help="Largest preorder enumerated.")
    parser.add_argument(
        "--suite",
        action="append",
        default=[],
        help="Also time a property suite (repeatable).",
    )
    args = parser.parse_args()

    time_preorders(args.max_elems)
    time_functors()
    time_constructions()
    time_pocategories()
    time_suites(args.suite, args.max_elems)
