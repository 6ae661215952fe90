# Copyright © 2024 laxcomma contributors.

"""The ``laxcomma`` command line.

Every construction is an *op* taking a parsed presentation and names of
blocks in it. The subcommands call one op on the command line; ``run``
executes the ``command`` blocks of a file in order.

Exit codes: 0 when the requested object exists or the check passes, 1 when
it does not or the input fails to parse or validate, 2 for usage errors.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence

from laxcomma import config
from laxcomma.change_of_base import flip_gamma, kz_witness, verify_kz_witness
from laxcomma.constructions import comma_category, preorder_coequalizer, pullback_category
from laxcomma.errors import ParseError, SearchBudgetExceeded
from laxcomma.fincat import FinCategory, FinFunctor, find_adjunction
from laxcomma.kan import LaxCoeqInstance, lax_slice_coequalizer, left_kan, right_kan
from laxcomma.lax_slice import SliceObject
from laxcomma.parser import SpecFile, format_category, format_functor, load_spec_file
from laxcomma.suites import MUTATIONS, SUITES, SuiteOptions, run_suite
from laxcomma.thin2 import adjunction_check, pos_pocategory
from laxcomma.utils import format_id, to_jsonable

logger = logging.getLogger(__name__)


@dataclass
class OpResult:
    text: str
    doc: Dict[str, Any] = field(default_factory=dict)
    ok: bool = True


def _category_doc(c: FinCategory) -> Dict[str, Any]:
    return to_jsonable(
        {
            "objects": list(c.objects),
            "morphisms": {format_id(f): list(st) for f, st in c.morphisms.items()},
            "identities": {format_id(x): i for x, i in c.identity.items()},
        }
    )


def _functor_doc(F: FinFunctor) -> Dict[str, Any]:
    return to_jsonable(
        {
            "objects": {format_id(x): y for x, y in F.obj_map.items()},
            "morphisms": {format_id(f): g for f, g in F.mor_map.items()},
        }
    )


def _components(t) -> str:
    return " ".join(f"{format_id(x)}: {format_id(m)}" for x, m in t.components.items())


def _functors(spec: SpecFile, names: Sequence[str], count: int) -> List[FinFunctor]:
    if len(names) != count:
        raise ValueError(f"Expected {count} functor names, got {len(names)}.")
    fs = [spec.functor(n) for n in names]
    for n, F in zip(names, fs):
        if not isinstance(F, FinFunctor):
            raise ValueError(f"{n} is a 2-functor; this op takes functors of categories.")
    return fs


def op_validate(spec: SpecFile, names, flags) -> OpResult:
    lines = [f"{b.kind} {b.name}: ok" for b in spec.blocks]
    lines.append(f"{len(spec.blocks)} blocks valid")
    doc = {"blocks": [{"kind": b.kind, "name": b.name} for b in spec.blocks]}
    return OpResult("\n".join(lines), doc)


def op_comma(spec: SpecFile, names, flags) -> OpResult:
    a, b = _functors(spec, names, 2)
    cm = comma_category(a, b)
    name = f"{names[0]}↓{names[1]}"
    text = "\n".join(
        [
            format_category(cm.cat, name),
            format_functor(cm.proj0, "proj0"),
            format_functor(cm.proj1, "proj1"),
            f"lambda: {_components(cm.lam)}",
        ]
    )
    doc = {
        "comma": _category_doc(cm.cat),
        "proj0": _functor_doc(cm.proj0),
        "proj1": _functor_doc(cm.proj1),
        "lambda": to_jsonable({format_id(x): m for x, m in cm.lam.components.items()}),
    }
    return OpResult(text, doc)


def op_pullback(spec: SpecFile, names, flags) -> OpResult:
    a, b = _functors(spec, names, 2)
    pb = pullback_category(a, b)
    name = f"{names[0]}×{names[1]}"
    text = "\n".join(
        [
            format_category(pb.cat, name),
            format_functor(pb.proj0, "proj0"),
            format_functor(pb.proj1, "proj1"),
        ]
    )
    doc = {
        "pullback": _category_doc(pb.cat),
        "proj0": _functor_doc(pb.proj0),
        "proj1": _functor_doc(pb.proj1),
    }
    return OpResult(text, doc)


def op_kan(spec: SpecFile, names, flags) -> OpResult:
    h, j = _functors(spec, names, 2)
    left = "left" in flags
    result = (left_kan if left else right_kan)(h, j, certify="no-certify" not in flags)
    side = "left" if left else "right"
    if not result.found:
        text = f"no {side} Kan extension: no {'colimit' if left else 'limit'} at {format_id(result.failing_object)}"
        return OpResult(text, {"found": False, "failing_object": to_jsonable(result.failing_object)}, False)
    cell = "unit" if left else "counit"
    text = "\n".join(
        [
            format_functor(result.extension),
            f"{cell}: {_components(result.cell)}",
            f"certified: {result.certified} ({result.checked} cones checked)",
        ]
    )
    doc = {
        "found": True,
        "extension": _functor_doc(result.extension),
        cell: to_jsonable({format_id(x): m for x, m in result.cell.components.items()}),
        "certified": result.certified,
    }
    return OpResult(text, doc, result.certified is not False)


def op_coeq(spec: SpecFile, names, flags) -> OpResult:
    """``coeq G H`` in preorders, or ``coeq G H B A`` in the lax slice with
    legs ``b: x -> z`` and ``a: w -> z``."""
    if len(names) not in (2, 4):
        raise ValueError(f"coeq takes G H [B A], got {len(names)} names.")
    g, h = spec.monotone(names[0]), spec.monotone(names[1])
    if len(names) == 2:
        coeq = preorder_coequalizer(g, h)
        le = sorted(f"{format_id(u)}<={format_id(v)}" for u, v in coeq.q.le)
        doc = {
            "elements": to_jsonable(list(coeq.q.elements)),
            "le": le,
            "map": to_jsonable({format_id(x): y for x, y in coeq.e.mapping.items()}),
        }
        text = "\n".join(
            [
                "quotient: " + " ".join(format_id(x) for x in coeq.q.elements),
                "le: " + " ".join(le),
                f"map: {coeq.e!r}",
            ]
        )
        return OpResult(text, doc)
    b, a = spec.monotone(names[2]), spec.monotone(names[3])
    inst = LaxCoeqInstance(b.cod, a.dom, a, b.dom, b, g, h)
    result = lax_slice_coequalizer(inst)
    if not result.found:
        return OpResult("no coequalizer: ran_f b does not exist", {"found": False}, False)
    doc = {
        "found": True,
        "elements": to_jsonable(list(result.coeq.q.elements)),
        "map": to_jsonable({format_id(x): y for x, y in result.f.mapping.items()}),
        "leg": to_jsonable({format_id(x): y for x, y in result.c.mapping.items()}),
        "certified": result.certified,
    }
    text = "\n".join(
        [
            "quotient: " + " ".join(format_id(x) for x in result.coeq.q.elements),
            f"map: {result.f!r}",
            f"leg: {result.c!r}",
            f"certified: {result.certified}",
        ]
    )
    return OpResult(text, doc, bool(result.certified))


def _preorder_ends(spec: SpecFile, name: str):
    b = spec.block("functor", name)
    if b is None:
        return None
    dom, cod = b.header
    if spec.block("preorder", dom) is None or spec.block("preorder", cod) is None:
        return None
    return dom, cod


def op_adjoint_check(spec: SpecFile, names, flags) -> OpResult:
    """Monotone maps are checked as 1-cells of the 2-category of their
    preorders, with the lali/rali/lari/rari flags; other functors by a
    search for a unit and counit."""
    if len(names) != 2:
        raise ValueError(f"adjoint-check takes F G, got {len(names)} names.")
    ends = [_preorder_ends(spec, n) for n in names]
    if all(ends):
        f_map, g_map = spec.monotone(names[0]), spec.monotone(names[1])
        (x, y) = ends[0]
        k = pos_pocategory({x: spec.preorder(x), y: spec.preorder(y)})
        f = k.cell(x, y, f_map.mapping)
        g = k.cell(y, x, g_map.mapping)
        verdict = adjunction_check(k, f, g)
        flags_doc = {
            "lali": verdict.lali,
            "rali": verdict.rali,
            "lari": verdict.lari,
            "rari": verdict.rari,
        }
        shown = " ".join(flag for flag, v in flags_doc.items() if v) or "-"
        text = f"{names[0]} ⊣ {names[1]}: {verdict.holds}\nflags: {shown}"
        return OpResult(text, {"adjoint": verdict.holds, **flags_doc}, verdict.holds)
    F, G = _functors(spec, names, 2)
    adj = find_adjunction(F, G)
    if adj is None:
        return OpResult(f"{names[0]} ⊣ {names[1]}: False", {"adjoint": False}, False)
    text = "\n".join(
        [
            f"{names[0]} ⊣ {names[1]}: True",
            f"unit: {_components(adj.unit)}",
            f"counit: {_components(adj.counit)}",
        ]
    )
    doc = {
        "adjoint": True,
        "unit": to_jsonable({format_id(x): m for x, m in adj.unit.components.items()}),
        "counit": to_jsonable({format_id(x): m for x, m in adj.counit.components.items()}),
    }
    return OpResult(text, doc)


def op_kz_witness(spec: SpecFile, names, flags) -> OpResult:
    (b,) = _functors(spec, names, 1)
    wit = kz_witness(SliceObject(b.dom, b))
    if "flip-gamma" in flags:
        wit = flip_gamma(wit)
    reports = verify_kz_witness(wit)
    lines = [
        format_category(wit.comma.cat, f"{names[0]}↓id"),
        f"gamma: {_components(wit.gamma)}",
    ]
    lines.extend(f"{k}: {'ok' if v else 'FAIL'}" for k, v in reports.items())
    doc = {
        "gamma": to_jsonable({format_id(x): m for x, m in wit.gamma.components.items()}),
        "checks": reports,
    }
    return OpResult("\n".join(lines), doc, all(reports.values()))


OPS: Dict[str, Callable[[SpecFile, Sequence[str], Sequence[str]], OpResult]] = {
    "validate": op_validate,
    "comma": op_comma,
    "pullback": op_pullback,
    "kan": op_kan,
    "coeq": op_coeq,
    "adjoint-check": op_adjoint_check,
    "kz-witness": op_kz_witness,
}


def dispatch(spec: SpecFile, op: str, names: Sequence[str], flags: Sequence[str] = ()) -> OpResult:
    if op not in OPS:
        raise ValueError(f"Unknown op {op!r}; choose from {', '.join(OPS)}.")
    logger.info("%s %s", op, " ".join(names))
    return OPS[op](spec, list(names), list(flags))


def _dump(doc: Any) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _emit(result: OpResult, json_path: Optional[str]):
    if json_path is None:
        print(result.text)
    elif json_path == "-":
        print(_dump(result.doc))
    else:
        with open(json_path, "w", encoding="utf-8") as fid:
            fid.write(_dump(result.doc) + "\n")
        print(result.text)


def cmd_op(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.file)
    flags = []
    if getattr(args, "left", False):
        flags.append("left")
    if getattr(args, "mutate", None):
        flags.append(args.mutate)
    result = dispatch(spec, args.op, getattr(args, "names", []), flags)
    _emit(result, args.json)
    return 0 if result.ok else 1


def cmd_run(args: argparse.Namespace) -> int:
    spec = load_spec_file(args.file)
    commands = spec.commands
    docs, status = [], 0
    for c in commands:
        result = dispatch(spec, c.op, c.args, c.flags)
        if args.json is None:
            print(f"== {c.name} ({c.op}) ==")
            print(result.text)
        docs.append({"command": c.name, "op": c.op, "ok": result.ok, "result": result.doc})
        status = status or (0 if result.ok else 1)
    if args.json is not None:
        _emit(OpResult(f"{len(commands)} commands", {"commands": docs}), args.json)
    return status


def cmd_suite(args: argparse.Namespace) -> int:
    opts = SuiteOptions(max_elems=args.max_elems, mutate=args.mutate)
    report = run_suite(args.name, opts, timing=not args.no_timing)
    totals = report.totals
    if args.json != "-":
        for r in report.failures():
            print(f"FAIL {r.property} {r.instance}: {to_jsonable(r.witness)}")
        elapsed = "" if report.elapsed_ms is None else f" in {report.elapsed_ms:.1f} ms"
        print(f"{report.suite}: {totals['pass']}/{totals['all']} passed{elapsed}")
    if args.json is not None:
        text = _dump(report.to_dict())
        if args.json == "-":
            print(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fid:
                fid.write(text + "\n")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="laxcomma", description="Finite comma objects, lax slices and Kan extensions."
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    sub = parser.add_subparsers(dest="cmd", required=True)

    def op_parser(name, help, nargs=None, metavar=None):
        p = sub.add_parser(name, help=help)
        p.add_argument("file", help="A .fincat presentation.")
        if nargs is not None:
            p.add_argument("names", nargs=nargs, metavar=metavar)
        p.add_argument("--json", metavar="PATH", help="Write the result as JSON ('-' for stdout).")
        p.set_defaults(func=cmd_op, op=name)
        return p

    op_parser("validate", "Parse and validate every block.")
    op_parser("comma", "Build the comma category of two functors.", 2, "FUNCTOR")
    op_parser("pullback", "Build the strict pullback of two functors.", 2, "FUNCTOR")
    kan = op_parser("kan", "Pointwise Kan extension of J along H.", 2, "FUNCTOR")
    side = kan.add_mutually_exclusive_group()
    side.add_argument("--right", dest="left", action="store_false", help="Right extension (default).")
    side.add_argument("--left", dest="left", action="store_true", help="Left extension.")
    kan.set_defaults(left=False)
    op_parser("coeq", "Coequalize G, H (optionally in the lax slice with legs B, A).", "+", "MAP")
    op_parser("adjoint-check", "Decide whether F is left adjoint to G.", 2, "FUNCTOR")
    kz = op_parser("kz-witness", "Build and check the lax idempotency witness at B.", 1, "FUNCTOR")
    kz.add_argument("--mutate", choices=MUTATIONS, help="Inject a mutation before checking.")

    run = sub.add_parser("run", help="Execute the command blocks of a file.")
    run.add_argument("file")
    run.add_argument("--json", metavar="PATH")
    run.set_defaults(func=cmd_run)

    suite = sub.add_parser("suite", help="Run a property suite over the corpus.")
    suite.add_argument("name", choices=sorted(SUITES))
    suite.add_argument("--max-elems", type=int, default=None, help="Largest preorder in the corpus.")
    suite.add_argument("--json", metavar="PATH")
    suite.add_argument("--no-timing", action="store_true", help="Report elapsed_ms as null.")
    suite.add_argument("--mutate", choices=MUTATIONS)
    suite.set_defaults(func=cmd_suite)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    level = "DEBUG" if args.verbose else config.log_level()
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except ParseError as e:
        print(f"{args.file}: {e}", file=sys.stderr)
    except (SearchBudgetExceeded, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
