"""Command line interface.

Exit codes: 0 when everything requested verified or was found as
expected, 1 when a swept proposition failed, 2 on usage, parse, or
validation errors.
"""

import argparse
import json
import sys

from .documents import (
    decode_map,
    decode_space,
    encode_space,
    mask_to_names,
    names_to_mask,
)
from .enumeration import EnumerationBudget, enumerate_topologies
from .errors import (
    BudgetExceeded,
    DocumentError,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    TopologyError,
)
from .maps import ContinuityClass, is_continuous_in
from .setclasses import (
    PREDICATES,
    WITNESS_FUNCTIONS,
    SetClass,
)
from .spaceprops import space_profile
from .theorems import (
    acceptable,
    proposition,
    registry,
    serialize_report,
    verify,
)

# what the second member of each existential witness pair is
_SECOND_FAMILY = {
    SetClass.LOCALLY_CLOSED: "closed",
    SetClass.A_SET: "regular-closed",
    SetClass.B_SET: "semi-closed",
    SetClass.AB_SET: "semi-regular",
}

_MAX_ENUMERATION_N = 6


def _format_set(mask, points) -> str:
    return "{" + ",".join(mask_to_names(mask, points)) + "}"


def _fail(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path!r}: {exc}")
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path!r} is not valid JSON: {exc}")


def _decode_space_checked(doc):
    """decode_space with axiom violations rendered with point names."""
    points = doc.get("points") if isinstance(doc, dict) else None
    named = isinstance(points, list) and all(
        isinstance(p, str) for p in points
    )
    try:
        return decode_space(doc)
    except (NotClosedUnderUnion, NotClosedUnderIntersection) as exc:
        kind = (
            "union" if isinstance(exc, NotClosedUnderUnion)
            else "intersection"
        )
        u, v = exc.witness
        if named:
            shown = f"{_format_set(u, points)} and {_format_set(v, points)}"
        else:
            shown = f"{u:#b} and {v:#b}"
        raise DocumentError(
            f"invalid topology: not closed under {kind}; "
            f"witness opens {shown}"
        )


def cmd_classify_set(args) -> int:
    doc = _read_json(args.space)
    t, points = _decode_space_checked(doc)
    index = {name: x for x, name in enumerate(points)}
    a = names_to_mask(args.subset, index)
    print(f"subset {_format_set(a, points)} in space on {t.n} point(s)")
    for cls in SetClass:
        member = PREDICATES[cls](t, a)
        line = f"  {cls.value}: {'yes' if member else 'no'}"
        if member and cls in WITNESS_FUNCTIONS:
            u, v = WITNESS_FUNCTIONS[cls](t, a)
            line += (
                f"  [open {_format_set(u, points)} & "
                f"{_SECOND_FAMILY[cls]} {_format_set(v, points)}]"
            )
        print(line)
    return 0


def cmd_classify_space(args) -> int:
    doc = _read_json(args.space)
    t, _ = _decode_space_checked(doc)
    print(f"space on {t.n} point(s) with {len(t.opens)} open set(s)")
    for prop, value in space_profile(t).items():
        print(f"  {prop.value}: {'yes' if value else 'no'}")
    return 0


def cmd_classify_map(args) -> int:
    doc = _read_json(args.map)
    f, dom_points, cod_points = decode_map(doc)
    shown = ", ".join(
        f"{dom_points[x]}->{cod_points[f.assignment[x]]}"
        for x in range(f.domain.n)
    )
    print(f"map [{shown}] between spaces on {f.domain.n} and "
          f"{f.codomain.n} point(s)")
    for cc in ContinuityClass:
        value = is_continuous_in(f, cc)
        print(f"  {cc.value}: {'yes' if value else 'no'}")
    return 0


def cmd_verify(args) -> int:
    if args.propositions == ["all"]:
        props = registry()
    else:
        try:
            props = [proposition(pid) for pid in args.propositions]
        except KeyError as exc:
            return _fail(str(exc.args[0]))
    budget = None
    if args.max_n is not None:
        budget = EnumerationBudget(max_n=args.max_n)
    reports = []
    all_ok = True
    for p in props:
        report = verify(p, budget, parallel=args.parallel,
                        workers=args.workers)
        reports.append(report)
        ok = acceptable(p, report)
        all_ok = all_ok and ok
        note = ""
        if p.exploratory:
            note = "  (exploratory)"
        elif not ok:
            note = "  FAILED"
        print(f"{p.id}: {report.verdict}{note}")
        for w in report.witnesses:
            print(f"  {w.polarity}: "
                  f"{json.dumps(w.to_document(), sort_keys=True)}")
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(serialize_report(reports))
        print(f"report written to {args.report}")
    return 0 if all_ok else 1


def cmd_enumerate(args) -> int:
    if args.n > _MAX_ENUMERATION_N:
        return _fail(
            f"enumeration is capped at n={_MAX_ENUMERATION_N}"
        )
    budget = EnumerationBudget(max_n=args.n)
    if args.count_only:
        print(sum(1 for _ in enumerate_topologies(args.n, budget)))
        return 0
    for t in enumerate_topologies(args.n, budget):
        print(json.dumps(encode_space(t), sort_keys=True))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fintopo",
        description="Classify generalized open sets, space properties, "
                    "and continuity classes over finite topological "
                    "spaces, and sweep the full proposition registry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(
        "classify-set",
        help="membership of a subset in every implemented set class",
    )
    p.add_argument("space", help="path to a space document (JSON)")
    p.add_argument("subset", nargs="*",
                   help="point names forming the subset (empty = {})")
    p.set_defaults(func=cmd_classify_set)

    p = sub.add_parser(
        "classify-space",
        help="verdicts for the global space properties",
    )
    p.add_argument("space", help="path to a space document (JSON)")
    p.set_defaults(func=cmd_classify_space)

    p = sub.add_parser(
        "classify-map",
        help="verdicts for every continuity class of a map",
    )
    p.add_argument("map", help="path to a map document (JSON)")
    p.set_defaults(func=cmd_classify_map)

    p = sub.add_parser(
        "verify",
        help="sweep propositions exhaustively and report verdicts",
    )
    p.add_argument("propositions", nargs="+",
                   help="proposition ids, or 'all'")
    p.add_argument("--max-n", type=int, default=None,
                   help="ground-set size cap (default: 4 for set/space "
                        "sweeps, 3 for map sweeps)")
    p.add_argument("--parallel", action="store_true",
                   help="distribute map sweeps over worker processes")
    p.add_argument("--workers", type=int, default=None,
                   help="worker process count for --parallel")
    p.add_argument("--report", default=None,
                   help="write the full JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "enumerate",
        help="stream all topologies on n labeled points",
    )
    p.add_argument("--n", type=int, required=True,
                   help=f"ground-set size (0..{_MAX_ENUMERATION_N})")
    p.add_argument("--count-only", action="store_true",
                   help="print only the number of topologies")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except (DocumentError, TopologyError, BudgetExceeded) as exc:
        return _fail(str(exc))
    except ValueError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
