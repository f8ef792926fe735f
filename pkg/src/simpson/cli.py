"""Command line: ``simpson analyze | corpus | stream | enumerate | generate``.

Exit codes: 0 success, 1 malformed input or a failed check, 2 a table
cell that is not strictly positive, 3 Simpson's paradox found (only with
``analyze --exit-on-sp``).
"""

from __future__ import annotations

import argparse
import json
import sys

from .classify import case_of, class_of, sp
from .core import NonPositiveEntry, Table2x2, TablePair
from .generate import (
    UnknownName,
    UnlistedCase,
    corpus_entries,
    figure3_example,
    is_monotonic,
    literature_example,
    random_pairs,
    representative,
    toggling_sequence,
)
from .io import MalformedInput, pair_to_json, parse_pair, parse_stream
from .report import analyze, to_json, to_text
from .sweeps import CENSUS, DESCRIPTIONS, PROPERTY_NAMES, run_property, sweep

EXIT_OK, EXIT_MALFORMED, EXIT_NONPOSITIVE, EXIT_SP = 0, 1, 2, 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _dump(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_analyze(args) -> int:
    if args.counts:
        if args.path:
            raise MalformedInput("give either a file or --counts, not both")
        vals = args.counts
        p = TablePair(Table2x2(*vals[:4]), Table2x2(*vals[4:]))
    elif args.path:
        p = parse_pair(_read(args.path))
    else:
        raise MalformedInput("no input: pass a file path, '-' for stdin, or --counts")
    report = analyze(p)
    if args.json:
        _dump(to_json(report))
    else:
        print(to_text(report))
    if args.exit_on_sp and report.verdict:
        return EXIT_SP
    return EXIT_OK


def _entry_json(e) -> dict:
    return {
        "id": e.id,
        "source": e.source,
        "expected_case": e.expected_case,
        **pair_to_json(e.pair),
        "contexts": [{"name": c.name, **c.roles, "note": c.note} for c in e.contexts],
    }


def _verify_entry(e) -> tuple[bool, str]:
    case = case_of(e.pair)
    if case != e.expected_case:
        return False, f"case {case}, expected {e.expected_case}"
    report = analyze(e.pair)
    if not report.consistent:
        return False, "SP routes disagree"
    return True, f"case {case} ({class_of(case).value}), SP {report.verdict.value}"


def cmd_corpus(args) -> int:
    if args.action == "list":
        entries = corpus_entries()
        if args.json:
            _dump([{"id": e.id, "expected_case": e.expected_case, "source": e.source} for e in entries])
        else:
            for e in entries:
                print(f"{e.id:20s} case {e.expected_case:2d}  {e.source}")
        return EXIT_OK
    if args.action == "show":
        if not args.name:
            raise MalformedInput("corpus show needs an entry name")
        matches = [e for e in corpus_entries() if e.id == args.name]
        if not matches:
            raise UnknownName(f"unknown corpus entry {args.name!r}")
        e = matches[0]
        if args.json:
            _dump(_entry_json(e))
        else:
            print(f"{e.id}: {e.source}")
            print(f"T1 = {e.pair.t1}   T2 = {e.pair.t2}   T1+T2 = {e.pair.aggregate}")
            print(f"expected case {e.expected_case}")
            for c in e.contexts:
                roles = "; ".join(f"{k}: {v}" for k, v in c.roles.items())
                print(f"context {c.name}: {roles}")
                if c.note:
                    print(f"  {c.note}")
        return EXIT_OK
    # verify
    results = [(e, *_verify_entry(e)) for e in corpus_entries()]
    if args.json:
        _dump([{"id": e.id, "passed": ok, "detail": msg} for e, ok, msg in results])
    else:
        for e, ok, msg in results:
            print(f"{'PASS' if ok else 'FAIL'} {e.id}: {msg}")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_MALFORMED


def stream_timeline(pairs: list[TablePair]) -> dict:
    snapshots = []
    for k, p in enumerate(pairs):
        verdict = sp(p)
        snapshots.append({"index": k, "case": case_of(p), "sp": verdict.value, "on": bool(verdict)})
    transitions = [k for k in range(1, len(snapshots)) if snapshots[k]["on"] != snapshots[k - 1]["on"]]
    mono = is_monotonic(pairs) if len(pairs) >= 2 else None
    return {
        "snapshots": snapshots,
        "monotone": None if mono is None else mono.ok,
        "first_violation": None if mono is None else mono.first_violation,
        "transitions": transitions,
    }


def cmd_stream(args) -> int:
    timeline = stream_timeline(parse_stream(_read(args.path)))
    if args.json:
        _dump(timeline)
        return EXIT_OK
    for s in timeline["snapshots"]:
        print(f"{s['index']:4d}  case {s['case']:2d}  SP {s['sp']}")
    if timeline["monotone"] is not None:
        if timeline["monotone"]:
            print("monotone: yes")
        else:
            print(f"monotone: no (term {timeline['first_violation'] + 1} falls below term "
                  f"{timeline['first_violation']})")
    print("SP on/off transitions at: " + (", ".join(map(str, timeline["transitions"])) or "none"))
    return EXIT_OK


def _sweep_json(result) -> dict:
    out = {
        "property": result.name,
        "checked": result.checked,
        "applicable": result.applicable,
    }
    if result.name == CENSUS:
        out["census"] = [
            {"hypothesis": hyp, "pattern": kind, "count": n}
            for (hyp, kind), n in sorted(result.census.items())
        ]
    else:
        out["violations"] = result.violations
        out["passed"] = result.passed
        if result.first_counterexample is not None:
            out["first_index"] = result.first_index
            out["first_counterexample"] = pair_to_json(result.first_counterexample)
    return out


def cmd_enumerate(args) -> int:
    if args.property not in PROPERTY_NAMES:
        print(f"unknown property {args.property!r}; choose from {', '.join(PROPERTY_NAMES)}",
              file=sys.stderr)
        return EXIT_MALFORMED
    if args.max_entry < 1:
        raise MalformedInput("--max-entry must be at least 1")
    if args.random:
        result = run_property(args.property, random_pairs(args.seed, args.random, args.max_entry))
    else:
        result = sweep(args.property, args.max_entry, workers=args.workers)
    if args.json:
        _dump(_sweep_json(result))
        return EXIT_OK if result.passed else EXIT_MALFORMED
    print(f"{result.name}: {DESCRIPTIONS[result.name]}")
    print(f"pairs checked: {result.checked}; premise held: {result.applicable}")
    if result.name == CENSUS:
        for (hyp, kind), n in sorted(result.census.items()):
            print(f"  {hyp:14s} {kind:10s} {n}")
    elif result.passed:
        print("violations: 0")
    else:
        print(f"violations: {result.violations}; first at index {result.first_index}: "
              f"{result.first_counterexample}")
    return EXIT_OK if result.passed else EXIT_MALFORMED


def cmd_generate(args) -> int:
    kind = args.kind
    if kind == "representative":
        out = pair_to_json(representative(args.arg))
    elif kind == "figure3":
        out = pair_to_json(figure3_example(args.arg))
    elif kind == "toggling":
        out = [pair_to_json(p) for p in toggling_sequence(args.arg)]
    elif kind == "random":
        count = args.arg or 1
        pairs = [pair_to_json(p) for p in random_pairs(args.seed, count, args.max_entry)]
        out = pairs[0] if args.arg is None else pairs
    else:
        out = pair_to_json(literature_example(args.name).pair)
    _dump(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simpson", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="full analysis of one pair of tables")
    p.add_argument("path", nargs="?", help="JSON or CSV pair file, '-' for stdin")
    p.add_argument("--counts", nargs=8, metavar="N", help="a1 b1 c1 d1 a2 b2 c2 d2")
    p.add_argument("--json", action="store_true")
    p.add_argument("--exit-on-sp", action="store_true", help="exit 3 when SP is present")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("corpus", help="bundled literature examples and case representatives")
    p.add_argument("action", choices=("list", "show", "verify"))
    p.add_argument("name", nargs="?")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_corpus)

    p = sub.add_parser("stream", help="classify a sequence of accumulating snapshots")
    p.add_argument("path", help="JSON array of pairs, '-' for stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_stream)

    p = sub.add_parser("enumerate", help="check a property over all small pairs")
    p.add_argument("--property", required=True, help=", ".join(PROPERTY_NAMES))
    p.add_argument("--max-entry", type=int, default=4)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--random", type=int, default=0, metavar="COUNT",
                   help="check COUNT seeded random pairs instead of the full enumeration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("generate", help="emit pairs as JSON")
    gen = p.add_subparsers(dest="kind", required=True)
    for kind, helptext in (("representative", "pair realising a case 1..27"),
                           ("figure3", "printed example for cases 1-9, 13, 14"),
                           ("toggling", "first N terms of the toggling sequence")):
        g = gen.add_parser(kind, help=helptext)
        g.add_argument("arg", type=int)
    g = gen.add_parser("random", help="seeded random pair(s)")
    g.add_argument("arg", type=int, nargs="?", metavar="COUNT")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--max-entry", type=int, default=10)
    g = gen.add_parser("literature", help="a worked example from the literature")
    g.add_argument("name")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonPositiveEntry as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONPOSITIVE
    except (MalformedInput, UnknownName, UnlistedCase, ValueError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
