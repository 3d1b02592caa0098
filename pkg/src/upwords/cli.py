"""Command-line front end: ``upwords verify|construct|feasible|search|tables``.

Exit codes: 0 success, 1 a valid but negative outcome, 2 usage error,
3 internal invariant breach.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import constructions, feasibility, search, tables
from .errors import ConstructionFailed, CountMismatch, UpwordError
from .feasibility import DiamondTemplate
from .words import PartialWord, parse_partial_word, verify

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUG = 0, 1, 2, 3

FAMILY_ALIASES = {
    "pos1": "pos1",
    "posk": "posk",
    "two": "two_diamonds",
    "two_diamonds": "two_diamonds",
    "nm1": "nm1_diamonds",
    "nm1_diamonds": "nm1_diamonds",
    "trivial": "trivial",
}


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _emit(obj: dict) -> None:
    print(json.dumps(obj, ensure_ascii=False))


def _show(word: PartialWord, args) -> str:
    return word.render(unicode=getattr(args, "unicode", False))


def cmd_verify(args) -> int:
    word = parse_partial_word(args.word, args.alphabet)
    report = verify(word, args.n, args.cyclic)
    if args.json:
        violations = [{"kind": "missing", "factor": w} for w in report.missing]
        violations += [{"kind": "duplicated", "factor": w, "windows": list(ws)} for w, ws in report.duplicated.items()]
        _emit({"word": _show(word, args), "alphabet": args.alphabet, "n": args.n, "cyclic": args.cyclic,
               "universal": report.universal, "violations": violations})
    else:
        mode = "cyclic" if args.cyclic else "linear"
        print(f"{_show(word, args)}: {mode} universal for n={args.n}: {'yes' if report.universal else 'no'}")
        for w in report.missing:
            print(f"  missing    {w}")
        for w, ws in report.duplicated.items():
            print(f"  duplicated {w} at windows {', '.join(map(str, ws))}")
    return EXIT_OK if report.universal else EXIT_NEGATIVE


def cmd_construct(args) -> int:
    family = FAMILY_ALIASES.get(args.family)
    if family is None:
        raise UpwordError(f"unknown family {args.family!r}")
    request = constructions.ConstructionRequest(family, args.n, args.k)
    word = constructions.construct(request)
    report = verify(word, args.n)
    if not report.universal:
        raise ConstructionFailed(f"constructed word {word} is not universal")
    if args.json:
        _emit({"word": _show(word, args), "alphabet": 2, "n": args.n, "cyclic": False,
               "universal": True, "violations": [], "family": family})
    else:
        print(_show(word, args))
        print(f"# verified: linear universal for n={args.n}, length {len(word)}, diamonds at {list(word.diamonds)}")
    return EXIT_OK


def cmd_feasible(args) -> int:
    a, n = args.alphabet, args.n
    if args.single_diamond:
        if args.k is None:
            raise UpwordError("--single-diamond needs --k")
        verdict = feasibility.single_diamond_verdict(a, n, args.k, args.length)
    elif args.two_diamonds:
        if args.shape is None or len(args.shape) != 3:
            raise UpwordError("--two-diamonds needs --shape LX,LY,LZ")
        verdict = feasibility.two_diamond_shape_verdict(n, *args.shape)
    elif args.prefix_run:
        if args.d is None:
            raise UpwordError("--prefix-run needs --d")
        template = DiamondTemplate.from_text(args.template, n, a) if args.template else None
        verdict = feasibility.prefix_run_verdict(a, n, args.d, template)
    elif args.cyclic:
        if args.diamonds is not None:
            if args.length is None:
                raise UpwordError("--cyclic --diamonds needs --length")
            t = DiamondTemplate.with_diamonds(args.length, args.diamonds, n, a, cyclic=True)
            verdict = feasibility.cyclic_template_verdict(t)
        else:
            verdict = feasibility.cyclic_parameter_verdict(a, n)
    else:
        raise UpwordError("choose one of --single-diamond, --two-diamonds, --cyclic, --prefix-run")
    out = verdict.to_dict()
    if args.json:
        _emit({"alphabet": a, "n": n, "cyclic": bool(args.cyclic), **out})
        return EXIT_OK
    line = out["verdict"]
    if verdict.theorem:
        line += f" by {verdict.theorem}"
    if verdict.construction:
        line += f" (construction {verdict.construction})"
    print(line)
    if verdict.d_list:
        print(f"d in {{{', '.join(map(str, verdict.d_list))}}}")
    if verdict.witness is not None:
        print(f"witness {_show(verdict.witness, args)}")
    if verdict.note:
        print(f"note: {verdict.note}")
    return EXIT_OK


def _search_template(args) -> DiamondTemplate:
    a, n = args.alphabet, args.n
    if args.template:
        return DiamondTemplate.from_text(args.template, n, a, args.cyclic)
    positions = args.diamonds if args.diamonds is not None else (args.diamond_at or [])
    length = args.length
    if length is None:
        if len(positions) == 1 and not args.cyclic:
            length = feasibility.single_diamond_length(n, positions[0], a)
        if length is None:
            raise UpwordError("--length is required for this pattern")
    return DiamondTemplate.with_diamonds(length, positions, n, a, args.cyclic)


def cmd_search(args) -> int:
    template = _search_template(args)
    spec = search.SearchSpec(
        template,
        mode="first" if args.first else "all",
        symmetry_reduction=args.symmetry,
        node_budget=args.node_budget,
        time_budget=args.time_budget,
        pruning=not args.no_pruning,
        threads=args.threads,
    )
    result = search.exhaustive_search(spec)
    meta = {"alphabet": template.alpha, "n": template.n, "cyclic": template.cyclic}
    for w in result.witnesses:
        if args.json:
            _emit({"word": _show(w, args), **meta, "universal": True})
        else:
            print(_show(w, args))
    if args.json:
        _emit({**meta, "template": template.render(), **result.to_dict(),
               "witnesses": [_show(w, args) for w in result.witnesses]})
    else:
        state = "exhausted" if result.exhausted else "budget-truncated"
        print(f"# {len(result.witnesses)} witness(es), {state}, {result.nodes_explored} nodes")
    return EXIT_OK if result.exhausted else EXIT_NEGATIVE


def cmd_tables(args) -> int:
    which = None if args.table == "all" else int(args.table)
    failures = 0
    checks = [tables.check_entry(e) for e in tables.entries(which)]
    for c in checks:
        e = c.entry
        word = _show(e.word, args) if e.word is not None else "-"
        if args.json:
            _emit({"table": e.table, "n": e.n, "positions": list(e.positions), "word": word,
                   "refs": list(e.refs), "passed": c.passed, "detail": c.detail})
        else:
            print(f"{'PASS' if c.passed else 'FAIL'} table {e.table} n={e.n} at {','.join(map(str, e.positions))} "
                  f"{word} [{c.detail}]")
        failures += not c.passed
    if not args.json:
        print(f"# {len(checks) - failures}/{len(checks)} entries pass")
    return EXIT_OK if failures == 0 else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="upwords", description="Universal partial words: verify, construct, decide, search.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, alphabet=True):
        if alphabet:
            p.add_argument("--alphabet", "-a", type=int, default=2, help="alphabet size (default 2)")
        p.add_argument("--json", action="store_true", help="emit JSON lines")
        p.add_argument("--unicode", action="store_true", help="print diamonds as ◊ instead of *")

    p = sub.add_parser("verify", help="check whether a partial word is universal")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--cyclic", action="store_true")
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build an upword from a proved family")
    p.add_argument("--family", required=True, choices=sorted(FAMILY_ALIASES))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    common(p, alphabet=False)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("feasible", help="theorem-backed existence verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--single-diamond", action="store_true")
    p.add_argument("--k", type=int)
    p.add_argument("--length", type=int)
    p.add_argument("--two-diamonds", action="store_true")
    p.add_argument("--shape", type=_ints, help="LX,LY,LZ for x*y*z")
    p.add_argument("--cyclic", action="store_true")
    p.add_argument("--diamonds", type=_ints)
    p.add_argument("--prefix-run", action="store_true")
    p.add_argument("--d", type=int)
    p.add_argument("--template")
    common(p)
    p.set_defaults(func=cmd_feasible)

    p = sub.add_parser("search", help="exhaustive search over a diamond template")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--diamond-at", type=int, action="append", help="1-based diamond position (repeatable)")
    p.add_argument("--diamonds", type=_ints, help="comma-separated diamond positions")
    p.add_argument("--template", help="template string, e.g. '0?*???' (?=free, *=diamond)")
    p.add_argument("--length", type=int)
    p.add_argument("--cyclic", action="store_true")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--first", action="store_true")
    g.add_argument("--all", action="store_true")
    p.add_argument("--node-budget", type=int, default=search.DEFAULT_NODE_BUDGET)
    p.add_argument("--time-budget", type=float)
    p.add_argument("--symmetry", action="store_true", help="emit only canonical representatives")
    p.add_argument("--no-pruning", action="store_true")
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("tables", help="re-check the bundled table data")
    p.add_argument("table", nargs="?", default="all", choices=["1", "2", "3", "all"])
    common(p, alphabet=False)
    p.set_defaults(func=cmd_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionFailed as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_BUG
    except CountMismatch as exc:
        print(f"error: {exc} (expected {exc.expected}, got {exc.actual})", file=sys.stderr)
        return EXIT_USAGE
    except UpwordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
