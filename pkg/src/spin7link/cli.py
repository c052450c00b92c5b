"""
Command-line front end.

    spin7link eval --strands 3 --braid "1 -2 1 -2"
    spin7link eval --input link.json --format json
    spin7link verify --suite all
    spin7link examples
    spin7link dump-constants

Exit status: 0 on success, 1 when a verification fails, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .braid import NORMALIZATIONS, BadToken, Closure, GeneratorOutOfRange, LinkPresentation, parse_braid
from .invariant import (
    IntegralityFailure,
    derive_markov_weights,
    evaluate_link,
    evaluate_word,
    known_examples,
    match_framing,
    result_json,
)
from .repdata import dump_constants
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="spin7link", description="Exact spinor so7 link invariant of braid closures.")
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate the closure of a braid or a link presentation file")
    src = ev.add_mutually_exclusive_group(required=True)
    src.add_argument("--braid", help='signed generator indices, e.g. "1 -2 1 -2"')
    src.add_argument("--input", help="link presentation JSON file")
    ev.add_argument("--strands", type=int, default=3, choices=(1, 2, 3))
    ev.add_argument("--mirror", action="store_true", help="evaluate the mirror image")
    ev.add_argument("--normalization", choices=NORMALIZATIONS, default=None)
    ev.add_argument("--format", choices=("text", "json"), default="text")

    ve = sub.add_parser("verify", help="run verification suites")
    ve.add_argument("--suite", choices=tuple(SUITES), default="all")
    ve.add_argument("--format", choices=("text", "json"), default="text")

    ex = sub.add_parser("examples", help="printed example values next to computed ones")
    ex.add_argument("--format", choices=("text", "json"), default="text")

    sub.add_parser("dump-constants", help="render every stored matrix")
    return parser


def _cmd_eval(args, out) -> int:
    try:
        if args.input is not None:
            with open(args.input) as fh:
                lp = LinkPresentation.from_json(fh.read())
            if args.normalization:
                lp = LinkPresentation(lp.components, args.normalization)
            if args.mirror:
                lp = LinkPresentation(
                    tuple(Closure(c.word, not c.mirror) for c in lp.components), lp.normalization
                )
        else:
            word = parse_braid(args.braid, args.strands)
            lp = LinkPresentation.single(word, args.mirror, args.normalization or "framed")
    except (BadToken, GeneratorOutOfRange, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        value = evaluate_link(lp)
    except IntegralityFailure as exc:
        print(f"integrality failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "json":
        kappa = derive_markov_weights().kappa
        print(json.dumps(result_json(value, lp.normalization, kappa)), file=out)
    else:
        print(value, file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    reports = run_suite(args.suite)
    ok = all(r.ok for r in reports)
    if args.format == "json":
        print(json.dumps({"suite": args.suite, "ok": ok, "reports": [r.to_dict() for r in reports]}), file=out)
    else:
        for r in reports:
            print(r, file=out)
        print(f"{'PASS' if ok else 'FAIL'}: suite {args.suite}", file=out)
    return EXIT_OK if ok else EXIT_FAIL


def examples_table() -> list[dict]:
    rows = []
    for ex in known_examples():
        value = evaluate_word(ex.word)
        m = match_framing(value, ex.expected, ex.max_k, ex.allow_mirror)
        rows.append(
            {
                "name": ex.name,
                "braid": str(ex.word),
                "strands": ex.word.strands,
                "idle_strands": ex.idle_strands,
                "printed": str(ex.printed),
                "computed": str(value),
                "k": None if m is None else m[0],
                "mirror": None if m is None else m[1],
                "match": m is not None,
            }
        )
    return rows


def _cmd_examples(args, out) -> int:
    rows = examples_table()
    if args.format == "json":
        print(json.dumps(rows, indent=2), file=out)
    else:
        for r in rows:
            print(f"{r['name']}: closure of [{r['braid']}] on {r['strands']} strands", file=out)
            print(f"  printed : {r['printed']}", file=out)
            if r["idle_strands"]:
                print(f"  (computed value carries Delta^{r['idle_strands']} for idle strands)", file=out)
            print(f"  computed: {r['computed']}", file=out)
            status = "match" if r["match"] else "NO MATCH"
            print(f"  {status}: k={r['k']} mirror={r['mirror']}", file=out)
    return EXIT_OK if all(r["match"] for r in rows) else EXIT_FAIL


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    if args.command == "eval":
        return _cmd_eval(args, out)
    if args.command == "verify":
        return _cmd_verify(args, out)
    if args.command == "examples":
        return _cmd_examples(args, out)
    print(dump_constants(), end="", file=out)
    return EXIT_OK


run = main


if __name__ == "__main__":
    sys.exit(main())
