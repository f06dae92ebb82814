"""Command-line entry point: ``sylcontact {syllabify,analyze,repair,generate}``.

Exit codes: 0 success, 1 usage error, 2 input parse failure, 3 nothing to
analyze (no usable rows, no CVC.CVC word, or no contact to repair).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .errors import EmptyTableError, LexiconFormatError, RepairError, SylContactError, TokenizationError
from .generate import CategoryWeights, generate_corpus, load_weights
from .inventory import default_inventory, load_inventory_file
from .lexicon import read_lexicon, write_lexicon
from .repair import suggest_repairs
from .report import build_report, write_report
from .stats import Weighting
from .syllabifier import parse_word, shape_of

EXIT_OK, EXIT_USAGE, EXIT_PARSE, EXIT_EMPTY = 0, 1, 2, 3


def _inventory(args):
    return load_inventory_file(args.inventory) if args.inventory else default_inventory()


def _reject_reason(exc: Exception) -> str:
    kind = "untokenizable" if isinstance(exc, TokenizationError) else "unsyllabifiable"
    return f"{kind}: {exc}"


def cmd_syllabify(args, out, err) -> int:
    inv = _inventory(args)
    entries = read_lexicon(args.lexicon)
    ok = 0
    for e in entries:
        try:
            word = parse_word(inv, e.transcription, e)
        except SylContactError as exc:
            print(f"reject\t{e.row}\t{e.orthography}\t{_reject_reason(exc)}", file=err)
            continue
        ok += 1
        print(f"{e.orthography}\t{word}\t{shape_of(word)}", file=out)
    print(f"# {ok} of {len(entries)} rows syllabified", file=err)
    return EXIT_OK if ok else EXIT_EMPTY


def cmd_analyze(args, out, err) -> int:
    inv = _inventory(args)
    entries = read_lexicon(args.lexicon)
    weightings = list(Weighting) if args.weighting == "both" else [Weighting(args.weighting)]
    try:
        bundle = build_report(entries, inv, weightings)
    except EmptyTableError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_EMPTY
    try:
        paths = write_report(bundle, args.out)
    except OSError as exc:
        print(f"error: cannot write to {args.out}: {exc}", file=err)
        return EXIT_USAGE
    s = bundle.summary()
    print(f"{s['analyzed_rows']} CVC.CVC words analyzed, {s['rejected_rows']} rejected", file=out)
    for p in paths:
        print(f"wrote {p}", file=out)
    return EXIT_OK


def cmd_repair(args, out, err) -> int:
    inv = _inventory(args)
    try:
        word = parse_word(inv, args.word)
    except SylContactError as exc:
        print(f"error: {_reject_reason(exc)}", file=err)
        return EXIT_PARSE
    try:
        outcomes = suggest_repairs(inv, word, args.max_slope)
    except RepairError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_EMPTY
    print("rank\tstrategy\tsurface\told_slope\tnew_slope", file=out)
    for i, o in enumerate(outcomes, start=1):
        new = "none" if o.new_slope is None else f"{o.new_slope:+d}"
        print(f"{i}\t{o.strategy}\t{o.surface}\t{o.old_slope:+d}\t{new}", file=out)
    return EXIT_OK


def cmd_generate(args, out, err) -> int:
    inv = _inventory(args)
    if args.mode == "custom-weights":
        if not args.weights:
            print("error: --mode custom-weights requires --weights PATH", file=err)
            return EXIT_USAGE
        weights = load_weights(args.weights)
    else:
        weights = CategoryWeights.uniform()
    entries = generate_corpus(inv, args.n, args.seed, weights)
    header = f"synthetic CVC.CVC lexicon: n={args.n} seed={args.seed} mode={args.mode}\n{weights!r}"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_lexicon(entries, fh, header)
    else:
        write_lexicon(entries, out, header)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sylcontact", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--inventory", type=Path, help="inventory JSON (default: bundled Persian)")

    p = sub.add_parser("syllabify", help="syllabify every row of a lexicon")
    common(p)
    p.add_argument("--lexicon", type=Path, required=True)
    p.set_defaults(func=cmd_syllabify)

    p = sub.add_parser("analyze", help="write slope, positional and PMI tables")
    common(p)
    p.add_argument("--lexicon", type=Path, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--weighting", choices=["type", "token", "both"], default="both")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("repair", help="rank repairs for a marked contact")
    common(p)
    p.add_argument("word")
    p.add_argument("--max-slope", type=int, default=0)
    p.set_defaults(func=cmd_repair)

    p = sub.add_parser("generate", help="emit a synthetic CVC.CVC lexicon")
    common(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mode", choices=["independent", "custom-weights"], default="independent")
    p.add_argument("--weights", type=Path, help="category weights JSON for custom-weights mode")
    p.add_argument("--out", type=Path, help="output file (default: stdout)")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.command == "generate" and args.n <= 0:
        print("error: --n must be positive", file=err)
        return EXIT_USAGE
    try:
        return args.func(args, out, err)
    except LexiconFormatError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    except SylContactError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
