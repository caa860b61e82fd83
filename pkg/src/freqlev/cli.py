"""Command-line front end: distance, train, correct, evaluate.

Every subcommand is a one-shot batch run whose stdout depends only on the
flags, the input file bytes and the seed; diagnostics go to stderr and a
nonzero exit code means the operation did not complete.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, TextIO

from . import evaluate as ev
from . import lexicon as lx
from . import model as md
from . import trainer as tr
from .distance import BorderMode, adjusted_matrix, adjusted_measure, levenshtein, levenshtein_matrix

__all__ = ["main"]


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in an unsigned 64-bit integer")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="freqlev",
        description="Spelling correction with an error-frequency-weighted edit distance.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("distance", help="score one word pair")
    p.add_argument("x", help="typed (erroneous) word")
    p.add_argument("y", help="intended (dictionary) word")
    p.add_argument("--model", help="error-model JSON; adds the weighted score")
    p.add_argument("--mode", choices=["paper", "complement"], default="paper",
                   help="border handling of the weighted measure")
    p.add_argument("--matrix", action="store_true", help="print the full DP grid(s)")
    p.set_defaults(run=cmd_distance)

    p = sub.add_parser("train", help="build an error model from a pair corpus")
    p.add_argument("corpus", help="TSV corpus: erroneous<TAB>correct per line")
    p.add_argument("out", help="path of the model JSON to write")
    p.add_argument("--norm", choices=["grand", "category"], default="grand",
                   help="divide counts by the grand total or per category")
    p.add_argument("--smooth", type=float, metavar="K",
                   help="add-k smoothing over the corpus alphabet")
    p.set_defaults(run=cmd_train)

    p = sub.add_parser("correct", help="suggest corrections for words on stdin")
    p.add_argument("dictionary", help="word list, one per line")
    p.add_argument("--model", required=True, help="error-model JSON")
    p.add_argument("--mode", choices=["paper", "complement"], default="paper")
    p.add_argument("--k", type=int, default=10, help="suggestions per word")
    p.add_argument("--threshold", type=int, default=2,
                   help="classic-distance bound for candidate generation")
    p.set_defaults(run=cmd_correct)

    p = sub.add_parser("evaluate", help="compare both rankers on synthesized errors")
    p.add_argument("dictionary", help="word list, one per line")
    p.add_argument("--model", required=True, help="error-model JSON")
    p.add_argument("--mode", choices=["paper", "complement"], default="paper")
    p.add_argument("--trials", type=int, default=100, help="number of synthesized words")
    p.add_argument("--errors", type=int, default=1, help="operations applied per word")
    p.add_argument("--seed", type=_seed, default=0, help="unsigned 64-bit RNG seed")
    p.add_argument("--k", type=int, default=10, help="ranking depth per word")
    p.add_argument("--threshold", type=int, default=2,
                   help="classic-distance bound for candidate generation")
    p.add_argument("--jobs", type=int, default=1, help="worker threads for the trials")
    p.add_argument("--out", default="report", metavar="PREFIX",
                   help="write PREFIX.txt and PREFIX.json")
    p.set_defaults(run=cmd_evaluate)
    return parser


def cmd_distance(args: argparse.Namespace, out: TextIO) -> int:
    print(f"classic {levenshtein(args.x, args.y)}", file=out)
    if args.matrix:
        for row in levenshtein_matrix(args.x, args.y):
            print(" ".join(str(cell) for cell in row), file=out)
    if args.model:
        model = md.load_model(args.model)
        mode = BorderMode(args.mode)
        print(f"weighted {adjusted_measure(args.x, args.y, model, mode):.4f}", file=out)
        if args.matrix:
            for row in adjusted_matrix(args.x, args.y, model, mode):
                print(" ".join(f"{cell:.4f}" for cell in row), file=out)
    return 0


def cmd_train(args: argparse.Namespace, out: TextIO) -> int:
    pairs, malformed = tr.read_corpus(args.corpus)
    for lineno, reason in malformed:
        print(f"{args.corpus}:{lineno}: {reason}", file=sys.stderr)
    counts = tr.ingest(pairs)
    if counts.skipped_pairs:
        print(f"skipped {counts.skipped_pairs} pairs with an empty side", file=sys.stderr)
    print(f"insert {counts.insert_total}", file=out)
    print(f"delete {counts.delete_total}", file=out)
    print(f"substitute {counts.substitute_total}", file=out)
    print(f"total {counts.grand_total}", file=out)
    if args.smooth is not None:
        alphabet = {c for pair in pairs for c in pair.erroneous + pair.correct}
        counts = md.smooth(counts, args.smooth, alphabet)
    model = md.from_counts(counts, md.NormalizationMode(args.norm))
    md.save_model(model, args.out)
    return 0


def cmd_correct(args: argparse.Namespace, out: TextIO) -> int:
    model = md.load_model(args.model)
    lex = lx.build(lx.read_wordlist(args.dictionary))
    mode = BorderMode(args.mode)
    for raw in sys.stdin:
        word = raw.rstrip("\r\n")
        if not word:
            continue
        suggestions = lx.suggest(lex, word, model, mode, args.k, args.threshold)
        if not suggestions:
            print("no-candidates", file=out)
        for s in suggestions:
            print(f"{s.word}\t{s.weighted_score:.4f}\t{s.classic_distance}", file=out)
        print(file=out)
    return 0


def cmd_evaluate(args: argparse.Namespace, out: TextIO) -> int:
    if args.trials < 1:
        raise ValueError(f"trials must be at least 1, got {args.trials}")
    model = md.load_model(args.model)
    lex = lx.build(lx.read_wordlist(args.dictionary))
    # A model trained without smoothing may lack positive frequencies; the
    # uniform fallback keeps synthesis possible either way.
    spec = ev.SynthSpec(model, args.trials, args.errors, args.seed, uniform_fallback=True)
    pairs = ev.synth_errors(lex, spec)
    report = ev.compare_rankers(
        lex, pairs, model, BorderMode(args.mode), args.k, args.threshold, args.jobs
    )
    text = report.to_text()
    with open(args.out + ".txt", "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    with open(args.out + ".json", "w", encoding="utf-8", newline="") as fh:
        fh.write(report.to_json())
    out.write(text)
    return 0


def main(argv: Iterable[str] | None = None) -> int:
    args = _build_parser().parse_args(argv if argv is None else list(argv))
    try:
        return args.run(args, sys.stdout)
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
