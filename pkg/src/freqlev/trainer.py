"""Turn a corpus of (erroneous, correct) word pairs into error tallies.

Each pair is aligned with the classic (unweighted) distance and its fixed
backtrace tie-break, so training never depends on a previously trained
model and identical corpora always produce identical counts.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from .distance import DELETE, INSERT, SUBSTITUTE, EditOp, backtrace, levenshtein_matrix
from .model import ErrorCounts

__all__ = ["TrainingPair", "classify_pair", "ingest", "iter_corpus", "read_corpus"]


class TrainingPair(NamedTuple):
    erroneous: str
    correct: str


def classify_pair(pair: TrainingPair) -> list[EditOp]:
    """Edit script of one minimal-cost alignment of the pair.

    Insert ops carry a character the typist added, delete ops one the
    typist dropped, substitute ops the (typed, intended) character pair.
    """
    erroneous, correct = pair
    return backtrace(levenshtein_matrix(erroneous, correct), erroneous, correct)


def ingest(pairs: Iterable[TrainingPair]) -> ErrorCounts:
    """Accumulate operation tallies over a stream of pairs.

    Pairs with an empty side are skipped and counted in
    ``skipped_pairs``; match operations contribute nothing.
    """
    counts = ErrorCounts()
    for pair in pairs:
        if not pair.erroneous or not pair.correct:
            counts.skipped_pairs += 1
            continue
        for op in classify_pair(pair):
            if op.kind == INSERT:
                counts.insert[op.source] = counts.insert.get(op.source, 0) + 1
            elif op.kind == DELETE:
                counts.delete[op.target] = counts.delete.get(op.target, 0) + 1
            elif op.kind == SUBSTITUTE:
                key = (op.source, op.target)
                counts.substitute[key] = counts.substitute.get(key, 0) + 1
    return counts


def iter_corpus(
    lines: Iterable[str],
    malformed: list[tuple[int, str]] | None = None,
) -> Iterator[TrainingPair]:
    """Parse corpus lines of the form ``erroneous<TAB>correct``.

    Lines starting with ``#`` and blank lines are skipped. Records without
    exactly two tab-separated fields are dropped and, when ``malformed`` is
    given, recorded there as (line number, reason).
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) != 2:
            if malformed is not None:
                malformed.append(
                    (lineno, f"expected 2 tab-separated fields, got {len(fields)}")
                )
            continue
        yield TrainingPair(fields[0], fields[1])


def read_corpus(path: str) -> tuple[list[TrainingPair], list[tuple[int, str]]]:
    """Read a corpus file; returns (pairs, malformed-line diagnostics)."""
    malformed: list[tuple[int, str]] = []
    with open(path, encoding="utf-8") as fh:
        pairs = list(iter_corpus(fh, malformed))
    return pairs, malformed
