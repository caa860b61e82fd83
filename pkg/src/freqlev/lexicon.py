"""Dictionary trie with threshold-pruned fuzzy search and suggestion ranking.

The traversal keeps one DP vector per trie node and abandons a branch as
soon as the vector's minimum exceeds the threshold. Every per-step cost is
non-negative (frequencies are < 1), so that minimum can only grow with
depth and pruning never loses a qualifying word.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple

from ._backend import kernels as _k
from .distance import BorderMode, adjusted_measure, levenshtein
from .model import ErrorModel

__all__ = [
    "Lexicon",
    "Suggestion",
    "build",
    "candidates_within",
    "rank_by_classic",
    "read_wordlist",
    "suggest",
]


class _Node:
    __slots__ = ("children", "terminal")

    def __init__(self) -> None:
        self.children: dict[str, _Node] = {}
        self.terminal = False


class Lexicon:
    """Set of dictionary words stored as a trie of single characters."""

    def __init__(self) -> None:
        self._root = _Node()
        self._count = 0
        self.skipped_empty = 0

    def add(self, word: str) -> bool:
        """Insert a word; returns False for duplicates and empty words."""
        if not word:
            self.skipped_empty += 1
            return False
        node = self._root
        for c in word:
            child = node.children.get(c)
            if child is None:
                child = _Node()
                node.children[c] = child
            node = child
        if node.terminal:
            return False
        node.terminal = True
        self._count += 1
        return True

    def __len__(self) -> int:
        return self._count

    def __contains__(self, word: str) -> bool:
        node = self._root
        for c in word:
            node = node.children.get(c)
            if node is None:
                return False
        return node.terminal

    def words(self) -> Iterator[str]:
        """All stored words in ascending code-point order."""
        stack = [("", self._root)]
        while stack:
            prefix, node = stack.pop()
            if node.terminal:
                yield prefix
            for c, child in sorted(node.children.items(), reverse=True):
                stack.append((prefix + c, child))


def build(words: Iterable[str]) -> Lexicon:
    """Lexicon containing the distinct non-empty input words."""
    lex = Lexicon()
    for word in words:
        lex.add(word)
    return lex


def read_wordlist(path: str) -> list[str]:
    """Words from a UTF-8 file, one per line; ``#`` comments and blanks skipped."""
    words = []
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            word = raw.strip()
            if word and not word.startswith("#"):
                words.append(word)
    return words


def candidates_within(
    lex: Lexicon,
    query: str,
    threshold: float,
    model: ErrorModel | None = None,
    mode: BorderMode = BorderMode.PAPER,
) -> dict[str, float]:
    """Dictionary words whose distance from the query is at most the threshold.

    Scores with the classic metric when ``model`` is None, else with the
    weighted measure (the query being the typed word). Matches the
    brute-force scan of the whole dictionary exactly.
    """
    if threshold < 0:
        raise ValueError(f"threshold must be non-negative, got {threshold!r}")
    if model is None:
        return _search_classic(lex, query, threshold)
    return _search_adjusted(lex, query, threshold, model, mode)


def _search_classic(lex: Lexicon, query: str, threshold: float) -> dict[str, float]:
    found: dict[str, float] = {}
    n = len(query)
    row = list(range(n + 1))
    stack = [("", lex._root, row)]
    while stack:
        prefix, node, row = stack.pop()
        if node.terminal and row[n] <= threshold:
            found[prefix] = row[n]
        for c, child in node.children.items():
            nxt = _k.lev_row_extend(row, query, c)
            if min(nxt) <= threshold:
                stack.append((prefix + c, child, nxt))
    return found


def _search_adjusted(
    lex: Lexicon,
    query: str,
    threshold: float,
    model: ErrorModel,
    mode: BorderMode,
) -> dict[str, float]:
    f_ins, f_del, f_sub = model.ord_maps()
    complement = mode is BorderMode.COMPLEMENT
    m = len(query)
    vcosts = [1.0 - f_ins.get(ord(c), 0.0) for c in query]
    col = [0.0] * (m + 1)
    acc = 0.0
    for i, c in enumerate(query, start=1):
        f = f_ins.get(ord(c), 0.0)
        acc += (1.0 - f) if complement else f
        col[i] = acc
    found: dict[str, float] = {}
    stack = [("", lex._root, col)]
    while stack:
        prefix, node, col = stack.pop()
        if node.terminal and col[m] <= threshold:
            found[prefix] = col[m]
        for c, child in node.children.items():
            f = f_del.get(ord(c), 0.0)
            hcost = 1.0 - f
            border = hcost if complement else f
            nxt = _k.adj_col_extend(col, query, c, hcost, border, vcosts, f_sub)
            if min(nxt) <= threshold:
                stack.append((prefix + c, child, nxt))
    return found


class Suggestion(NamedTuple):
    word: str
    weighted_score: float
    classic_distance: int
    rank: int


def suggest(
    lex: Lexicon,
    query: str,
    model: ErrorModel,
    mode: BorderMode = BorderMode.PAPER,
    k: int = 10,
    gen_threshold: int = 2,
) -> list[Suggestion]:
    """Top-k correction candidates for a typed word, best first.

    Candidates are gathered with the classic metric within
    ``gen_threshold`` edits, then each is rescored with the weighted
    measure. Sort order: weighted score, then classic distance, then the
    word itself; ranks are 1-based without gaps.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k!r}")
    if gen_threshold < 1:
        raise ValueError(f"gen_threshold must be at least 1, got {gen_threshold!r}")
    pool = candidates_within(lex, query, gen_threshold)
    scored = sorted(
        (adjusted_measure(query, word, model, mode), int(classic), word)
        for word, classic in pool.items()
    )
    return [
        Suggestion(word, weighted, classic, rank)
        for rank, (weighted, classic, word) in enumerate(scored[:k], start=1)
    ]


def rank_by_classic(lex: Lexicon, query: str, k: int = 10, gen_threshold: int = 2) -> list[Suggestion]:
    """Top-k candidates ordered by classic distance alone.

    Uses the same candidate pool and the same final tie-break as
    ``suggest`` so that ranking differences are attributable to the
    weighted scores only. The weighted_score field carries the classic
    distance as a float.
    """
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k!r}")
    if gen_threshold < 1:
        raise ValueError(f"gen_threshold must be at least 1, got {gen_threshold!r}")
    pool = candidates_within(lex, query, gen_threshold)
    scored = sorted((float(classic), int(classic), word) for word, classic in pool.items())
    return [
        Suggestion(word, score, classic, rank)
        for rank, (score, classic, word) in enumerate(scored[:k], start=1)
    ]
