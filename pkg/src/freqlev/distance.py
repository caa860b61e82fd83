"""Classic and frequency-weighted edit distances via dynamic programming.

Words are ordinary Python strings, i.e. sequences of Unicode scalar values;
lengths are counted in scalars, never bytes, and the empty word is allowed.
The weighted measure is directional: the first argument is the typed
(erroneous) word, the second the intended dictionary word.
"""

from __future__ import annotations

import enum
from typing import TYPE_CHECKING, NamedTuple

from ._backend import BACKEND, kernels as _k

if TYPE_CHECKING:
    from .model import ErrorModel

__all__ = [
    "BACKEND",
    "BorderMode",
    "EditOp",
    "adjusted_matrix",
    "adjusted_measure",
    "backtrace",
    "levenshtein",
    "levenshtein_matrix",
]

MATCH = "match"
SUBSTITUTE = "substitute"
INSERT = "insert"
DELETE = "delete"


class BorderMode(enum.Enum):
    """How the first DP row/column accumulates per-character costs.

    PAPER adds the raw frequencies; COMPLEMENT adds 1 - frequency, which is
    consistent with the interior move costs and makes the weighted measure
    reduce to the classic distance under an all-zero model.
    """

    PAPER = "paper"
    COMPLEMENT = "complement"


class EditOp(NamedTuple):
    """One step of an edit script transforming the typed word into the intended one.

    ``source`` is the character consumed from the typed (erroneous) word,
    ``target`` the one from the intended word; either may be ``""`` when the
    operation touches only one side.
    """

    kind: str
    source: str
    target: str

    @classmethod
    def match(cls, c: str) -> "EditOp":
        return cls(MATCH, c, c)

    @classmethod
    def substitute(cls, typed: str, intended: str) -> "EditOp":
        return cls(SUBSTITUTE, typed, intended)

    @classmethod
    def insert(cls, c: str) -> "EditOp":
        """The typed word contains an extra character ``c``."""
        return cls(INSERT, c, "")

    @classmethod
    def delete(cls, c: str) -> "EditOp":
        """The typed word is missing a character ``c`` of the intended word."""
        return cls(DELETE, "", c)


def levenshtein(x: str, y: str) -> int:
    """Minimal number of single-character inserts, deletes and substitutions."""
    return _k.lev_distance(x, y)


def levenshtein_matrix(x: str, y: str) -> list[list[int]]:
    """Full (len(x)+1) x (len(y)+1) classic DP grid; cell [-1][-1] is the distance."""
    m = len(x)
    n = len(y)
    grid = [[0] * (n + 1) for _ in range(m + 1)]
    grid[0] = list(range(n + 1))
    for i in range(1, m + 1):
        row = grid[i]
        above = grid[i - 1]
        row[0] = i
        xc = x[i - 1]
        for j in range(1, n + 1):
            best = above[j] + 1
            if row[j - 1] + 1 < best:
                best = row[j - 1] + 1
            diag = above[j - 1]
            if xc != y[j - 1]:
                diag += 1
            if diag < best:
                best = diag
            row[j] = best
    return grid


def adjusted_measure(
    x: str,
    y: str,
    model: "ErrorModel",
    mode: BorderMode = BorderMode.PAPER,
) -> float:
    """Frequency-weighted measure of typing x where y was intended.

    Interior moves cost 1 minus the trained frequency of the corresponding
    error, so frequent errors pull the measure down and break ties between
    candidates at the same classic distance. Not symmetric in general.
    """
    f_ins, f_del, f_sub = model.ord_maps()
    return _k.adj_distance(x, y, f_ins, f_del, f_sub, mode is BorderMode.COMPLEMENT)


def adjusted_matrix(
    x: str,
    y: str,
    model: "ErrorModel",
    mode: BorderMode = BorderMode.PAPER,
) -> list[list[float]]:
    """Full weighted DP grid; cell [-1][-1] equals ``adjusted_measure(x, y, ...)``."""
    f_ins, f_del, f_sub = model.ord_maps()
    complement = mode is BorderMode.COMPLEMENT
    shift = _k.SUB_KEY_SHIFT
    m = len(x)
    n = len(y)
    grid = [[0.0] * (n + 1) for _ in range(m + 1)]
    first = grid[0]
    acc = 0.0
    for j in range(1, n + 1):
        f = f_del.get(ord(y[j - 1]), 0.0)
        acc += (1.0 - f) if complement else f
        first[j] = acc
    for i in range(1, m + 1):
        row = grid[i]
        above = grid[i - 1]
        xo = ord(x[i - 1])
        f = f_ins.get(xo, 0.0)
        row[0] = above[0] + ((1.0 - f) if complement else f)
        vcost = 1.0 - f
        for j in range(1, n + 1):
            yo = ord(y[j - 1])
            best = above[j] + vcost
            cand = row[j - 1] + (1.0 - f_del.get(yo, 0.0))
            if cand < best:
                best = cand
            if xo == yo:
                diag = above[j - 1]
            else:
                diag = above[j - 1] + (1.0 - f_sub.get((xo << shift) | yo, 0.0))
            if diag < best:
                best = diag
            row[j] = best
    return grid


def backtrace(matrix: list[list[int]], x: str, y: str) -> list[EditOp]:
    """Recover one minimal edit script from a classic DP grid.

    Ties are broken deterministically: diagonal (match/substitute) first,
    then the row move (insert), then the column move (delete). The grid must
    be the one produced by ``levenshtein_matrix(x, y)``.
    """
    m = len(x)
    n = len(y)
    if len(matrix) != m + 1 or any(len(row) != n + 1 for row in matrix):
        raise ValueError(
            f"matrix shape {len(matrix)}x{len(matrix[0]) if matrix else 0} does not "
            f"fit words of lengths {m} and {n}"
        )
    ops: list[EditOp] = []
    i, j = m, n
    while i > 0 or j > 0:
        cell = matrix[i][j]
        if i > 0 and j > 0:
            if x[i - 1] == y[j - 1] and cell == matrix[i - 1][j - 1]:
                ops.append(EditOp.match(x[i - 1]))
                i -= 1
                j -= 1
                continue
            if x[i - 1] != y[j - 1] and cell == matrix[i - 1][j - 1] + 1:
                ops.append(EditOp.substitute(x[i - 1], y[j - 1]))
                i -= 1
                j -= 1
                continue
        if i > 0 and cell == matrix[i - 1][j] + 1:
            ops.append(EditOp.insert(x[i - 1]))
            i -= 1
            continue
        if j > 0 and cell == matrix[i][j - 1] + 1:
            ops.append(EditOp.delete(y[j - 1]))
            j -= 1
            continue
        raise ValueError(f"matrix is not a valid DP grid at cell ({i}, {j})")
    ops.reverse()
    return ops
