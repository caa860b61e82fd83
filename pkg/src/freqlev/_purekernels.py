"""Pure-Python fallback for the hot dynamic-programming kernels.

Mirrors ``freqlev._kernels`` operation for operation: both backends must
produce identical integers and bit-identical doubles, so every arithmetic
expression here appears in the same order as in the compiled version.

Cost-map conventions shared by both backends:

* insert/delete frequency maps are keyed by ``ord(char)``,
* the substitution map is keyed by ``(ord(typed) << SUB_KEY_SHIFT) | ord(intended)``,
* absent keys mean frequency 0.
"""

from __future__ import annotations

SUB_KEY_SHIFT = 21  # the largest Unicode scalar, 0x10FFFF, fits in 21 bits


def sub_key(typed: int, intended: int) -> int:
    return (typed << SUB_KEY_SHIFT) | intended


def lev_distance(x: str, y: str) -> int:
    """Classic edit distance (unit-cost insert/delete/substitute)."""
    m = len(x)
    n = len(y)
    if m == 0:
        return n
    if n == 0:
        return m
    prev = list(range(n + 1))
    cur = [0] * (n + 1)
    for i in range(1, m + 1):
        xc = x[i - 1]
        left = i
        cur[0] = left
        for j in range(1, n + 1):
            best = prev[j] + 1
            if left + 1 < best:
                best = left + 1
            diag = prev[j - 1]
            if xc != y[j - 1]:
                diag += 1
            if diag < best:
                best = diag
            cur[j] = best
            left = best
        prev, cur = cur, prev
    return prev[n]


def adj_distance(x, y, f_ins, f_del, f_sub, complement):
    """Weighted measure: x is the typed (erroneous) word, y the intended one.

    Interior moves cost 1 - frequency; the first row/column accumulates the
    raw frequency, or its complement when ``complement`` is true.
    """
    m = len(x)
    n = len(y)
    prev = [0.0] * (n + 1)
    acc = 0.0
    for j in range(1, n + 1):
        f = f_del.get(ord(y[j - 1]), 0.0)
        if complement:
            acc += 1.0 - f
        else:
            acc += f
        prev[j] = acc
    cur = [0.0] * (n + 1)
    for i in range(1, m + 1):
        xo = ord(x[i - 1])
        f = f_ins.get(xo, 0.0)
        if complement:
            left = prev[0] + (1.0 - f)
        else:
            left = prev[0] + f
        cur[0] = left
        vcost = 1.0 - f_ins.get(xo, 0.0)
        for j in range(1, n + 1):
            yo = ord(y[j - 1])
            best = prev[j] + vcost
            cand = left + (1.0 - f_del.get(yo, 0.0))
            if cand < best:
                best = cand
            if xo == yo:
                diag = prev[j - 1]
            else:
                diag = prev[j - 1] + (1.0 - f_sub.get((xo << SUB_KEY_SHIFT) | yo, 0.0))
            if diag < best:
                best = diag
            cur[j] = best
            left = best
        prev, cur = cur, prev
    return prev[n]


def lev_row_extend(prev, query, c):
    """Extend one classic DP row by trie edge ``c`` (query on the column axis)."""
    n = len(query)
    cur = [0] * (n + 1)
    left = prev[0] + 1
    cur[0] = left
    for j in range(1, n + 1):
        best = prev[j] + 1
        if left + 1 < best:
            best = left + 1
        diag = prev[j - 1]
        if query[j - 1] != c:
            diag += 1
        if diag < best:
            best = diag
        cur[j] = best
        left = best
    return cur


def adj_col_extend(prev, query, c, hcost, bordercost, vcosts, f_sub):
    """Extend one weighted DP column by trie edge ``c``.

    The query is the typed word on the row axis; ``vcosts[i]`` is the
    precomputed 1 - insert-frequency of ``query[i]``, ``hcost`` the
    1 - delete-frequency of ``c`` and ``bordercost`` the first-row step.
    """
    m = len(query)
    co = ord(c)
    cur = [0.0] * (m + 1)
    up = prev[0] + bordercost
    cur[0] = up
    for i in range(1, m + 1):
        best = up + vcosts[i - 1]
        cand = prev[i] + hcost
        if cand < best:
            best = cand
        qo = ord(query[i - 1])
        if qo == co:
            diag = prev[i - 1]
        else:
            diag = prev[i - 1] + (1.0 - f_sub.get((qo << SUB_KEY_SHIFT) | co, 0.0))
        if diag < best:
            best = diag
        cur[i] = best
        up = best
    return cur
