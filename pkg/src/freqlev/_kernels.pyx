# cython: language_level=3
# cython: boundscheck=False, wraparound=False
"""Compiled dynamic-programming kernels.

Operation-for-operation mirror of ``freqlev._purekernels``; see that module
for the cost-map conventions. No -ffast-math style shortcuts are taken, so
double results are bit-identical across the two backends.
"""

from libc.stdlib cimport free, malloc

SUB_KEY_SHIFT = 21

cdef long _SHIFT = 21


def sub_key(typed, intended):
    return (typed << _SHIFT) | intended


def lev_distance(str x, str y):
    """Classic edit distance (unit-cost insert/delete/substitute)."""
    cdef Py_ssize_t m = len(x)
    cdef Py_ssize_t n = len(y)
    if m == 0:
        return n
    if n == 0:
        return m
    cdef long *prev = <long *> malloc(2 * (n + 1) * sizeof(long))
    if prev == NULL:
        raise MemoryError()
    cdef long *cur = prev + (n + 1)
    cdef long *tmp
    cdef Py_ssize_t i, j
    cdef long best, diag, left
    cdef Py_UCS4 xc
    try:
        for j in range(n + 1):
            prev[j] = j
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
            tmp = prev
            prev = cur
            cur = tmp
        return prev[n]
    finally:
        free(prev if prev < cur else cur)


def adj_distance(str x, str y, dict f_ins, dict f_del, dict f_sub, bint complement):
    """Weighted measure: x is the typed (erroneous) word, y the intended one."""
    cdef Py_ssize_t m = len(x)
    cdef Py_ssize_t n = len(y)
    cdef double *prev = <double *> malloc(2 * (n + 1) * sizeof(double))
    if prev == NULL:
        raise MemoryError()
    cdef double *cur = prev + (n + 1)
    cdef double *tmp
    cdef Py_ssize_t i, j
    cdef double acc, best, cand, diag, left, vcost, f
    cdef long xo, yo
    cdef object hit
    try:
        prev[0] = 0.0
        acc = 0.0
        for j in range(1, n + 1):
            hit = f_del.get(<long> ord(y[j - 1]))
            f = 0.0 if hit is None else <double> hit
            if complement:
                acc += 1.0 - f
            else:
                acc += f
            prev[j] = acc
        for i in range(1, m + 1):
            xo = <long> ord(x[i - 1])
            hit = f_ins.get(xo)
            f = 0.0 if hit is None else <double> hit
            if complement:
                left = prev[0] + (1.0 - f)
            else:
                left = prev[0] + f
            cur[0] = left
            vcost = 1.0 - f
            for j in range(1, n + 1):
                yo = <long> ord(y[j - 1])
                best = prev[j] + vcost
                hit = f_del.get(yo)
                cand = left + (1.0 - (0.0 if hit is None else <double> hit))
                if cand < best:
                    best = cand
                if xo == yo:
                    diag = prev[j - 1]
                else:
                    hit = f_sub.get((xo << _SHIFT) | yo)
                    diag = prev[j - 1] + (1.0 - (0.0 if hit is None else <double> hit))
                if diag < best:
                    best = diag
                cur[j] = best
                left = best
            tmp = prev
            prev = cur
            cur = tmp
        return prev[n]
    finally:
        free(prev if prev < cur else cur)


def lev_row_extend(list prev, str query, str c):
    """Extend one classic DP row by trie edge ``c`` (query on the column axis)."""
    cdef Py_ssize_t n = len(query)
    cdef list cur = [0] * (n + 1)
    cdef Py_ssize_t j
    cdef long best, diag, left, up
    cdef Py_UCS4 cc = c
    left = <long> prev[0] + 1
    cur[0] = left
    for j in range(1, n + 1):
        up = <long> prev[j]
        best = up + 1
        if left + 1 < best:
            best = left + 1
        diag = <long> prev[j - 1]
        if query[j - 1] != cc:
            diag += 1
        if diag < best:
            best = diag
        cur[j] = best
        left = best
    return cur


def adj_col_extend(list prev, str query, str c, double hcost, double bordercost,
                   list vcosts, dict f_sub):
    """Extend one weighted DP column by trie edge ``c`` (query on the row axis)."""
    cdef Py_ssize_t m = len(query)
    cdef long co = <long> ord(c)
    cdef list cur = [0.0] * (m + 1)
    cdef Py_ssize_t i
    cdef double best, cand, diag, up
    cdef long qo
    cdef object hit
    up = <double> prev[0] + bordercost
    cur[0] = up
    for i in range(1, m + 1):
        best = up + <double> vcosts[i - 1]
        cand = <double> prev[i] + hcost
        if cand < best:
            best = cand
        qo = <long> ord(query[i - 1])
        if qo == co:
            diag = <double> prev[i - 1]
        else:
            hit = f_sub.get((qo << _SHIFT) | co)
            diag = <double> prev[i - 1] + (1.0 - (0.0 if hit is None else <double> hit))
        if diag < best:
            best = diag
        cur[i] = best
        up = best
    return cur
