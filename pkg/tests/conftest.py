"""Shared test oracles and helpers.

The oracles are deliberately literal recursions of the distance
definitions, with no memoization and no shared code with the package, so
they can arbitrate what the DP implementations should return.
"""

from __future__ import annotations

import random

from freqlev import ErrorModel

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def lev_rec(x: str, y: str) -> int:
    """Exponential recursion for the classic distance; keep inputs short."""
    if not x:
        return len(y)
    if not y:
        return len(x)
    cost = 0 if x[-1] == y[-1] else 1
    return min(
        lev_rec(x[:-1], y) + 1,
        lev_rec(x, y[:-1]) + 1,
        lev_rec(x[:-1], y[:-1]) + cost,
    )


def adj_rec(x: str, y: str, model: ErrorModel, complement: bool) -> float:
    """Exponential recursion for the weighted measure; keep inputs short."""
    if not x and not y:
        return 0.0
    if not x:
        f = model.f_delete.get(y[-1], 0.0)
        return adj_rec(x, y[:-1], model, complement) + ((1.0 - f) if complement else f)
    if not y:
        f = model.f_insert.get(x[-1], 0.0)
        return adj_rec(x[:-1], y, model, complement) + ((1.0 - f) if complement else f)
    if x[-1] == y[-1]:
        diag = adj_rec(x[:-1], y[:-1], model, complement)
    else:
        diag = adj_rec(x[:-1], y[:-1], model, complement) + (
            1.0 - model.f_substitute.get((x[-1], y[-1]), 0.0)
        )
    return min(
        adj_rec(x[:-1], y, model, complement) + (1.0 - model.f_insert.get(x[-1], 0.0)),
        adj_rec(x, y[:-1], model, complement) + (1.0 - model.f_delete.get(y[-1], 0.0)),
        diag,
    )


def rand_word(rng: random.Random, alphabet: str, max_len: int, min_len: int = 0) -> str:
    n = rng.randint(min_len, max_len)
    return "".join(rng.choice(alphabet) for _ in range(n))


def rand_model(rng: random.Random, alphabet: str) -> ErrorModel:
    """Random valid model over the alphabet; any key subset, values in [0, 1)."""
    ins = {c: rng.uniform(0.0, 0.95) for c in alphabet if rng.random() < 0.6}
    dele = {c: rng.uniform(0.0, 0.95) for c in alphabet if rng.random() < 0.6}
    sub = {
        (a, b): rng.uniform(0.0, 0.95)
        for a in alphabet
        for b in alphabet
        if a != b and rng.random() < 0.3
    }
    return ErrorModel(ins, dele, sub)
