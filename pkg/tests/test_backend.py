"""Backend selection and compiled-vs-pure kernel agreement."""

import os
import random
import subprocess
import sys

import pytest
from conftest import rand_model, rand_word

import freqlev
from freqlev import _purekernels as pure

compiled = pytest.importorskip(
    "freqlev._kernels", reason="compiled extension not built on this install"
)


def test_active_backend_reported():
    assert freqlev.BACKEND in ("cython", "python")


def test_env_override_forces_pure_backend():
    out = subprocess.run(
        [sys.executable, "-c", "import freqlev; print(freqlev.BACKEND)"],
        env={**os.environ, "FREQLEV_PURE": "1"},
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


def test_lev_distance_agreement():
    rng = random.Random(808)
    for _ in range(2000):
        x = rand_word(rng, "abcde", 10)
        y = rand_word(rng, "abcde", 10)
        assert compiled.lev_distance(x, y) == pure.lev_distance(x, y)


def test_adj_distance_bit_identical():
    rng = random.Random(809)
    for _ in range(300):
        model = rand_model(rng, "abcd")
        f_ins, f_del, f_sub = model.ord_maps()
        for _ in range(8):
            x = rand_word(rng, "abcd", 9)
            y = rand_word(rng, "abcd", 9)
            for comp in (False, True):
                a = compiled.adj_distance(x, y, f_ins, f_del, f_sub, comp)
                b = pure.adj_distance(x, y, f_ins, f_del, f_sub, comp)
                # Same expression order in both backends: exact equality, no tolerance.
                assert a == b, (x, y, comp)


def test_row_and_col_extension_bit_identical():
    rng = random.Random(810)
    for _ in range(500):
        model = rand_model(rng, "abc")
        f_ins, f_del, f_sub = model.ord_maps()
        query = rand_word(rng, "abc", 8)
        c = rng.choice("abc")
        prev_row = [rng.randint(0, 6) for _ in range(len(query) + 1)]
        assert compiled.lev_row_extend(prev_row, query, c) == pure.lev_row_extend(
            prev_row, query, c
        )
        prev_col = [rng.uniform(0.0, 6.0) for _ in range(len(query) + 1)]
        hcost = 1.0 - f_del.get(ord(c), 0.0)
        border = rng.choice([hcost, f_del.get(ord(c), 0.0)])
        vcosts = [1.0 - f_ins.get(ord(ch), 0.0) for ch in query]
        assert compiled.adj_col_extend(
            prev_col, query, c, hcost, border, vcosts, f_sub
        ) == pure.adj_col_extend(prev_col, query, c, hcost, border, vcosts, f_sub)


def test_sub_key_layout():
    assert compiled.SUB_KEY_SHIFT == pure.SUB_KEY_SHIFT
    assert pure.sub_key(ord("q"), ord("f")) == (ord("q") << 21) | ord("f")
    assert compiled.sub_key(0x10FFFF, 0x10FFFF) == pure.sub_key(0x10FFFF, 0x10FFFF)
