"""Compare the compiled kernels against the pure-Python fallback.

Times the two DP kernels on identical seeded workloads in-process, checks
that they agree on every result, and optionally times the full evaluate
pipeline once per backend through the CLI (the fallback is selected with
FREQLEV_PURE=1).

Usage: python benchmarks/bench_backends.py [--pairs N] [--pipeline]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import tempfile
import time

from freqlev import ErrorModel, save_model
from freqlev import _purekernels as pure

try:
    from freqlev import _kernels as compiled
except ImportError:
    compiled = None


def make_workload(pairs: int, seed: int = 1):
    rng = random.Random(seed)
    words = lambda: "".join(rng.choice("abcdefgh") for _ in range(rng.randint(3, 12)))
    return [(words(), words()) for _ in range(pairs)]


def bench(label, fn, workload, *args):
    started = time.perf_counter()
    results = [fn(x, y, *args) for x, y in workload]
    elapsed = time.perf_counter() - started
    rate = len(workload) / elapsed
    print(f"  {label:<22} {elapsed:8.3f}s   {rate:12,.0f} pairs/s")
    return elapsed, results


def bench_kernels(pairs: int) -> None:
    workload = make_workload(pairs)
    model = ErrorModel(
        {"a": 0.1, "b": 0.2},
        {"c": 0.1, "d": 0.3},
        {("a", "b"): 0.4, ("c", "d"): 0.2, ("e", "f"): 0.3},
    )
    f_ins, f_del, f_sub = model.ord_maps()

    print(f"classic distance, {pairs} random pairs (lengths 3-12):")
    t_pure, r_pure = bench("pure python", pure.lev_distance, workload)
    if compiled is not None:
        t_comp, r_comp = bench("compiled", compiled.lev_distance, workload)
        assert r_pure == r_comp, "backends disagree on classic distances"
        print(f"  speedup {t_pure / t_comp:22.1f}x")

    print("weighted measure, same pairs:")
    t_pure, r_pure = bench(
        "pure python", pure.adj_distance, workload, f_ins, f_del, f_sub, False
    )
    if compiled is not None:
        t_comp, r_comp = bench(
            "compiled", compiled.adj_distance, workload, f_ins, f_del, f_sub, False
        )
        assert r_pure == r_comp, "backends disagree on weighted measures"
        print(f"  speedup {t_pure / t_comp:22.1f}x")


def bench_pipeline() -> None:
    rng = random.Random(2)
    words = sorted({"".join(rng.choice("abcdef") for _ in range(rng.randint(4, 7)))
                    for _ in range(3000)})
    with tempfile.TemporaryDirectory() as tmp:
        dictionary = os.path.join(tmp, "dict.txt")
        with open(dictionary, "w", encoding="utf-8") as fh:
            fh.write("".join(w + "\n" for w in words))
        model_path = os.path.join(tmp, "model.json")
        save_model(ErrorModel({"a": 0.05}, {"b": 0.05}, {("a", "e"): 0.4}), model_path)
        print("evaluate pipeline, 3000-word dictionary, 300 trials:")
        reports = []
        for label, env in (("compiled", {}), ("pure python", {"FREQLEV_PURE": "1"})):
            cmd = [sys.executable, "-m", "freqlev.cli", "evaluate", dictionary,
                   "--model", model_path, "--trials", "300", "--seed", "9",
                   "--out", os.path.join(tmp, label.replace(" ", "-"))]
            started = time.perf_counter()
            subprocess.run(cmd, check=True, capture_output=True,
                           env={**os.environ, **env})
            print(f"  {label:<22} {time.perf_counter() - started:8.3f}s")
            with open(os.path.join(tmp, label.replace(" ", "-") + ".json"), "rb") as fh:
                reports.append(fh.read())
        assert reports[0] == reports[1], "backends disagree on the evaluation report"
        print("  reports byte-identical across backends")


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--pairs", type=int, default=20000,
                        help="word pairs per kernel benchmark")
    parser.add_argument("--pipeline", action="store_true",
                        help="also time the CLI evaluate pipeline per backend")
    args = parser.parse_args()
    if compiled is None:
        print("compiled extension unavailable; timing the fallback only")
    bench_kernels(args.pairs)
    if args.pipeline:
        bench_pipeline()


if __name__ == "__main__":
    main()
