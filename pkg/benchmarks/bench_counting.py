#!/usr/bin/env python3
"""Benchmark the lattice-point counting kernels: compiled (Cython) vs pure
Python, on the dilation counts the Ehrhart oracle actually needs.

Counting is the hot inner loop of the package: the oracle evaluates
|kP ∩ Z^n| for k = 0..d+1 by depth-first search over the coordinate box
with facet pruning.  The two kernels share the algorithm line by line; this
script measures the constant factor between them.

Usage: python benchmarks/bench_counting.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

from sepkit import _countpure
from sepkit.counting import USING_COMPILED_KERNEL, _facet_rows
from sepkit.graphs import Signature

CASES = [
    ("2,2,2", 6),
    ("1,1,1,1,1,1", 6),
    ("3,3", 7),
    ("2,2,3", 7),
    ("1,1,1,1,3", 7),
]


def run(kernel, sig: Signature, k: int, repeat: int) -> tuple[int, float]:
    facets = _facet_rows(sig)
    n = sig.total
    best = float("inf")
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = kernel.count_range(k, n, facets, -k, k)
        best = min(best, time.perf_counter() - t0)
    return value, best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    kernels = [("pure", _countpure)]
    if USING_COMPILED_KERNEL:
        from sepkit import _countcore

        kernels.append(("compiled", _countcore))
    else:
        print("note: compiled kernel unavailable; benchmarking the fallback only")

    print(f"{'signature':>14} {'k':>3} {'count':>10}", end="")
    for name, _ in kernels:
        print(f" {name + ' (s)':>14}", end="")
    if len(kernels) == 2:
        print(f" {'speedup':>9}")
    else:
        print()

    for sig_text, k in CASES:
        sig = Signature.parse(sig_text)
        row = []
        value = None
        for _, kernel in kernels:
            v, t = run(kernel, sig, k, args.repeat)
            if value is None:
                value = v
            assert v == value, "kernels disagree"
            row.append(t)
        print(f"{sig_text:>14} {k:>3} {value:>10}", end="")
        for t in row:
            print(f" {t:>14.4f}", end="")
        if len(row) == 2:
            print(f" {row[0] / row[1]:>8.1f}x")
        else:
            print()


if __name__ == "__main__":
    main()
