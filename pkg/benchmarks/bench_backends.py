#!/usr/bin/env python3
"""Compare the compiled scan/canonicalization kernels against the pure-Python fallback.

Usage:
  python benchmarks/bench_backends.py          # orders 4 and 5
  python benchmarks/bench_backends.py --full   # adds order 6 backtracking
"""

from __future__ import annotations

import argparse
import pathlib
import sys
import time

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from quandles import _kernel  # noqa: E402


def _time(fn, repeats: int = 3) -> tuple[float, object]:
    best = float("inf")
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def _scan_c(n, strategy):
    return _kernel.scan(n, strategy)


def _scan_py(n, strategy):
    cands = _kernel.candidate_columns0(n)
    return _kernel._scan_pure(n, strategy, cands, 0, len(cands[0]), 10**12)


def _canon_c(flats, n):
    return [_kernel.canon_min(f, n) for f in flats]


def _canon_py(flats, n):
    return [_kernel._canon_min_pure(f, n) for f in flats]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--full", action="store_true", help="include order 6 backtracking")
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args(argv)

    if not _kernel.has_speedups():
        print("compiled kernel not available; build it with:")
        print("  python setup.py build_ext --inplace")
        return 1

    jobs: list[tuple[str, int, int]] = [
        ("naive", 4, _kernel.NAIVE),
        ("backtracking", 4, _kernel.BACKTRACKING),
        ("naive", 5, _kernel.NAIVE),
        ("backtracking", 5, _kernel.BACKTRACKING),
    ]
    if args.full:
        jobs.append(("backtracking", 6, _kernel.BACKTRACKING))

    print(f"{'task':<28}{'compiled':>12}{'pure':>12}{'speedup':>10}")
    for name, n, strategy in jobs:
        t_c, out_c = _time(lambda: _scan_c(n, strategy), args.repeats)
        t_p, out_p = _time(lambda: _scan_py(n, strategy), args.repeats)
        assert out_c == out_p, "backend mismatch"
        label = f"scan {name} n={n}"
        print(f"{label:<28}{t_c:>11.4f}s{t_p:>11.4f}s{t_p / t_c:>9.1f}x")

    for n in (5, 6) if args.full else (5,):
        flats, _, _ = _kernel.scan(n, _kernel.BACKTRACKING)
        t_c, out_c = _time(lambda: _canon_c(flats, n), args.repeats)
        t_p, out_p = _time(lambda: _canon_py(flats, n), args.repeats)
        assert out_c == out_p, "backend mismatch"
        label = f"canon_min x{len(flats)} n={n}"
        print(f"{label:<28}{t_c:>11.4f}s{t_p:>11.4f}s{t_p / t_c:>9.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
