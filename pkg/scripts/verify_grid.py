#!/usr/bin/env python3
"""Sweep a spider parameter grid and check every closed form against brute force."""

import argparse
import sys
import time

from spidernets.cli import compare_point, iter_grid


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--mmax", type=int, default=8)
    parser.add_argument("--kmax", type=int, default=5)
    parser.add_argument("--lmax", type=int, default=6)
    parser.add_argument("--cap", type=int, default=2000, help="largest node count")
    args = parser.parse_args()

    start = time.perf_counter()
    points = iter_grid(args.mmax, args.kmax, args.lmax, args.cap)
    failures = 0
    for p in points:
        for line in compare_point(p):
            failures += 1
            print(f"MISMATCH {line}")
    elapsed = time.perf_counter() - start
    print(f"{len(points)} parameter points verified in {elapsed:.2f}s")
    if failures:
        print(f"{failures} mismatches found")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
