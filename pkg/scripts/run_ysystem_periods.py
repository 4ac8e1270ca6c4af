#!/usr/bin/env python3
"""Minimal Y-system periods for pairs of Dynkin diagrams.

For each pair the minimal period is computed with exact rational-function
arithmetic and compared against the bound 2(h + h')."""

from __future__ import annotations

import argparse
import time

from amas.roots import DynkinType
from amas.ysystem import ysystem_period

DEFAULT_PAIRS = ["A1:A1", "A2:A1", "A3:A1", "A4:A1", "A2:A2", "D4:A1"]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("pairs", nargs="*", default=DEFAULT_PAIRS, help="like A2:A1")
    parser.add_argument("--full-init", action="store_true")
    args = parser.parse_args()
    print(f"{'pair':>10} {'period':>8} {'2(h+h′)':>8} {'divides':>8} {'time':>8}")
    for pair in args.pairs:
        left, _, right = pair.partition(":")
        delta = DynkinType.parse(left)
        delta_prime = DynkinType.parse(right)
        started = time.monotonic()
        report = ysystem_period(delta, delta_prime, full=args.full_init)
        elapsed = time.monotonic() - started
        print(
            f"{f'({delta},{delta_prime})':>10} {report.period:>8} {report.bound:>8} "
            f"{'yes' if report.divides else 'NO':>8} {elapsed:>7.2f}s"
        )


if __name__ == "__main__":
    main()
