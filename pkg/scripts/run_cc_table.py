#!/usr/bin/env python3
"""Cluster-character tables: one rigid indecomposable per positive root,
its denominator vector and Laurent value, checked against the cluster
variables produced by mutation."""

from __future__ import annotations

import argparse

from amas.ccmap import cc_bijection_check
from amas.quiver import IceQuiver
from amas.textform import default_names, render_laurent

QUIVERS = {
    "A2": IceQuiver.from_arrows(2, [(1, 2)]),
    "A3": IceQuiver.from_arrows(3, [(1, 2), (2, 3)]),
    "D4": IceQuiver.from_arrows(4, [(1, 2), (2, 3), (2, 4)]),
}


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("types", nargs="*", default=["A2", "A3", "D4"])
    parser.add_argument("--rng", type=int, default=0)
    args = parser.parse_args()
    for name in args.types:
        quiver = QUIVERS[name]
        report = cc_bijection_check(quiver, rng=args.rng)
        names = default_names(quiver.n)
        print(f"== {name}: bijection {'ok' if report.ok else 'FAILED'} ==")
        for entry in report.entries:
            print(
                f"  root {entry.root}  value {render_laurent(entry.value, names)}"
                f"  {'ok' if entry.matched else 'MISMATCH'}"
            )


if __name__ == "__main__":
    main()
