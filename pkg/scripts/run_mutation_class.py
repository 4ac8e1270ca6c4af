#!/usr/bin/env python3
"""Enumerate the mutation class of the 10-vertex triangle-grid quiver.

Prints the class size (5739 up to isomorphism), confirms that the two other
quivers of the same family lie in the class, and optionally writes all three
as quiver JSON files usable with `amas class -q <file>`.
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from amas.jsonio import quiver_to_json
from amas.quiver import IceQuiver, mutation_class

GRID_10 = IceQuiver.from_arrows(
    10,
    [
        (2, 1), (1, 3), (3, 2), (4, 2), (2, 5), (5, 3), (3, 6), (5, 4),
        (7, 4), (4, 8), (6, 5), (8, 5), (5, 9), (9, 6), (6, 10), (8, 7),
        (9, 8), (10, 9),
    ],
)
PARTNER_B = IceQuiver.from_arrows(
    10,
    [(10, 1), (9, 2), (3, 4), (4, 6), (9, 4), (5, 7), (10, 5), (6, 7), (7, 8), (8, 9)],
)
PARTNER_C = IceQuiver.from_arrows(
    10,
    [(10, 1), (2, 3), (10, 2), (3, 5), (4, 6), (5, 6), (6, 7), (7, 8), (8, 9), (9, 10)],
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--budget", type=int, default=10_000)
    parser.add_argument("--write-dir", default=None, help="dump the three quivers as JSON")
    args = parser.parse_args()

    if args.write_dir:
        out = Path(args.write_dir)
        out.mkdir(parents=True, exist_ok=True)
        for name, quiver in [("grid10a", GRID_10), ("grid10b", PARTNER_B), ("grid10c", PARTNER_C)]:
            (out / f"{name}.json").write_text(json.dumps(quiver_to_json(quiver), indent=2))
        print(f"wrote quiver files to {out}")

    started = time.monotonic()
    members, complete = mutation_class(GRID_10, budget=args.budget)
    elapsed = time.monotonic() - started
    print(f"class size: {len(members)} ({'complete' if complete else 'incomplete'}) in {elapsed:.1f}s")
    matrices = {q.b for q in members}
    for name, quiver in [("B", PARTNER_B), ("C", PARTNER_C)]:
        inside = quiver.canonical()[0].b in matrices
        print(f"partner {name} in class: {inside}")


if __name__ == "__main__":
    main()
