#!/usr/bin/env python3
"""Print the standing number tables: animal counts, path counts, densities.

A quick orientation tool: the four counting series (square/triangular x
point/equerre), the compact powers, average widths, and the chain density
at a few activities.

Usage: python scripts/series_tables.py [--max-size N]
"""

import argparse
from fractions import Fraction

from heappieces import animal_count, average_width, count_paths, evaluate_density
from heappieces.gas import linear_density


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-size", type=int, default=10)
    args = parser.parse_args()
    top = args.max_size

    print(f"{'n':>3} {'sq/point':>10} {'tri/point':>11} {'sq/equerre':>11} "
          f"{'tri/equerre':>12} {'sq/compact':>11} {'tri/compact':>12}")
    for n in range(1, top + 1):
        row = [
            animal_count(n, "square", "point"),
            animal_count(n, "triangular", "point"),
            animal_count(n, "square", "equerre"),
            animal_count(n, "triangular", "equerre"),
            animal_count(n, "square", "compact"),
            animal_count(n, "triangular", "compact"),
        ]
        print(f"{n:>3} " + " ".join(f"{v:>10}" for v in row))
        assert count_paths(n - 1, 1, "prefix") == row[0]
        assert count_paths(n - 1, 2, "prefix") == row[1]

    print("\naverage width of point-source animals (exact):")
    for n in range(1, min(top, 8) + 1):
        sq = average_width(n, "square")
        tri = average_width(n, "triangular")
        print(f"  n={n}: square {sq} = {float(sq):.4f}   triangular {tri} = {float(tri):.4f}")

    print("\nchain gas density series:", linear_density(8))
    for t in (Fraction(1, 10), Fraction(1, 2), 1, 10):
        print(f"  d({t}) = {evaluate_density(t):.12f}")


if __name__ == "__main__":
    main()
