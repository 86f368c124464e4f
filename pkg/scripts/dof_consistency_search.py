#!/usr/bin/env python3
"""Find the degrees of freedom consistent with the published p-values.

The published inference block reports four (t statistic, p-value) pairs
but not the sample size behind them. For each candidate dof this script
recomputes the two-sided p-value from each printed t statistic and
measures the distance to the printed p-value in units of that value's
last printed digit. A pair is consistent when the distance is at most
one unit, i.e. the printed value could have been rounded from ours.

Usage: python3 scripts/dof_consistency_search.py [--lo 10] [--hi 200]
"""

import argparse
import math

from clubval import published_fit_statistics, t_two_sided_p


def last_digit_unit(p: float) -> float:
    """Size of one unit in the last digit of a value printed as d.ddE+xx."""
    exponent = math.floor(math.log10(abs(p)))
    return 10.0 ** (exponent - 2)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lo", type=int, default=10)
    parser.add_argument("--hi", type=int, default=200)
    args = parser.parse_args()

    pairs = [
        (name, vid, t, p)
        for name, block in published_fit_statistics().items()
        for vid, _coef, _se, t, p in block["rows"]
    ]
    print(f"checking {len(pairs)} (t, p) pairs over dof {args.lo}..{args.hi}\n")

    consistent_dofs = []
    best = None
    for dof in range(args.lo, args.hi + 1):
        worst = 0.0
        for _name, _vid, t, p in pairs:
            units = abs(t_two_sided_p(t, dof) - p) / last_digit_unit(p)
            worst = max(worst, units)
        if best is None or worst < best[1]:
            best = (dof, worst)
        if worst <= 1.0:
            consistent_dofs.append((dof, worst))

    if consistent_dofs:
        print("dof values consistent with every printed p-value:")
        for dof, worst in consistent_dofs:
            print(f"  dof={dof}: worst distance {worst:.3f} last-digit units")
    else:
        print("no dof reproduces every printed p-value within one unit")
    print(f"\nclosest overall: dof={best[0]} "
          f"(worst distance {best[1]:.3f} last-digit units)")

    dof = best[0]
    print(f"\nper-pair detail at dof={dof}:")
    for name, vid, t, p in pairs:
        computed = t_two_sided_p(t, dof)
        print(f"  {name} / {vid}: t={t} printed p={p:.2E} computed p={computed:.6E}")


if __name__ == "__main__":
    main()
