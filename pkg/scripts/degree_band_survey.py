#!/usr/bin/env python3
"""Histogram of Picard numbers of seeded random period matrices over a preset field."""

import argparse
from collections import Counter

from picardtorus import families
from picardtorus.analysis import extension_degree, picard_number


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--field", default="cubic", choices=sorted(families.FIELD_PRESETS))
    ap.add_argument("--g", type=int, default=2)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    K = families.preset_field(args.field)
    hist: Counter = Counter()
    for k in range(args.count):
        P = families.random_period_matrix(K, args.g, args.seed + k)
        hist[(extension_degree(P), picard_number(P)[0])] += 1
    g = args.g
    print(f"field {args.field} (degree {K.degree}), g={g}, {args.count} instances")
    print(f"rho ranges: g={g}, g(g+1)/2={g * (g + 1) // 2}, g^2={g * g}")
    for (d, rho), n in sorted(hist.items()):
        print(f"  degree {d:>2}  rho {rho:>3}  x{n}")


if __name__ == "__main__":
    main()
