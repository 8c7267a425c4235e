#!/usr/bin/env python3
"""Table of rho, degree, End rank and both lower bounds for the built-in families."""

import argparse
import json
import time

from picardtorus import families
from picardtorus.analysis import classify
from picardtorus.polarization import PolarizationSearch


def rows(max_g: int):
    for g in range(1, max_g + 1):
        yield f"E_i^{g}", families.cm_power(-1, g)
    for g in range(1, max_g + 1):
        yield f"E_w^{g} (d=-3)", families.cm_power(-3, g)
    for g in range(1, max_g + 1):
        yield f"E_beta^{g}", families.noncm_cubic_power(g)
    yield "E_i x E_sqrt-2", families.cm_pair()
    yield "rho zero", families.rho_zero()


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-g", type=int, default=4)
    ap.add_argument("--json", action="store_true", help="one JSON object per line instead of a table")
    args = ap.parse_args()
    header = f"{'instance':<18}{'g':>3}{'rho':>5}{'deg':>5}{'End':>5}{'b_dij':>7}{'b_deg':>7}  polarized  verdicts  time"
    if not args.json:
        print(header)
        print("-" * len(header))
    for label, P in rows(args.max_g):
        t0 = time.perf_counter()
        r = classify(P, PolarizationSearch(), strict=False)
        dt = time.perf_counter() - t0
        ok = "ok" if not r.failed else ",".join(v.name for v in r.failed)
        if args.json:
            print(json.dumps({"instance": label, **r.to_json(), "seconds": round(dt, 3)}, sort_keys=True))
            continue
        bd = "-" if r.bound_dij is None else str(r.bound_dij)
        bdeg = "-" if r.bound_degree is None else str(r.bound_degree)
        pol = "yes" if r.polarization is not None else "unknown"
        print(f"{label:<18}{r.g:>3}{r.rho:>5}{r.degree_d:>5}{r.end_rank:>5}{bd:>7}{bdeg:>7}  {pol:<9}  {ok:<8}  {dt:.2f}s")


if __name__ == "__main__":
    main()
