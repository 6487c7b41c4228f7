"""Component counts and multiplicity sums for a grid of (r, m), checked against
C(m+r, r-1) and r^(m+1)."""

import argparse
import math

from jetmult.components import census


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=6)
    ap.add_argument("--m-max", type=int, default=12)
    args = ap.parse_args()
    bad = 0
    for r in range(1, args.r_max + 1):
        for m in range(args.m_max + 1):
            cen = census(r, m)
            ok = len(cen.components) == math.comb(m + r, r - 1) and cen.mult_sum == r ** (m + 1)
            bad += not ok
            top = max(c.multiplicity_formula for c in cen.components)
            print(f"r={r} m={m:>2} components={len(cen.components):>6} max_mult={top:>12} "
                  f"sum={cen.mult_sum}{'' if ok else '  FAIL'}")
    raise SystemExit(1 if bad else 0)


if __name__ == "__main__":
    main()
