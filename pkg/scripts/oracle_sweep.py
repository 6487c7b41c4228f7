"""Compare the measured multiplicity with the closed form on every component of a grid of (r, m).

    python scripts/oracle_sweep.py --r-max 3 --m-max 3 --extra 2,4 --extra 4,2
"""

import argparse
import time

from jetmult.components import enumerate_minimal_primes, multiplicity_formula
from jetmult.lengthoracle import oracle_multiplicity


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r-max", type=int, default=3)
    ap.add_argument("--m-max", type=int, default=3)
    ap.add_argument("--extra", action="append", default=[], help="additional r,m cell")
    ap.add_argument("--seeds", default="1729,1730")
    args = ap.parse_args()
    seeds = [int(s) for s in args.seeds.split(",")]
    cells = [(r, m) for r in range(1, args.r_max + 1) for m in range(args.m_max + 1)]
    cells += [tuple(int(x) for x in e.split(",")) for e in args.extra]

    mismatches = 0
    total = 0
    start = time.perf_counter()
    print(f"{'r':>2} {'m':>2} {'t':<14} {'oracle':>6} {'formula':>7} {'N':>3} {'sec':>7}")
    for r, m in cells:
        for P in enumerate_minimal_primes(r, m):
            t0 = time.perf_counter()
            res = oracle_multiplicity(r, m, P.composition, seeds)
            expected = multiplicity_formula(P.composition)
            mismatches += res.length != expected
            total += 1
            flag = "" if res.length == expected else "  MISMATCH"
            print(f"{r:>2} {m:>2} {str(P.composition):<14} {res.length:>6} {expected:>7} "
                  f"{res.truncation_order_used:>3} {time.perf_counter() - t0:>7.2f}{flag}")
    print(f"{total} components, {mismatches} mismatches, {time.perf_counter() - start:.1f}s")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
