"""Build spin algebras of increasing size, time them, and cross-check each
against the matrix representation.  Also reports whether each multipole
level is represented by Hermitian or anti-Hermitian matrices.

    REALSPIN_TWO_S_CAP=6 python3 scripts/spin_scaling.py --two-s-max 6
"""

import argparse
import time

from realspin import oracle
from realspin.spinalg import build_spin_algebra, check_associativity, random_triples


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--two-s-max", type=int, default=4)
    ap.add_argument("--triples", type=int, default=200)
    args = ap.parse_args()

    print(f"{'2s':>3} {'dim':>4} {'build s':>8} {'assoc':>6} {'oracle dev':>11}  hermiticity by level")
    for two_s in range(args.two_s_max + 1):
        t0 = time.perf_counter()
        table = build_spin_algebra(two_s)
        dt = time.perf_counter() - t0
        assoc = check_associativity(table, random_triples(table.dim, args.triples, seed=two_s))
        rep = oracle.compare_structure_constants(table)
        herm = " ".join(oracle.hermiticity(k, two_s)[:4] for k in range(two_s + 1))
        print(f"{two_s:>3} {table.dim:>4} {dt:>8.2f} {str(assoc):>6} {rep.max_deviation:>11.2e}  {herm}")


if __name__ == "__main__":
    main()
