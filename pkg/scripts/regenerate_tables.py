"""Write the multipole and spin-algebra tables in every format to a directory.

    python3 scripts/regenerate_tables.py --out tables --k-max 6 --two-s-max 4
"""

import argparse
import time
from pathlib import Path

from realspin import render
from realspin.spinalg import spin_algebra

EXT = {"text": "txt", "json": "json", "latex": "tex", "csv": "csv"}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", type=Path, default=Path("tables"))
    ap.add_argument("--k-max", type=int, default=6)
    ap.add_argument("--two-s-max", type=int, default=4)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)

    t0 = time.perf_counter()
    for fmt, ext in EXT.items():
        (args.out / f"multipoles_k{args.k_max}.{ext}").write_text(render.multipole_table(args.k_max, fmt))
    print(f"multipoles k <= {args.k_max}: {time.perf_counter() - t0:.1f} s")

    for two_s in range(args.two_s_max + 1):
        t0 = time.perf_counter()
        table = spin_algebra(two_s)
        for fmt, ext in EXT.items():
            (args.out / f"spin_2s{two_s}.{ext}").write_text(render.spin_table(table, fmt))
        print(f"spin 2s = {two_s}: dimension {table.dim}, {time.perf_counter() - t0:.1f} s")


if __name__ == "__main__":
    main()
