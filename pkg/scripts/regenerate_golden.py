"""Regenerate the frozen CLI outputs under tests/golden/.

Run only after an intentional change to table contents or layout, then
review the diff:  python3 scripts/regenerate_golden.py
"""

from pathlib import Path

from realspin.cli import main

GOLDEN = Path(__file__).resolve().parent.parent / "tests" / "golden"
EXT = {"text": "txt", "json": "json", "latex": "tex", "csv": "csv"}
TARGETS = [("multipole-table", ["--k-max", "4"], "multipole_k4"),
           ("spin-table", ["--two-s", "2"], "spin_2s2")]


def main_() -> None:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for cmd, args, stem in TARGETS:
        for fmt, ext in EXT.items():
            out = GOLDEN / f"{stem}.{ext}"
            code = main([cmd, *args, "--format", fmt, "--out", str(out)])
            if code:
                raise SystemExit(f"{cmd} {fmt} exited with {code}")
            print(out.relative_to(GOLDEN.parent.parent))


if __name__ == "__main__":
    main_()
