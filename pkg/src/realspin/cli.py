"""Command-line entry point: table regeneration and identity verification.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
import time

from . import render

K_CAP_ENV = "REALSPIN_K_MAX"
TWO_S_CAP_ENV = "REALSPIN_TWO_S_MAX"
DEGREE_CAP_ENV = "REALSPIN_DEGREE_CAP"


class UsageError(Exception):
    pass


def _cap(env: str, default: int) -> int:
    try:
        return int(os.environ.get(env, default))
    except ValueError:
        raise UsageError(f"{env} must be an integer") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_multipole_table(args) -> int:
    cap = _cap(K_CAP_ENV, 6)
    if not 0 <= args.k_max <= cap:
        raise UsageError(f"--k-max must be between 0 and {cap} (set {K_CAP_ENV} to raise the cap)")
    _emit(render.multipole_table(args.k_max, args.format), args.out)
    return 0


def cmd_spin_table(args) -> int:
    from .spinalg import spin_algebra

    cap = _cap(TWO_S_CAP_ENV, 4)
    if not 0 <= args.two_s <= cap:
        raise UsageError(f"--two-s must be between 0 and {cap} (set {TWO_S_CAP_ENV} to raise the cap)")
    _emit(render.spin_table(spin_algebra(args.two_s), args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    from .verify import run_all

    two_s_cap, k_cap = _cap(TWO_S_CAP_ENV, 4), _cap(K_CAP_ENV, 6)
    if not 0 <= args.two_s <= two_s_cap:
        raise UsageError(f"--two-s must be between 0 and {two_s_cap}")
    if not 0 <= args.k_max <= k_cap:
        raise UsageError(f"--k-max must be between 0 and {k_cap}")
    failed = []
    lines = []
    t0 = time.perf_counter()
    for res in run_all(args.two_s, args.k_max, with_oracle=args.oracle):
        status = "PASS" if res.passed else "FAIL"
        extra = f" ({res.detail})" if res.detail else ""
        line = f"{status}  {res.name}  [{res.anchor}]{extra}"
        lines.append(line)
        if not args.out:
            print(line, flush=True)
        if not res.passed:
            failed.append(res.name)
    summary = f"{len(lines) - len(failed)}/{len(lines)} identities hold ({time.perf_counter() - t0:.1f} s)"
    lines.append(summary)
    if args.out:
        _emit("\n".join(lines) + "\n", args.out)
    else:
        print(summary)
    for name in failed:
        print(f"failing identity: {name}", file=sys.stderr)
    return 1 if failed else 0


def cmd_decompose(args) -> int:
    from .expr import ParseError, parse_element
    from .spinalg import CentralMultipoleBasis

    try:
        x = parse_element(args.element)
    except ParseError as exc:
        raise UsageError(f"parse error: {exc}") from None
    cap = _cap(DEGREE_CAP_ENV, 12)
    if x.degree > cap:
        raise UsageError(f"degree {x.degree} exceeds the cap {cap} (set {DEGREE_CAP_ENV})")
    basis = CentralMultipoleBasis(cap)
    coeffs = basis.reduce(x)
    if basis.reconstruct(coeffs) != x:
        print("reconstruction mismatch", file=sys.stderr)
        return 1
    _emit(render.decomposition(coeffs, args.format), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="realspin", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=render.FORMATS, default="text")
        sp.add_argument("--out", metavar="FILE")

    sp = sub.add_parser("multipole-table", help="images of the multipoles T_0..T_k")
    sp.add_argument("--k-max", type=int, default=4)
    common(sp)
    sp.set_defaults(func=cmd_multipole_table)

    sp = sub.add_parser("spin-table", help="structure constants of the spin-s algebra")
    sp.add_argument("--two-s", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_spin_table)

    sp = sub.add_parser("verify", help="run the identity battery")
    sp.add_argument("--two-s", "--two-s-max", dest="two_s", type=int, default=4)
    sp.add_argument("--k-max", type=int, default=6)
    sp.add_argument("--oracle", action="store_true", help="also compare against spin matrices")
    sp.add_argument("--out", metavar="FILE")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("decompose", help="central multipole coefficients of an expression")
    sp.add_argument("element", help='e.g. "Jx*Jy - Jy*Jx"')
    common(sp)
    sp.set_defaults(func=cmd_decompose)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"realspin: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
