"""Floating-point cross-check through the standard spin-s matrices."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .uea import UeaElement


@dataclass(frozen=True)
class RepConfig:
    two_s: int
    convention: str = "real"

    def __post_init__(self):
        if self.convention not in ("physics", "real"):
            raise ValueError(f"unknown convention {self.convention!r}")
        if self.two_s < 0:
            raise ValueError("2s must be non-negative")


def build_spin_matrices(two_s: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """S_x, S_y, S_z with [S_x, S_y] = i S_z (Condon-Shortley phases)."""
    s = two_s / 2
    d = two_s + 1
    m = s - np.arange(d)  # s, s-1, ..., -s
    sp = np.zeros((d, d), dtype=complex)
    for i in range(1, d):
        # <m+1| S_+ |m> with m = m[i]
        sp[i - 1, i] = np.sqrt(s * (s + 1) - m[i] * (m[i] + 1))
    sm = sp.conj().T
    sx = (sp + sm) / 2
    sy = (sp - sm) / 2j
    sz = np.diag(m).astype(complex)
    return sx, sy, sz


def to_real_convention(mats):
    return tuple(-1j * s for s in mats)


@lru_cache(maxsize=None)
def _mats(rep: RepConfig):
    mats = build_spin_matrices(rep.two_s)
    if rep.convention == "real":
        mats = to_real_convention(mats)
    return mats


def evaluate(x: UeaElement, rep: RepConfig | int) -> np.ndarray:
    if isinstance(rep, int):
        rep = RepConfig(rep)
    mx, my, mz = _mats(rep)
    d = rep.two_s + 1
    out = np.zeros((d, d), dtype=complex)
    mp = np.linalg.matrix_power
    for (a, b, c), coeff in x.items():
        out += float(coeff) * (mp(mx, a) @ mp(my, b) @ mp(mz, c))
    return out


@dataclass
class ComparisonReport:
    two_s: int
    tol: float
    max_deviation: float
    worst_pair: tuple[int, int] | None = None
    failures: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def compare_structure_constants(table, tol: float = 1e-10) -> ComparisonReport:
    from .multipole import multipole_basis

    rep = RepConfig(table.two_s)
    mats = [evaluate(multipole_basis(n).components[c].expansion, rep) for n, c in table.basis]
    report = ComparisonReport(table.two_s, tol, 0.0)
    for (i, j), row in table.constants.items():
        lhs = mats[i] @ mats[j]
        rhs = sum((float(c) * mats[l] for l, c in row.items()), np.zeros_like(lhs))
        dev = float(np.linalg.norm(lhs - rhs))
        if dev > report.max_deviation:
            report.max_deviation, report.worst_pair = dev, (i, j)
        if not dev < tol:
            report.failures.append((i, j, dev))
    return report


def numerical_rank(mats, tol: float = 1e-8) -> int:
    """Rank over the reals of a list of complex matrices."""
    if not mats:
        return 0
    rows = np.array([np.concatenate([m.real.ravel(), m.imag.ravel()]) for m in mats])
    sv = np.linalg.svd(rows, compute_uv=False)
    return int(np.sum(sv > tol))


def multipole_image_rank(k: int, two_s: int, tol: float = 1e-8) -> int:
    from .multipole import index_multisets, multipole

    rep = RepConfig(two_s)
    return numerical_rank([evaluate(multipole(k, w), rep) for w in index_multisets(k)], tol)


def clifford_residual() -> float:
    """max |S_a S_b + S_b S_a - delta_ab/2| for spin 1/2, physics convention."""
    S = build_spin_matrices(1)
    worst = 0.0
    for a in range(3):
        for b in range(3):
            r = S[a] @ S[b] + S[b] @ S[a] - (0.5 if a == b else 0) * np.eye(2)
            worst = max(worst, float(np.linalg.norm(r)))
    return worst


def kemmer_residual() -> float:
    """max |S_a S_b S_c + S_c S_b S_a - delta_ab S_c - delta_bc S_a| for spin 1."""
    S = build_spin_matrices(2)
    worst = 0.0
    for a in range(3):
        for b in range(3):
            for c in range(3):
                r = S[a] @ S[b] @ S[c] + S[c] @ S[b] @ S[a]
                if a == b:
                    r = r - S[c]
                if b == c:
                    r = r - S[a]
                worst = max(worst, float(np.linalg.norm(r)))
    return worst


def hermiticity(k: int, two_s: int, tol: float = 1e-10) -> str:
    """'hermitian', 'antihermitian' or 'neither' for every component of T_k."""
    from .multipole import multipole_basis

    rep = RepConfig(two_s)
    herm = anti = True
    for comp in multipole_basis(k).components:
        m = evaluate(comp.expansion, rep)
        herm &= bool(np.linalg.norm(m - m.conj().T) < tol)
        anti &= bool(np.linalg.norm(m + m.conj().T) < tol)
    return "hermitian" if herm else ("antihermitian" if anti else "neither")
