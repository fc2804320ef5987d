"""Step operators and the recursively defined multipole maps T_k.

On an element annihilated by E_k, left multiplication by a generator lands
in the kernel of the cubic ``(E + (k-1)k)(E + k(k+1))(E + (k+1)(k+2))``
(``E^2 (E + 2)`` when k = 0).  The step operators are the three spectral
projectors of that cubic composed with L_v, built with the Bezout machinery
of :mod:`realspin.exactnum`.
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping, Sequence

from .exactnum import FactoredMinPoly, Polynomial, apply_poly, bezout_projectors, simple_projector
from .linalg import Echelon
from .uea import (AXES, CASIMIR, ONE, UeaElement, axis_index, cross, e_action, e_factor,
                  left_gen, right_gen, structure_constant, adjoint)


class StepKind(enum.Enum):
    DOWN = "down"
    LEVEL = "level"
    UP = "up"


class LevelError(ValueError):
    """Raised when a step is requested on an element outside the declared E_k kernel."""


def _lin(j: int) -> Polynomial:
    # E_j as a polynomial in E
    return Polynomial([j * (j + 1), 1])


@lru_cache(maxsize=None)
def step_polynomials(k: int) -> dict[StepKind, Polynomial]:
    """Projector polynomials in E for the three steps out of level k."""
    if k == 0:
        # minimal polynomial x^2 (x + 2); the x^2 factor is not simple
        pset = bezout_projectors(FactoredMinPoly([(Polynomial.x(), 2), (_lin(1), 1)]))
        return {StepKind.DOWN: Polynomial(), StepKind.LEVEL: pset.projectors[0],
                StepKind.UP: pset.projectors[1]}
    roots = {StepKind.DOWN: -(k - 1) * k, StepKind.LEVEL: -k * (k + 1),
             StepKind.UP: -(k + 1) * (k + 2)}
    out = {}
    for kind, lam in roots.items():
        others = [r for kk, r in roots.items() if kk is not kind]
        out[kind] = simple_projector(lam, Polynomial.from_roots(others))
    return out


def explicit_step_polynomials(k: int) -> dict[StepKind, Polynomial]:
    """The same projectors written out as products of E_j factors with their constants."""
    if k == 0:
        return {StepKind.DOWN: Polynomial(),
                StepKind.LEVEL: Polynomial([-2, 1]) * _lin(1) * Fraction(1, -4),
                StepKind.UP: _lin(0) * _lin(0) * Fraction(1, 4)}
    return {StepKind.DOWN: _lin(k) * _lin(k + 1) * Fraction(1, 4 * k * (2 * k + 1)),
            StepKind.LEVEL: _lin(k - 1) * _lin(k + 1) * Fraction(1, -4 * k * (k + 1)),
            StepKind.UP: _lin(k - 1) * _lin(k) * Fraction(1, 4 * (k + 1) * (2 * k + 1))}


def check_level(k: int, x: UeaElement) -> None:
    if e_factor(k, x):
        raise LevelError(f"element is not annihilated by E_{k}")


def step(kind: StepKind | str, v, k: int, x: UeaElement, *, right: bool = False,
         check: bool = True) -> UeaElement:
    """Step-down/level/up of ``x`` (declared level k) by generator ``v``.

    With ``right=True`` the same projector is applied to ``x * J_v``.
    """
    kind = StepKind(kind)
    g = axis_index(v)
    if check:
        check_level(k, x)
    poly = step_polynomials(k)[kind]
    moved = right_gen(g, x) if right else left_gen(g, x)
    return apply_poly(poly, e_action, moved)


# T_k cache: a dict guarded for single-writer inserts; entries are immutable and
# recomputation is idempotent, so readers never need the lock.
_T_CACHE: dict[tuple[int, ...], UeaElement] = {(): ONE}
_T_LOCK = threading.Lock()


def _word(w) -> tuple[int, ...]:
    if isinstance(w, str):
        return tuple(axis_index(c) for c in w)
    return tuple(axis_index(c) for c in w)


def multipole(k: int, w: Sequence) -> UeaElement:
    """T_k(J_{w_1} (x) ... (x) J_{w_k}) via T_{k+1}(v (x) B) = S+_v T_k(B)."""
    word = _word(w)
    if len(word) != k:
        raise ValueError(f"T_{k} needs a word of length {k}, got {len(word)}")
    hit = _T_CACHE.get(word)
    if hit is not None:
        return hit
    inner = multipole(k - 1, word[1:])
    val = step(StepKind.UP, word[0], k - 1, inner, check=False)
    with _T_LOCK:
        _T_CACHE.setdefault(word, val)
    return _T_CACHE[word]


def multipole_linear(k: int, words: Mapping[tuple[int, ...], Fraction]) -> UeaElement:
    """T_k extended linearly over a combination of words."""
    out = UeaElement()
    for w, c in words.items():
        out = out + multipole(k, w) * c
    return out


@dataclass(frozen=True)
class MultipoleComponent:
    level: int
    indices: tuple[int, ...]
    expansion: UeaElement

    @property
    def label(self) -> str:
        return "".join(AXES[i] for i in self.indices) or "1"


@dataclass(frozen=True)
class MultipoleBasis:
    level: int
    components: tuple[MultipoleComponent, ...]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)


def index_multisets(k: int) -> list[tuple[int, ...]]:
    return list(combinations_with_replacement(range(3), k))


@lru_cache(maxsize=None)
def multipole_basis(k: int) -> MultipoleBasis:
    """Greedy lexicographic choice of 2k+1 independent components of Im T_k."""
    ech = Echelon()
    comps = []
    for idx in index_multisets(k):
        t = multipole(k, idx)
        if ech.insert(t.terms):
            comps.append(MultipoleComponent(k, idx, t))
        if len(comps) == 2 * k + 1:
            break
    return MultipoleBasis(k, tuple(comps))


def image_rank(k: int) -> int:
    ech = Echelon()
    for idx in index_multisets(k):
        ech.insert(multipole(k, idx).terms)
    return len(ech)


# -- word-level helpers -------------------------------------------------------

def _replace(word: tuple[int, ...], p: int, c: int) -> tuple[int, ...]:
    return word[:p] + (c,) + word[p + 1:]


def _drop(word: tuple[int, ...], *ps: int) -> tuple[int, ...]:
    return tuple(b for i, b in enumerate(word) if i not in ps)


def _add(acc: dict, key, c) -> None:
    v = acc.get(key, 0) + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


def ad_gen_word(g: int, words: Mapping[tuple[int, ...], Fraction]) -> dict:
    """ad_{J_g} acting on tensor words as a derivation over slots."""
    out: dict = {}
    for w, c in words.items():
        for p, b in enumerate(w):
            cr = cross(g, b)
            if cr is not None:
                _add(out, _replace(w, p, cr[0]), c * cr[1])
    return out


def ad_word(u: UeaElement, words: Mapping[tuple[int, ...], Fraction]) -> dict:
    out: dict = {}
    for m, c in u.items():
        cur = dict(words)
        for g in (2, 1, 0):
            for _ in range(m[g]):
                cur = ad_gen_word(g, cur)
        for w, cc in cur.items():
            _add(out, w, c * cc)
    return out


# -- verification of the step-image formulas ----------------------------------

def step_down_image_rhs(k: int, a, w: Sequence) -> UeaElement:
    """Closed form of D_{J_a} T_k(w) in terms of T_{k-1}, valid for k >= 1."""
    a = axis_index(a)
    word = _word(w)
    inner: dict = {}
    for p in range(k):
        if word[p] == a:
            _add(inner, _drop(word, p), Fraction(2 * k - 1))
        for q in range(k):
            if q != p and word[p] == word[q]:
                _add(inner, (a,) + _drop(word, p, q), Fraction(-1))
    body = multipole_linear(k - 1, inner)
    pref = CASIMIR * 4 + (k - 1) * (k + 1)
    return (pref * body) * Fraction(1, 4 * (4 * k * k - 1))


def step_level_image_rhs(k: int, a, w: Sequence) -> UeaElement:
    a = axis_index(a)
    word = _word(w)
    combo: dict = {}
    for p in range(k):
        for c in range(3):
            eps = structure_constant(a, word[p], c)
            if eps:
                _add(combo, _replace(word, p, c), eps / 2)
    return multipole_linear(k, combo)


def verify_step_down_image(k: int, a, w: Sequence) -> bool:
    if k < 1:
        raise ValueError("step-down image formula needs k >= 1")
    t = multipole(k, w)
    return step(StepKind.DOWN, a, k, t) == step_down_image_rhs(k, a, w)


def verify_step_down_dipole(a, b) -> bool:
    a, b = axis_index(a), axis_index(b)
    expected = CASIMIR * Fraction(1, 3) if a == b else UeaElement()
    return step(StepKind.DOWN, a, 1, multipole(1, (b,))) == expected


def verify_step_level_image(k: int, a, w: Sequence) -> bool:
    t = multipole(k, w)
    return step(StepKind.LEVEL, a, k, t) == step_level_image_rhs(k, a, w)


def verify_right_step_identities(k: int, v, w: Sequence) -> bool:
    """Right-multiplication steps: down and up agree with the left ones, level flips sign."""
    t = multipole(k, w)
    for kind, sign in ((StepKind.DOWN, 1), (StepKind.UP, 1), (StepKind.LEVEL, -1)):
        left = step(kind, v, k, t)
        right = step(kind, v, k, t, right=True, check=False)
        if right != left * sign:
            return False
    return True


def verify_resolution(k: int, v, w: Sequence) -> bool:
    t = multipole(k, w)
    total = sum((step(kind, v, k, t) for kind in StepKind), UeaElement())
    return total == left_gen(axis_index(v), t)


def ad_commutation_check(k: int, u: UeaElement, w: Sequence) -> bool:
    word = _word(w)
    lhs = adjoint(u, multipole(k, word))
    rhs = multipole_linear(k, ad_word(u, {word: Fraction(1)}))
    return lhs == rhs


def verify_step_annihilation(kind: StepKind | str, k: int, v, w: Sequence) -> bool:
    """The target-level annihilation property of each step."""
    kind = StepKind(kind)
    out = step(kind, v, k, multipole(k, w))
    if kind is StepKind.DOWN:
        return k == 0 and not out or k > 0 and not e_factor(k - 1, out)
    if kind is StepKind.LEVEL:
        if k == 0:
            return not e_action(e_action(out))
        return not e_factor(k, out)
    return not e_factor(k + 1, out)


def contraction(k: int, w: Sequence, p: int, q: int) -> UeaElement:
    """sum_a T_k(... J_a at p ... J_a at q ...); w supplies the other slots."""
    word = list(_word(w))
    out = UeaElement()
    for a in range(3):
        word[p] = a
        word[q] = a
        out = out + multipole(k, word)
    return out


def cubic_annihilates(m: int, v, w: Sequence) -> bool:
    x = left_gen(axis_index(v), multipole(m, w))
    cubic = _lin(m) * _lin(m + 1) * _lin(m - 1)
    return not apply_poly(cubic, e_action, x)


def cubic_divisors_fail(m: int, v, w: Sequence) -> list[bool]:
    """For each proper product of the cubic's factors: True if it does NOT annihilate."""
    x = left_gen(axis_index(v), multipole(m, w))
    factors = [_lin(m - 1), _lin(m), _lin(m + 1)]
    res = []
    for drop in range(3):
        p = Polynomial([1])
        for i, f in enumerate(factors):
            if i != drop:
                p = p * f
        res.append(bool(apply_poly(p, e_action, x)))
    return res
