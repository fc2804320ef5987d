"""Exact rational polynomials and projector decompositions of real operators.

An operator ``A`` with monic minimal polynomial ``m = prod f_j**d_j`` splits
the space it acts on into the images of projectors ``Pi_j = b_j(A) q_j(A)``
where ``q_j = m / f_j**d_j`` and ``a_j f_j**d_j + b_j q_j = 1``.  Everything
here is computed in the polynomial ring, so the projector identities can be
checked as congruences modulo ``m`` before any operator is supplied.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Sequence

Rational = Fraction


def _frac(c) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Dense univariate polynomial over the rationals, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "Polynomial":
        p = cls([1])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        # the zero polynomial has degree -1
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Fraction:
        return self.coeffs[-1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise ValueError("zero polynomial has no monic form")
        lc = self.lead
        return Polynomial(c / lc for c in self.coeffs)

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        return Polynomial([other])

    def __add__(self, other):
        other = self._coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = other.coeffs + (Fraction(0),) * (n - len(other.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Polynomial(), self
        quot = [Fraction(0)] * (dq + 1)
        lc = other.lead
        for i in range(dq, -1, -1):
            c = rem[i + other.degree] / lc
            quot[i] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[i + j] -= c * b
        return Polynomial(quot), Polynomial(rem[: other.degree])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"({c})*{mono}")
            else:
                terms.append(f"({c})")
        return "Polynomial(" + " + ".join(terms) + ")"


def extended_gcd(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """Return ``(g, a, b)`` with ``a*p + b*q == g`` and ``g`` monic.

    The Bezout pair is normalized so that ``deg a < deg q - deg g`` (or
    ``a == 0``), which makes the result unique.
    """
    if p.is_zero() and q.is_zero():
        raise ValueError("extended_gcd of two zero polynomials")
    r0, r1 = p, q
    s0, s1 = Polynomial([1]), Polynomial()
    t0, t1 = Polynomial(), Polynomial([1])
    while not r1.is_zero():
        quo, rem = divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, s0 - quo * s1
        t0, t1 = t1, t0 - quo * t1
    lc = r0.lead
    g, a, b = r0 * (1 / lc), s0 * (1 / lc), t0 * (1 / lc)
    if not q.is_zero():
        q_red = q // g
        a = a % q_red
        b = (g - a * p) // q
    return g, a, b


@dataclass(frozen=True)
class FactoredMinPoly:
    """Minimal polynomial given as pairwise coprime monic factors with multiplicities."""

    factors: tuple[tuple[Polynomial, int], ...]

    def __init__(self, factors: Iterable[tuple[Polynomial, int]]):
        normed = []
        for f, d in factors:
            if d < 1:
                raise ValueError("multiplicity must be positive")
            if f.degree < 1:
                raise ValueError("factors must be nonconstant")
            normed.append((f.monic(), int(d)))
        object.__setattr__(self, "factors", tuple(normed))

    def polynomial(self) -> Polynomial:
        m = Polynomial([1])
        for f, d in self.factors:
            m = m * f**d
        return m

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


@dataclass(frozen=True)
class ProjectorSet:
    minpoly: FactoredMinPoly
    projectors: tuple[Polynomial, ...]

    def __iter__(self):
        return iter(self.projectors)

    def __len__(self):
        return len(self.projectors)

    def check(self) -> bool:
        """All four projector congruences modulo the minimal polynomial."""
        m = self.minpoly.polynomial()
        total = Polynomial()
        for i, pi in enumerate(self.projectors):
            total = total + pi
            if not ((pi * pi - pi) % m).is_zero():
                return False
            f, d = self.minpoly.factors[i]
            if not ((f**d * pi) % m).is_zero():
                return False
            for j, pj in enumerate(self.projectors):
                if i != j and not ((pi * pj) % m).is_zero():
                    return False
        return ((total - 1) % m).is_zero()


def bezout_projectors(m: FactoredMinPoly) -> ProjectorSet:
    full = m.polynomial()
    if full.degree < 1:
        raise ValueError("minimal polynomial must be nonconstant")
    projectors = []
    for i, (f, d) in enumerate(m.factors):
        p = f**d
        q = full // p
        g, _a, b = extended_gcd(p, q)
        if g.degree > 0:
            raise ValueError(f"factor {i} is not coprime to the others")
        projectors.append((b * q) % full)
    return ProjectorSet(m, tuple(projectors))


def simple_projector(lam, q: Polynomial) -> Polynomial:
    """Projector onto the ``x - lam`` factor when that factor is simple: q(x)/q(lam)."""
    lam = _frac(lam)
    val = q(lam)
    if val == 0:
        raise ValueError(f"q vanishes at {lam}: factor x - {lam} is not coprime")
    return q * (1 / val)


def apply_poly(p: Polynomial, op: Callable, x):
    """Evaluate ``p(op)(x)`` by Horner's scheme."""
    if p.is_zero():
        return x * 0
    acc = x * p.coeffs[-1]
    for c in reversed(p.coeffs[:-1]):
        acc = op(acc)
        if c:
            acc = acc + x * c
    return acc


@dataclass
class MutualProjector:
    labels: tuple[int, ...]
    images: list
    rank: int
    trivial: bool = field(default=False)


class NonCommutingError(ValueError):
    pass


def mutual_projectors(decomps: Sequence[tuple[ProjectorSet, Callable]], basis: Sequence,
                      coords: Callable) -> list[MutualProjector]:
    """Compose one projector from each decomposition, for every choice of labels.

    ``basis`` spans the target space and ``coords`` maps a vector to a
    ``{key: Fraction}`` mapping for exact rank computation.  Members with
    trivial image are kept and flagged.
    """
    from itertools import product

    from .linalg import rank

    def compose(labels):
        def run(v):
            for (pset, op), lab in zip(reversed(decomps), reversed(labels)):
                v = apply_poly(pset.projectors[lab], op, v)
            return v
        return run

    result = []
    sizes = [range(len(pset)) for pset, _ in decomps]
    for labels in product(*sizes):
        proj = compose(labels)
        images = [proj(b) for b in basis]
        for b, img in zip(basis, images):
            if coords(proj(img)) != coords(img):
                raise NonCommutingError(f"composition {labels} is not idempotent")
        r = rank([coords(v) for v in images])
        result.append(MutualProjector(tuple(labels), images, r, r == 0))
    return result
