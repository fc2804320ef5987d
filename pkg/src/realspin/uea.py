"""The universal enveloping algebra of so(3) in ordered (PBW) normal form.

Generators are indexed 0, 1, 2 for x, y, z with bracket
``J_a J_b - J_b J_a = sum_c eps_abc J_c``.  Elements are stored as a map from
exponent triples ``(e_x, e_y, e_z)`` (the ordered monomial
``J_x^e_x J_y^e_y J_z^e_z``) to nonzero rationals.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Mapping, Sequence

Monomial = tuple[int, int, int]

AXES = "xyz"
X, Y, Z = 0, 1, 2


def axis_index(a) -> int:
    if isinstance(a, int):
        if a not in (0, 1, 2):
            raise ValueError(f"generator index out of range: {a}")
        return a
    try:
        return AXES.index(str(a).lower()[-1])
    except ValueError:
        raise ValueError(f"unknown generator {a!r}") from None


def structure_constant(a, b, c) -> Fraction:
    """Levi-Civita symbol with eps_xyz = 1."""
    a, b, c = axis_index(a), axis_index(b), axis_index(c)
    if len({a, b, c}) < 3:
        return Fraction(0)
    return Fraction(1) if (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else Fraction(-1)


def cross(a: int, b: int) -> tuple[int, int] | None:
    """The cross product J_a x J_b as ``(c, sign)``, or None when a == b."""
    if a == b:
        return None
    c = 3 - a - b
    return c, (1 if (a, b, c) in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1)


def _addto(acc: dict, terms: Mapping, scale) -> None:
    for m, c in terms.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)


@lru_cache(maxsize=None)
def _left_gen(g: int, m: Monomial) -> tuple[tuple[Monomial, int], ...]:
    """J_g * (ordered monomial m), as a tuple of (monomial, integer coefficient)."""
    a, b, c = m
    if g == X:
        return (((a + 1, b, c), 1),)
    out: dict = {}
    if g == Y:
        if a == 0:
            return (((0, b + 1, c), 1),)
        # J_y J_x = J_x J_y - J_z
        rest = (a - 1, b, c)
        for mm, cc in _left_gen(Y, rest):
            _addto(out, {(mm[0] + 1, mm[1], mm[2]): cc}, 1)
        _addto(out, dict(_left_gen(Z, rest)), -1)
        return tuple(out.items())
    if a == 0 and b == 0:
        return (((0, 0, c + 1), 1),)
    if a > 0:
        # J_z J_x = J_x J_z + J_y
        rest = (a - 1, b, c)
        for mm, cc in _left_gen(Z, rest):
            _addto(out, {(mm[0] + 1, mm[1], mm[2]): cc}, 1)
        _addto(out, dict(_left_gen(Y, rest)), 1)
        return tuple(out.items())
    # J_z J_y = J_y J_z - J_x
    rest = (0, b - 1, c)
    for mm, cc in _left_gen(Z, rest):
        _addto(out, dict(_left_gen(Y, mm)), cc)
    _addto(out, dict(_left_gen(X, rest)), -1)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _mono_mul(m1: Monomial, m2: Monomial) -> tuple[tuple[Monomial, int], ...]:
    last = 2 if m1[2] else (1 if m1[1] else (0 if m1[0] else -1))
    if last < 0:
        return ((m2, 1),)
    first = 0 if m2[0] else (1 if m2[1] else (2 if m2[2] else 3))
    if last <= first:
        return (((m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]), 1),)
    head = list(m1)
    head[last] -= 1
    head = tuple(head)
    out: dict = {}
    for mm, cc in _left_gen(last, m2):
        _addto(out, dict(_mono_mul(head, mm)), cc)
    return tuple(out.items())


class UeaElement:
    """Immutable element of U(so(3)) in PBW normal form."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        t = {}
        if terms:
            for m, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c:
                    t[tuple(m)] = c
        self._terms = t
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict) -> "UeaElement":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def scalar(cls, c) -> "UeaElement":
        return cls({(0, 0, 0): c})

    @classmethod
    def generator(cls, a) -> "UeaElement":
        m = [0, 0, 0]
        m[axis_index(a)] = 1
        return cls({tuple(m): 1})

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return self._terms

    def items(self):
        return self._terms.items()

    @property
    def degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def homogeneous_part(self, d: int) -> "UeaElement":
        return UeaElement._raw({m: c for m, c in self._terms.items() if sum(m) == d})

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = UeaElement.scalar(other)
        if not isinstance(other, UeaElement):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, UeaElement):
            other = UeaElement.scalar(other)
        out = dict(self._terms)
        _addto(out, other._terms, 1)
        return UeaElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return UeaElement._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UeaElement):
            other = UeaElement.scalar(other)
        out = dict(self._terms)
        _addto(out, other._terms, -1)
        return UeaElement._raw(out)

    def __rsub__(self, other):
        return UeaElement.scalar(other) - self

    def __mul__(self, other):
        if isinstance(other, UeaElement):
            return multiply(self, other)
        other = other if isinstance(other, Fraction) else Fraction(other)
        if not other:
            return UeaElement()
        return UeaElement._raw({m: c * other for m, c in self._terms.items()})

    def __rmul__(self, other):
        return self * other

    def __truediv__(self, other):
        return self * (1 / Fraction(other))

    def __pow__(self, n: int):
        out = UeaElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        return f"UeaElement({format_element(self)})"

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items())

    def to_json(self) -> list[dict]:
        return [{"m": list(m), "c": format_rational(c)} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> "UeaElement":
        return cls({tuple(d["m"]): parse_rational(d["c"]) for d in data})


def format_rational(c: Fraction) -> str:
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


def format_monomial(m: Monomial) -> str:
    parts = []
    for axis, e in zip(AXES, m):
        if e == 1:
            parts.append(f"J{axis}")
        elif e > 1:
            parts.append(f"J{axis}^{e}")
    return "*".join(parts) if parts else "1"


def format_element(u: UeaElement) -> str:
    if u.is_zero():
        return "0"
    out = []
    for m, c in sorted(u.items(), key=lambda t: (-sum(t[0]), tuple(-e for e in t[0]))):
        mono = format_monomial(m)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if mono == "1":
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        out.append((sign, body))
    text = ("-" if out[0][0] == "-" else "") + out[0][1]
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text


def dumps(u: UeaElement) -> str:
    return json.dumps(u.to_json(), separators=(",", ":"))


ONE = UeaElement.scalar(1)
JX, JY, JZ = (UeaElement.generator(a) for a in range(3))
GENERATORS = (JX, JY, JZ)


def multiply(a: UeaElement, b: UeaElement) -> UeaElement:
    out: dict = {}
    for m1, c1 in a._terms.items():
        for m2, c2 in b._terms.items():
            cc = c1 * c2
            for m, k in _mono_mul(m1, m2):
                v = out.get(m, 0) + cc * k
                if v:
                    out[m] = v
                else:
                    del out[m]
    return UeaElement._raw(out)


def normal_form(word: Iterable) -> UeaElement:
    """PBW representative of a product of generators (an empty word gives 1)."""
    out = ONE
    for g in reversed(list(word)):
        out = left_gen(axis_index(g), out)
    return out


def left_gen(g: int, a: UeaElement) -> UeaElement:
    out: dict = {}
    for m, c in a._terms.items():
        for mm, k in _left_gen(g, m):
            v = out.get(mm, 0) + c * k
            if v:
                out[mm] = v
            else:
                del out[mm]
    return UeaElement._raw(out)


def right_gen(g: int, a: UeaElement) -> UeaElement:
    return multiply(a, GENERATORS[g])


def left_mul(v: UeaElement, a: UeaElement) -> UeaElement:
    return multiply(v, a)


def right_mul(v: UeaElement, a: UeaElement) -> UeaElement:
    return multiply(a, v)


def commutator(a: UeaElement, b: UeaElement) -> UeaElement:
    return multiply(a, b) - multiply(b, a)


def ad_gen(g: int, a: UeaElement) -> UeaElement:
    return left_gen(g, a) - multiply(a, GENERATORS[g])


def adjoint(u: UeaElement, a: UeaElement) -> UeaElement:
    """ad_u(a); on a monomial J_x^i J_y^j J_z^k this is ad_x^i ad_y^j ad_z^k."""
    out: dict = {}
    for m, c in u._terms.items():
        v = a
        for g in (Z, Y, X):
            for _ in range(m[g]):
                v = ad_gen(g, v)
        _addto(out, v._terms, c)
    return UeaElement._raw(out)


def casimir() -> UeaElement:
    return CASIMIR


CASIMIR = UeaElement({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): 1})


@lru_cache(maxsize=None)
def _e_mono(m: Monomial) -> UeaElement:
    a = UeaElement._raw({m: Fraction(1)})
    out: dict = {}
    for g in range(3):
        _addto(out, ad_gen(g, ad_gen(g, a))._terms, 1)
    return UeaElement._raw(out)


def e_action(a: UeaElement) -> UeaElement:
    """E = ad_C = sum_a ad_a ad_a, assembled from cached monomial images."""
    out: dict = {}
    for m, c in a._terms.items():
        _addto(out, _e_mono(m)._terms, c)
    return UeaElement._raw(out)


def e_action_lr(a: UeaElement) -> UeaElement:
    """E computed as 2 L_C - 2 sum_a L_a R_a."""
    out = dict((CASIMIR * a * 2)._terms)
    for g in range(3):
        _addto(out, left_gen(g, right_gen(g, a))._terms, -2)
    return UeaElement._raw(out)


def e_factor(k: int, a: UeaElement) -> UeaElement:
    """E_k = E + k(k+1) id."""
    if k < 0:
        raise ValueError("level must be non-negative")
    return e_action(a) + a * (k * (k + 1))


def symmetrize(m: Monomial) -> UeaElement:
    """Average of the normal forms of every ordering of the word with exponents m."""
    word = [X] * m[0] + [Y] * m[1] + [Z] * m[2]
    perms = set(permutations(word))
    out: dict = {}
    for p in perms:
        _addto(out, normal_form(p)._terms, Fraction(1, len(perms)))
    return UeaElement._raw(out)


def symmetric_parts(a: UeaElement) -> dict[int, UeaElement]:
    """Split ``a`` into its components in the symmetrized grading sym(S^d)."""
    parts: dict[int, UeaElement] = {}
    rest = a
    while rest:
        d = rest.degree
        top = UeaElement()
        for m, c in rest.items():
            if sum(m) == d:
                top = top + symmetrize(m) * c
        parts[d] = top
        rest = rest - top
    return parts


def symmetric_grading(a: UeaElement) -> UeaElement:
    """The operator acting as d on sym(S^d); commutes with every ad_u."""
    out = UeaElement()
    for d, part in symmetric_parts(a).items():
        out = out + part * d
    return out


def monomials_of_degree(d: int) -> list[Monomial]:
    return [(a, b, d - a - b) for a in range(d, -1, -1) for b in range(d - a, -1, -1)]


def monomials_up_to(d: int) -> list[Monomial]:
    return [m for k in range(d + 1) for m in monomials_of_degree(k)]
