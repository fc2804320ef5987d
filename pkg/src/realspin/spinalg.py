"""Finite spin-s quotient algebras of U(so(3)).

Every element of U is a unique combination of central multiples
``C^m T_n(component)``.  The top PBW-degree part of ``C^m T_n`` is the
commutative product ``q^m h_n`` (q = x^2 + y^2 + z^2, h_n harmonic), so the
change of basis is block triangular in degree: reduce the top degree with a
square exact solve, subtract, repeat.  The spin-s algebra keeps the
components with n <= 2s and replaces C by its scalar value -k(k+2)/4.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .linalg import Echelon, solve_square
from .multipole import (MultipoleComponent, StepKind, multipole, multipole_basis, step, _word)
from .uea import CASIMIR, ONE, UeaElement, axis_index, format_rational, monomials_of_degree, parse_rational

DEFAULT_TWO_S_CAP = 8
Entry = tuple[int, int, int]  # (casimir power m, level n, component index)


def two_s_cap() -> int:
    return int(os.environ.get("REALSPIN_TWO_S_CAP", DEFAULT_TWO_S_CAP))


def casimir_scalar(two_s: int) -> Fraction:
    return Fraction(-two_s * (two_s + 2), 4)


@dataclass(frozen=True)
class SpinLabel:
    two_s: int

    def __post_init__(self):
        if self.two_s < 0:
            raise ValueError("2s must be non-negative")

    @property
    def s(self) -> Fraction:
        return Fraction(self.two_s, 2)


@lru_cache(maxsize=None)
def _casimir_power(m: int) -> UeaElement:
    return ONE if m == 0 else _casimir_power(m - 1) * CASIMIR


@lru_cache(maxsize=None)
def basis_element(m: int, n: int, c: int) -> UeaElement:
    return _casimir_power(m) * multipole_basis(n).components[c].expansion


def sector_entries(d: int) -> list[Entry]:
    return [((d - n) // 2, n, c) for n in range(d % 2, d + 1, 2) for c in range(2 * n + 1)]


def entries_up_to(N: int) -> list[Entry]:
    return [e for d in range(N + 1) for e in sector_entries(d)]


@lru_cache(maxsize=None)
def _sector_solver(d: int):
    cols = [basis_element(*e).homogeneous_part(d).terms for e in sector_entries(d)]
    if len(cols) != len(monomials_of_degree(d)):
        raise ArithmeticError(f"sector {d} has {len(cols)} entries for "
                              f"{len(monomials_of_degree(d))} monomials")
    return solve_square(cols)


class CentralMultipoleBasis:
    """Change of basis between PBW monomials and central multiples of multipoles."""

    def __init__(self, cap: int):
        self.cap = cap

    @property
    def entries(self) -> list[Entry]:
        return entries_up_to(self.cap)

    def expansion(self, entry: Entry) -> UeaElement:
        return basis_element(*entry)

    def reduce(self, x: UeaElement) -> dict[Entry, Fraction]:
        if x.degree > self.cap:
            raise ValueError(f"degree {x.degree} exceeds the configured cap {self.cap}")
        return central_multipole_reduce(x)

    def reconstruct(self, coeffs: Mapping[Entry, Fraction]) -> UeaElement:
        out = UeaElement()
        for e, c in coeffs.items():
            out = out + basis_element(*e) * c
        return out


def central_multipole_reduce(x: UeaElement) -> dict[Entry, Fraction]:
    coeffs: dict[Entry, Fraction] = {}
    rest = x
    while rest:
        d = rest.degree
        solve = _sector_solver(d)
        sol = solve(rest.homogeneous_part(d).terms)
        if sol is None:
            raise ArithmeticError(f"degree-{d} part is outside the central multipole span")
        entries = sector_entries(d)
        for i, c in sol.items():
            coeffs[entries[i]] = c
            rest = rest - basis_element(*entries[i]) * c
        if rest.degree >= d:
            raise ArithmeticError(f"reduction did not lower the degree below {d}")
    return dict(sorted(coeffs.items()))


# -- spin algebras ----------------------------------------------------------

BasisKey = tuple[int, int]  # (level n, component index)


@dataclass
class SpinAlgebraTable:
    two_s: int
    basis: list[BasisKey]
    labels: list[str]
    constants: dict[tuple[int, int], dict[int, Fraction]] = field(repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def index(self, key: BasisKey) -> int:
        return self.basis.index(key)

    def mul(self, u: Mapping[int, Fraction], v: Mapping[int, Fraction]) -> dict[int, Fraction]:
        out: dict[int, Fraction] = {}
        for i, a in u.items():
            for j, b in v.items():
                for l, c in self.constants[i, j].items():
                    val = out.get(l, 0) + a * b * c
                    if val:
                        out[l] = val
                    else:
                        out.pop(l)
        return out

    def unit(self, i: int) -> dict[int, Fraction]:
        return {i: Fraction(1)}

    def to_json(self) -> dict:
        consts = []
        for (i, j), row in sorted(self.constants.items()):
            for l, c in sorted(row.items()):
                consts.append({"i": i, "j": j, "l": l, "c": format_rational(c)})
        return {"two_s": self.two_s,
                "basis": [{"n": n, "component": c, "indices": lab}
                          for (n, c), lab in zip(self.basis, self.labels)],
                "constants": consts}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: Mapping) -> "SpinAlgebraTable":
        basis = [(b["n"], b["component"]) for b in data["basis"]]
        labels = [b["indices"] for b in data["basis"]]
        consts: dict = {(i, j): {} for i in range(len(basis)) for j in range(len(basis))}
        for e in data["constants"]:
            consts[e["i"], e["j"]][e["l"]] = parse_rational(e["c"])
        return cls(data["two_s"], basis, labels, consts)

    def __eq__(self, other):
        if not isinstance(other, SpinAlgebraTable):
            return NotImplemented
        return (self.two_s, self.basis, self.labels, self.constants) == \
            (other.two_s, other.basis, other.labels, other.constants)


def spin_basis(two_s: int) -> list[tuple[BasisKey, MultipoleComponent]]:
    return [((n, c), comp) for n in range(two_s + 1)
            for c, comp in enumerate(multipole_basis(n).components)]


def quotient_reduce(two_s: int, x: UeaElement) -> dict[BasisKey, Fraction]:
    """Image of ``x`` in S_s: drop T_n (n > 2s), send C^m to the scalar^m."""
    sigma = casimir_scalar(two_s)
    out: dict[BasisKey, Fraction] = {}
    for (m, n, c), coeff in central_multipole_reduce(x).items():
        if n > two_s:
            continue
        val = out.get((n, c), 0) + coeff * sigma**m
        if val:
            out[(n, c)] = val
        else:
            out.pop((n, c), None)
    return out


def build_spin_algebra(s: SpinLabel | int) -> SpinAlgebraTable:
    two_s = s.two_s if isinstance(s, SpinLabel) else int(s)
    if two_s < 0:
        raise ValueError("2s must be non-negative")
    if two_s > two_s_cap():
        raise ValueError(f"2s = {two_s} exceeds the configured cap {two_s_cap()}")
    elems = spin_basis(two_s)
    keys = [k for k, _ in elems]
    pos = {k: i for i, k in enumerate(keys)}
    constants = {}
    for i, (_, ci) in enumerate(elems):
        for j, (_, cj) in enumerate(elems):
            red = quotient_reduce(two_s, ci.expansion * cj.expansion)
            constants[i, j] = {pos[k]: v for k, v in sorted(red.items())}
    labels = [comp.label for _, comp in elems]
    return SpinAlgebraTable(two_s, keys, labels, constants)


@lru_cache(maxsize=None)
def spin_algebra(two_s: int) -> SpinAlgebraTable:
    return build_spin_algebra(two_s)


def table_vector(two_s: int, x: UeaElement) -> dict[int, Fraction]:
    table = spin_algebra(two_s)
    return {table.index(k): v for k, v in quotient_reduce(two_s, x).items()}


# -- checks -----------------------------------------------------------------

def check_associativity(table: SpinAlgebraTable, triples: Iterable[tuple[int, int, int]] | None = None) -> bool:
    n = table.dim
    if triples is None:
        triples = product(range(n), repeat=3)
    for i, j, l in triples:
        ei, ej, el = table.unit(i), table.unit(j), table.unit(l)
        if table.mul(table.mul(ei, ej), el) != table.mul(ei, table.mul(ej, el)):
            return False
    return True


def random_triples(n: int, count: int, seed: int = 0):
    rng = random.Random(seed)
    return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(count)]


def check_identity(table: SpinAlgebraTable) -> bool:
    one = table.index((0, 0))
    return all(table.mul(table.unit(one), table.unit(i)) == table.unit(i) ==
               table.mul(table.unit(i), table.unit(one)) for i in range(table.dim))


def reduced_rank(two_s: int) -> int:
    """Exact rank of the basis images in the quotient (should be (2s+1)^2)."""
    ech = Echelon()
    for key, comp in spin_basis(two_s):
        ech.insert(quotient_reduce(two_s, comp.expansion))
    return len(ech)


def _generator_vec(table: SpinAlgebraTable, a: int) -> dict[int, Fraction]:
    if table.two_s == 0:
        return {}
    comps = multipole_basis(1).components
    idx = next(c for c, comp in enumerate(comps) if comp.indices == (a,))
    return table.unit(table.index((1, idx)))


def casimir_scalar_check(s: SpinLabel | int) -> bool:
    """C = sum_a J_a J_a, multiplied through the table, acts as -k(k+2)/4."""
    two_s = s.two_s if isinstance(s, SpinLabel) else int(s)
    table = spin_algebra(two_s)
    cas: dict[int, Fraction] = {}
    for a in range(3):
        ja = _generator_vec(table, a)
        for l, c in table.mul(ja, ja).items():
            cas[l] = cas.get(l, 0) + c
    cas = {l: c for l, c in cas.items() if c}
    sigma = casimir_scalar(two_s)
    for i in range(table.dim):
        e = table.unit(i)
        expected = {i: sigma} if sigma else {}
        if table.mul(cas, e) != expected or table.mul(e, cas) != expected:
            return False
    return True


def eigenspectrum_polynomial(two_s: int, a) -> UeaElement:
    """prod_j (J_a^2 + (j+1/2)^2) for odd 2s; J_a prod_j (J_a^2 + j^2) for even 2s."""
    ja = UeaElement.generator(axis_index(a))
    sq = ja * ja
    if two_s % 2:
        out = ONE
        for j in range((two_s - 1) // 2 + 1):
            out = out * (sq + (Fraction(2 * j + 1, 2)) ** 2)
        return out
    out = ja
    for j in range(1, two_s // 2 + 1):
        out = out * (sq + j * j)
    return out


def eigenspectrum_check(s: SpinLabel | int, a) -> bool:
    two_s = s.two_s if isinstance(s, SpinLabel) else int(s)
    return not quotient_reduce(two_s, eigenspectrum_polynomial(two_s, a))


def top_multipole_vanishes(s: SpinLabel | int) -> bool:
    two_s = s.two_s if isinstance(s, SpinLabel) else int(s)
    for n in (two_s + 1, two_s + 2):
        for comp in multipole_basis(n).components:
            if quotient_reduce(two_s, comp.expansion):
                return False
    return True


def casimir_factor_identity_check(k: int) -> bool:
    """(4C + k(k+2)) T_k vanishes in S_{k/2}, checked two ways.

    In the table, and in U itself: every such element lies in the span of
    step-downs D_a T_{k+1}(w), which belong to the ideal generated by Im T_{k+1}.
    """
    factor = CASIMIR * 4 + k * (k + 2)
    targets = [factor * comp.expansion for comp in multipole_basis(k).components]
    if any(quotient_reduce(k, t) for t in targets):
        return False
    ech = Echelon()
    for a in range(3):
        for comp in multipole_basis(k + 1).components:
            ech.insert(step(StepKind.DOWN, a, k + 1, comp.expansion).terms)
    return all(ech.contains(t.terms) for t in targets)


def stepdown_stepup_vanishes(s: SpinLabel | int, a, b, words: Sequence[Sequence] | None = None) -> bool:
    two_s = s.two_s if isinstance(s, SpinLabel) else int(s)
    if words is None:
        words = [comp.indices for comp in multipole_basis(two_s).components]
    for w in words:
        t = multipole(two_s, _word(w))
        up = step(StepKind.UP, b, two_s, t)
        down = step(StepKind.DOWN, a, two_s + 1, up)
        if quotient_reduce(two_s, down):
            return False
    return True


def level_one_commutators(table: SpinAlgebraTable) -> bool:
    """[J_a, J_b] = sum_c eps_abc J_c inside the table."""
    from .uea import structure_constant
    for a in range(3):
        for b in range(3):
            ja, jb = _generator_vec(table, a), _generator_vec(table, b)
            ab, ba = table.mul(ja, jb), table.mul(jb, ja)
            comm = {l: ab.get(l, 0) - ba.get(l, 0) for l in set(ab) | set(ba)}
            comm = {l: c for l, c in comm.items() if c}
            expected: dict[int, Fraction] = {}
            for c in range(3):
                eps = structure_constant(a, b, c)
                for l, v in _generator_vec(table, c).items():
                    if eps:
                        expected[l] = expected.get(l, 0) + eps * v
            if comm != {l: c for l, c in expected.items() if c}:
                return False
    return True


def element_vector(table: SpinAlgebraTable, word: Sequence) -> dict[int, Fraction]:
    """Product of generators evaluated through the table's structure constants."""
    vec = table.unit(table.index((0, 0)))
    for g in _word(word):
        vec = table.mul(vec, _generator_vec(table, g))
    return vec


def _combine(*terms: tuple[Fraction, Mapping[int, Fraction]]) -> dict[int, Fraction]:
    out: dict[int, Fraction] = {}
    for c, vec in terms:
        for l, v in vec.items():
            out[l] = out.get(l, 0) + c * v
    return {l: v for l, v in out.items() if v}


def clifford_check(table: SpinAlgebraTable) -> bool:
    """J_a J_b + J_b J_a = -(1/2) delta_ab in S_{1/2}."""
    one = table.unit(table.index((0, 0)))
    for a in range(3):
        for b in range(3):
            lhs = _combine((1, element_vector(table, (a, b))), (1, element_vector(table, (b, a))))
            rhs = _combine((Fraction(-1, 2) if a == b else 0, one))
            if lhs != rhs:
                return False
    return True


def kemmer_check(table: SpinAlgebraTable) -> bool:
    """J_a J_b J_c + J_c J_b J_a = -(delta_ab J_c + delta_bc J_a) in S_1."""
    for a, b, c in product(range(3), repeat=3):
        lhs = _combine((1, element_vector(table, (a, b, c))), (1, element_vector(table, (c, b, a))))
        rhs = _combine((-1 if a == b else 0, _generator_vec(table, c)),
                       (-1 if b == c else 0, _generator_vec(table, a)))
        if lhs != rhs:
            return False
    return True
