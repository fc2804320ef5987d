import math
from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, strategies as st

from realspin.exactnum import (FactoredMinPoly, NonCommutingError, Polynomial, apply_poly,
                               bezout_projectors, extended_gcd, mutual_projectors,
                               simple_projector)
from realspin.uea import JY, UeaElement, e_action, monomials_up_to, symmetric_grading

x = Polynomial.x()


def P(*cs):
    return Polynomial(cs)


# -- Polynomial ---------------------------------------------------------------

def test_polynomial_canonical_zero_and_degree():
    assert Polynomial([0, 0]).is_zero()
    assert Polynomial().degree == -1
    assert P(1, 2, 0).coeffs == (F(1), F(2))


def test_divmod_roundtrip():
    p = P(3, 0, -2, 5, 1)
    q = P(F(1, 2), 1, 2)
    quo, rem = divmod(p, q)
    assert quo * q + rem == p
    assert rem.degree < q.degree


@given(st.lists(st.fractions(max_denominator=20), min_size=0, max_size=5),
       st.lists(st.fractions(max_denominator=20), min_size=0, max_size=5))
def test_rational_canonical_form_closed(a, b):
    for u, v in zip(a, b):
        for r in (u + v, u * v) + ((u / v,) if v else ()):
            assert r.denominator > 0
            assert math.gcd(r.numerator, r.denominator) == 1
            if r == 0:
                assert (r.numerator, r.denominator) == (0, 1)


# -- extended_gcd --------------------------------------------------------------

@pytest.mark.parametrize("p, q, expected", [
    (x, x + 2, (P(1), P(F(-1, 2)), P(F(1, 2)))),
    (x * x - 1, x - 1, (x - 1, Polynomial(), P(1))),
    (x * x + 1, x, (P(1), P(1), -x)),
])
def test_extended_gcd_examples(p, q, expected):
    assert extended_gcd(p, q) == expected


def test_extended_gcd_rejects_double_zero():
    with pytest.raises(ValueError):
        extended_gcd(Polynomial(), Polynomial())


poly_st = st.lists(st.integers(-6, 6).map(F), min_size=0, max_size=6).map(Polynomial)


@given(poly_st, poly_st)
def test_extended_gcd_bezout(p, q):
    if p.is_zero() and q.is_zero():
        return
    g, a, b = extended_gcd(p, q)
    assert a * p + b * q == g
    assert g.lead == 1
    assert (p % g).is_zero() and (q % g).is_zero()
    if not q.is_zero():
        assert a.is_zero() or a.degree < q.degree - g.degree


# -- projectors ----------------------------------------------------------------

def test_bezout_two_linear_factors():
    ps = bezout_projectors(FactoredMinPoly([(x, 1), (x + 2, 1)]))
    assert ps.projectors == ((x + 2) * F(1, 2), x * F(-1, 2))
    assert ps.check()


def test_bezout_single_factor_is_identity():
    ps = bezout_projectors(FactoredMinPoly([(x + 2, 1)]))
    assert ps.projectors == (P(1),)


def test_bezout_planar_rotation():
    c = F(3, 5)
    rot = x * x - 2 * c * x + 1
    ps = bezout_projectors(FactoredMinPoly([(x - 1, 1), (rot, 1)]))
    assert ps.check()
    # a concrete rotation about z by the angle with cos = 3/5, sin = 4/5
    A = np.array([[c, F(-4, 5), 0], [F(4, 5), c, 0], [0, 0, 1]], dtype=object)
    op = lambda v: A.dot(v)
    e = [np.array([F(int(i == j)) for j in range(3)], dtype=object) for i in range(3)]
    axis = [apply_poly(ps.projectors[0], op, v) for v in e]
    plane = [apply_poly(ps.projectors[1], op, v) for v in e]
    assert [list(v) for v in axis] == [[0, 0, 0], [0, 0, 0], [0, 0, 1]]
    assert [list(v) for v in plane] == [[1, 0, 0], [0, 1, 0], [0, 0, 0]]


def test_bezout_rejects_common_factor():
    with pytest.raises(ValueError):
        bezout_projectors(FactoredMinPoly([(x - 1, 1), (x * x - 1, 1)]))


@st.composite
def factorizations(draw):
    n = draw(st.integers(1, 6))
    roots = draw(st.lists(st.fractions(min_value=-10, max_value=10, max_denominator=4),
                          min_size=n, max_size=n, unique=True))
    factors, i, budget = [], 0, 6
    while i < len(roots) and budget > 0:
        shape = draw(st.sampled_from(["lin", "sq", "quad"]))
        if shape == "sq" and budget >= 2:
            factors.append((x - roots[i], 2))
            i, budget = i + 1, budget - 2
        elif shape == "quad" and budget >= 2 and i + 1 < len(roots):
            factors.append(((x - roots[i]) * (x - roots[i + 1]), 1))
            i, budget = i + 2, budget - 2
        else:
            factors.append((x - roots[i], 1))
            i, budget = i + 1, budget - 1
    return FactoredMinPoly(factors)


@given(factorizations())
def test_projector_congruences(m):
    ps = bezout_projectors(m)
    full = m.polynomial()
    assert full.degree <= 6
    total = Polynomial()
    for i, pi in enumerate(ps.projectors):
        total = total + pi
        assert ((pi * pi - pi) % full).is_zero()
        f, d = m.factors[i]
        assert ((f**d * pi) % full).is_zero()
        for j, pj in enumerate(ps.projectors):
            if i != j:
                assert ((pi * pj) % full).is_zero()
    assert ((total - 1) % full).is_zero()


def test_simple_projector_examples():
    assert simple_projector(0, x + 2) == (x + 2) * F(1, 2)
    assert simple_projector(-2, x) == x * F(-1, 2)
    q = x * (x + 2) * (x + 12)
    assert q(-6) == 144
    p = simple_projector(-6, q)
    assert p == q * F(1, 144)
    assert (((x + 6) * p) % ((x + 6) * q)).is_zero()


def test_simple_projector_rejects_root():
    with pytest.raises(ValueError):
        simple_projector(-2, x + 2)


def test_simple_projector_matches_bezout():
    roots = [0, -2, -6]
    m = FactoredMinPoly([(x - r, 1) for r in roots])
    ps = bezout_projectors(m)
    for i, lam in enumerate(roots):
        q = Polynomial.from_roots(r for r in roots if r != lam)
        assert ps.projectors[i] == simple_projector(lam, q)


# -- apply_poly ----------------------------------------------------------------

def test_apply_poly_examples():
    u = UeaElement({(1, 2, 0): 3})
    assert apply_poly(P(1), e_action, u) == u
    assert apply_poly(x, e_action, JY) == JY * -2
    assert apply_poly(x * (x + 2), e_action, JY).is_zero()


def test_apply_poly_horner_matches_powers():
    u = UeaElement({(1, 1, 0): 1, (0, 0, 2): F(1, 3)})
    p = P(2, F(-1, 2), 3)
    direct = u * 2 - e_action(u) * F(1, 2) + e_action(e_action(u)) * 3
    assert apply_poly(p, e_action, u) == direct


# -- mutual projectors ---------------------------------------------------------

def _basis2():
    return [UeaElement({m: 1}) for m in monomials_up_to(2)]


def test_mutual_single_decomposition():
    ps = bezout_projectors(FactoredMinPoly([(x, 1), (x + 2, 1), (x + 6, 1)]))
    res = mutual_projectors([(ps, e_action)], _basis2(), lambda u: u.terms)
    assert [r.rank for r in res] == [2, 3, 5]


def test_mutual_same_decomposition_twice():
    ps = bezout_projectors(FactoredMinPoly([(x, 1), (x + 2, 1), (x + 6, 1)]))
    res = mutual_projectors([(ps, e_action), (ps, e_action)], _basis2(), lambda u: u.terms)
    ranks = {r.labels: r.rank for r in res}
    assert {lab: r for lab, r in ranks.items() if r} == {(0, 0): 2, (1, 1): 3, (2, 2): 5}
    assert all(r.trivial for r in res if r.labels[0] != r.labels[1])


def test_mutual_level_and_order_grid():
    # E-levels {0, 1, 2} against the symmetrized tensor-order grading {0, 1, 2}
    e_ps = bezout_projectors(FactoredMinPoly([(x, 1), (x + 2, 1), (x + 6, 1)]))
    g_ps = bezout_projectors(FactoredMinPoly([(x, 1), (x - 1, 1), (x - 2, 1)]))
    res = mutual_projectors([(e_ps, e_action), (g_ps, symmetric_grading)], _basis2(),
                            lambda u: u.terms)
    grid = {r.labels: r.rank for r in res}
    # 1 and C at level 0; generators at level 1; the quadrupole at level 2
    assert grid == {(0, 0): 1, (0, 1): 0, (0, 2): 1,
                    (1, 0): 0, (1, 1): 3, (1, 2): 0,
                    (2, 0): 0, (2, 1): 0, (2, 2): 5}
    assert sum(grid.values()) == 10


def test_mutual_detects_noncommuting():
    # left multiplication by J_x restricted by PBW projection does not commute with E
    e_ps = bezout_projectors(FactoredMinPoly([(x, 1), (x + 2, 1), (x + 6, 1)]))
    half = bezout_projectors(FactoredMinPoly([(x, 1), (x - 1, 1)]))

    def proj_deg2(u):
        return u.homogeneous_part(2) if u.degree >= 0 else u

    with pytest.raises(NonCommutingError):
        mutual_projectors([(e_ps, e_action), (half, proj_deg2)], _basis2(), lambda u: u.terms)
