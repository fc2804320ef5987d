import json
from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from realspin import multipole as mp
from realspin import spinalg as sa
from realspin.uea import CASIMIR, JX, JY, JZ, ONE, UeaElement, monomials_up_to, normal_form


def test_casimir_scalar_values():
    assert [sa.casimir_scalar(k) for k in range(5)] == [0, F(-3, 4), -2, F(-15, 4), -6]


def test_spin_label():
    assert sa.SpinLabel(3).s == F(3, 2)
    with pytest.raises(ValueError):
        sa.SpinLabel(-1)


def test_reduce_examples():
    assert sa.central_multipole_reduce(ONE) == {(0, 0, 0): 1}
    assert sa.central_multipole_reduce(CASIMIR) == {(1, 0, 0): 1}
    assert sa.central_multipole_reduce(JX * JY - JY * JX) == {(0, 1, 2): 1}


def test_reduce_xy_is_half_quadrupole_plus_half_dipole():
    xy = [c for c in mp.multipole_basis(2).components if c.label == "xy"]
    idx = mp.multipole_basis(2).components.index(xy[0])
    assert sa.central_multipole_reduce(JX * JY) == {(0, 1, 2): F(1, 2), (0, 2, idx): 1}
    # T_2(xy) = sym(J_x J_y), so J_x J_y = T_2(xy) + [J_x, J_y]/2
    assert mp.multipole(2, "xy") == (JX * JY + JY * JX) * F(1, 2)


def test_reduce_xx_has_casimir_third():
    coeffs = sa.central_multipole_reduce(JX * JX)
    assert coeffs[(1, 0, 0)] == F(1, 3)
    assert {k[1] for k in coeffs} == {0, 2}


@pytest.mark.parametrize("N", range(6))
def test_basis_count_matches_pbw_dimension(N):
    assert len(sa.entries_up_to(N)) == comb(N + 3, 3) == len(monomials_up_to(N))


@st.composite
def elements(draw, max_degree=5):
    monos = monomials_up_to(max_degree)
    terms = draw(st.dictionaries(st.sampled_from(monos),
                                 st.fractions(min_value=-4, max_value=4, max_denominator=5),
                                 max_size=4))
    return UeaElement(terms)


@settings(max_examples=40)
@given(elements())
def test_reduce_reconstructs(x):
    basis = sa.CentralMultipoleBasis(5)
    assert basis.reconstruct(basis.reduce(x)) == x


def test_reduce_rejects_over_cap():
    with pytest.raises(ValueError):
        sa.CentralMultipoleBasis(2).reduce(normal_form("xyz"))


def test_spin_zero():
    t = sa.spin_algebra(0)
    assert t.dim == 1
    assert t.constants == {(0, 0): {0: 1}}
    assert not sa.quotient_reduce(0, JX)
    assert not sa.quotient_reduce(0, CASIMIR)


@pytest.mark.parametrize("two_s", range(4))
def test_table_dimension_identity_and_casimir(two_s):
    t = sa.spin_algebra(two_s)
    assert t.dim == (two_s + 1) ** 2
    assert sa.reduced_rank(two_s) == t.dim
    assert sa.check_identity(t)
    assert sa.casimir_scalar_check(two_s)
    assert sa.level_one_commutators(t)


def test_clifford_and_kemmer():
    assert sa.clifford_check(sa.spin_algebra(1))
    assert sa.kemmer_check(sa.spin_algebra(2))
    # neither identity carries over to the neighbouring spin
    assert not sa.clifford_check(sa.spin_algebra(2))
    assert not sa.kemmer_check(sa.spin_algebra(3))


def test_spin_half_products():
    t = sa.spin_algebra(1)
    assert sa.element_vector(t, "xy") == {t.index((1, 2)): F(1, 2)}
    assert sa.element_vector(t, "xx") == {t.index((0, 0)): F(-1, 4)}


@pytest.mark.parametrize("two_s", range(4))
def test_eigenspectrum(two_s):
    assert all(sa.eigenspectrum_check(two_s, a) for a in "xyz")


def test_eigenspectrum_polynomial_examples():
    assert sa.eigenspectrum_polynomial(1, "z") == JZ * JZ + F(1, 4)
    assert sa.eigenspectrum_polynomial(2, "z") == JZ * (JZ * JZ + 1)
    assert sa.eigenspectrum_polynomial(0, "z") == JZ


def test_eigenspectrum_polynomial_is_not_trivially_zero():
    # dropping one root leaves something nonzero
    assert sa.quotient_reduce(2, JZ * JZ + 1)


@pytest.mark.parametrize("two_s", range(4))
def test_top_multipole_and_factor_identity(two_s):
    assert sa.top_multipole_vanishes(two_s)
    assert sa.casimir_factor_identity_check(two_s)


@pytest.mark.parametrize("two_s, a, b", [(1, "x", "y"), (2, "z", "z"), (0, "x", "x")])
def test_stepdown_of_stepup_vanishes(two_s, a, b):
    assert sa.stepdown_stepup_vanishes(two_s, a, b)


@pytest.mark.parametrize("two_s", [1, 2])
def test_associativity_exhaustive(two_s):
    assert sa.check_associativity(sa.spin_algebra(two_s))


def test_associativity_sampled():
    t = sa.spin_algebra(3)
    assert sa.check_associativity(t, sa.random_triples(t.dim, 200, seed=1))


def test_associativity_detects_corruption():
    t = sa.SpinAlgebraTable.from_json(sa.spin_algebra(1).to_json())
    t.constants[1, 2] = {3: F(1)}
    assert not sa.check_associativity(t)


def test_json_roundtrip():
    t = sa.spin_algebra(2)
    back = sa.SpinAlgebraTable.from_json(json.loads(t.dumps()))
    assert back == t
    assert back.to_json() == t.to_json()


def test_cap(monkeypatch):
    monkeypatch.setenv("REALSPIN_TWO_S_CAP", "2")
    with pytest.raises(ValueError):
        sa.build_spin_algebra(3)
    with pytest.raises(ValueError):
        sa.build_spin_algebra(-1)
