import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from realspin import oracle
from realspin import multipole as mp
from realspin.spinalg import SpinAlgebraTable, spin_algebra
from realspin.uea import CASIMIR, ONE, UeaElement, monomials_up_to

PAULI = [np.array([[0, 1], [1, 0]]), np.array([[0, -1j], [1j, 0]]), np.array([[1, 0], [0, -1]])]


def comm(a, b):
    return a @ b - b @ a


def test_spin_half_is_half_pauli():
    for s, p in zip(oracle.build_spin_matrices(1), PAULI):
        assert np.allclose(s, p / 2)


def test_spin_zero_matrices():
    for s in oracle.build_spin_matrices(0):
        assert s.shape == (1, 1) and not s.any()


@pytest.mark.parametrize("two_s", range(6))
def test_physics_relations(two_s):
    sx, sy, sz = oracle.build_spin_matrices(two_s)
    s = two_s / 2
    assert np.allclose(comm(sx, sy), 1j * sz)
    assert np.allclose(comm(sy, sz), 1j * sx)
    assert np.allclose(sx @ sx + sy @ sy + sz @ sz, s * (s + 1) * np.eye(two_s + 1))


@pytest.mark.parametrize("two_s", range(6))
def test_real_relations(two_s):
    jx, jy, jz = oracle.to_real_convention(oracle.build_spin_matrices(two_s))
    s = two_s / 2
    assert np.linalg.norm(comm(jx, jy) - jz) < 1e-12
    assert np.linalg.norm(comm(jz, jx) - jy) < 1e-12
    assert np.allclose(jx @ jx + jy @ jy + jz @ jz, -s * (s + 1) * np.eye(two_s + 1))


def test_evaluate_examples():
    assert np.allclose(oracle.evaluate(ONE, 3), np.eye(4))
    assert np.allclose(oracle.evaluate(CASIMIR, 1), -0.75 * np.eye(2), atol=1e-12)
    assert np.allclose(oracle.evaluate(CASIMIR, 2), -2 * np.eye(3), atol=1e-12)
    for comp in mp.multipole_basis(2):
        assert np.linalg.norm(oracle.evaluate(comp.expansion, 1)) < 1e-10


def test_rep_config_validation():
    with pytest.raises(ValueError):
        oracle.RepConfig(1, "complex")
    with pytest.raises(ValueError):
        oracle.RepConfig(-2)


@st.composite
def elements(draw):
    terms = draw(st.dictionaries(st.sampled_from(monomials_up_to(4)),
                                 st.fractions(min_value=-3, max_value=3, max_denominator=4),
                                 max_size=3))
    return UeaElement(terms)


@settings(max_examples=30)
@given(elements(), elements())
def test_evaluate_is_a_homomorphism(a, b):
    for two_s in (1, 3):
        lhs = oracle.evaluate(a * b, two_s)
        rhs = oracle.evaluate(a, two_s) @ oracle.evaluate(b, two_s)
        assert np.linalg.norm(lhs - rhs) < 1e-10 * max(1.0, np.linalg.norm(lhs))
        assert np.allclose(oracle.evaluate(a + b, two_s),
                           oracle.evaluate(a, two_s) + oracle.evaluate(b, two_s))


@pytest.mark.parametrize("two_s", range(4))
def test_compare_structure_constants(two_s):
    rep = oracle.compare_structure_constants(spin_algebra(two_s), tol=1e-10)
    assert rep.passed
    assert rep.max_deviation < 1e-10


def test_compare_catches_wrong_constant():
    t = SpinAlgebraTable.from_json(spin_algebra(1).to_json())
    t.constants[1, 2] = {3: 1}
    rep = oracle.compare_structure_constants(t)
    assert not rep.passed
    assert rep.worst_pair == (1, 2)


@pytest.mark.parametrize("two_s", range(4))
def test_multipole_ranks(two_s):
    for k in range(two_s + 1):
        assert oracle.multipole_image_rank(k, two_s) == 2 * k + 1
    assert oracle.multipole_image_rank(two_s + 1, two_s) == 0


def test_clifford_kemmer_residuals():
    assert oracle.clifford_residual() < 1e-10
    assert oracle.kemmer_residual() < 1e-10


@pytest.mark.parametrize("k", range(4))
def test_hermiticity_alternates(k):
    expected = "hermitian" if k % 2 == 0 else "antihermitian"
    assert oracle.hermiticity(k, 3) == expected
