"""The identity battery behind ``realspin verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Iterator

from . import multipole as mp
from . import spinalg as sa
from .exactnum import FactoredMinPoly, Polynomial, bezout_projectors
from .uea import (GENERATORS, ONE, UeaElement, ad_gen, adjoint, cross, e_action,
                  e_action_lr, e_factor, left_gen, monomials_up_to, right_gen)


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    detail: str = ""


# -- random inputs --------------------------------------------------------------

def random_coprime_factorization(rng: random.Random, max_degree: int = 6) -> FactoredMinPoly:
    """Distinct rational roots, grouped into linear, quadratic and repeated factors."""
    deg = rng.randint(1, max_degree)
    roots = set()
    while len(roots) < deg:
        roots.add(Fraction(rng.randint(-12, 12), rng.randint(1, 4)))
    roots = sorted(roots)
    rng.shuffle(roots)
    factors = []
    budget = deg
    while roots and budget > 0:
        r = roots.pop()
        if budget >= 2 and rng.random() < 0.3:
            factors.append((Polynomial.from_roots([r]), 2))
            budget -= 2
        elif budget >= 2 and roots and rng.random() < 0.3:
            r2 = roots.pop()
            factors.append((Polynomial.from_roots([r, r2]), 1))
            budget -= 2
        else:
            factors.append((Polynomial.from_roots([r]), 1))
            budget -= 1
    return FactoredMinPoly(factors)


def random_element(rng: random.Random, max_degree: int = 4, n_terms: int = 4) -> UeaElement:
    monos = monomials_up_to(max_degree)
    return UeaElement({rng.choice(monos): Fraction(rng.randint(-9, 9), rng.randint(1, 5))
                       for _ in range(n_terms)})


# -- operator identities on U ----------------------------------------------------

def _comm(f: Callable, g: Callable) -> Callable:
    return lambda x: f(g(x)) - g(f(x))


def left_action_identity(v: int, x: UeaElement) -> bool:
    """[E,[E,[E,L_v]]] + 2[E^2, L_v] = 0.

    Expanded binomially: E^3 L - 3 E^2 L E + 3 E L E^2 - L E^3 + 2 E^2 L - 2 L E^2.
    """
    E = e_action
    L = lambda y: left_gen(v, y)
    x1 = E(x)
    x2 = E(x1)
    x3 = E(x2)
    l0, l1, l2, l3 = L(x), L(x1), L(x2), L(x3)
    e2l0 = E(E(l0))
    lhs = (E(e2l0) - E(E(l1)) * 3 + E(l2) * 3 - l3) + (e2l0 - l2) * 2
    return lhs.is_zero()


def cas_action_identity(x: UeaElement) -> bool:
    return e_action(x) == e_action_lr(x)


def f_operator(b: int, x: UeaElement) -> UeaElement:
    """F(J_b) = sum_{c,a} eps_bca L_c R_a."""
    out = UeaElement()
    for c in range(3):
        cr = cross(b, c)
        if cr is None:
            continue
        a, sign = cr
        out = out + left_gen(c, right_gen(a, x)) * sign
    return out


def first_e_l_commutator(b: int, x: UeaElement) -> bool:
    L = lambda y: left_gen(b, y)
    return _comm(e_action, L)(x) == f_operator(b, x) * -2


def l_r_e_commutator(a: int, x: UeaElement) -> bool:
    L = lambda y: left_gen(a, y)
    R = lambda y: right_gen(a, y)
    return _comm(e_action, L)(x) == _comm(e_action, R)(x)


def e_f_commutator(b: int, x: UeaElement) -> bool:
    F = lambda y: f_operator(b, y)
    lhs = _comm(e_action, F)(x)
    rhs = left_gen(b, e_action(x)) + e_action(right_gen(b, x))
    return lhs == rhs


def jacobi_ad(a: int, b: int, x: UeaElement) -> bool:
    """ad_{a x b} = ad_a ad_b - ad_b ad_a."""
    cr = cross(a, b)
    lhs = UeaElement() if cr is None else ad_gen(cr[0], x) * cr[1]
    return lhs == ad_gen(a, ad_gen(b, x)) - ad_gen(b, ad_gen(a, x))


def adjoint_l_r(v: int, x: UeaElement) -> bool:
    return adjoint(GENERATORS[v], x) == left_gen(v, x) - right_gen(v, x)


# -- batteries ------------------------------------------------------------------

def algebra_checks(n_random: int = 20, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    ok = all(bezout_projectors(random_coprime_factorization(rng)).check() for _ in range(50))
    yield CheckResult("projector congruences", "Bezout projectors", ok)
    ok = e_action(ONE).is_zero() and all(e_action(g) == g * -2 for g in GENERATORS)
    yield CheckResult("E eigenvalues on monopole and dipole", "minimal polynomials x and x+2", ok)
    xs = [random_element(rng) for _ in range(n_random)]
    yield CheckResult("E = 2L_C - 2 sum L_a R_a", "casimir action identity",
                      all(cas_action_identity(x) for x in xs))
    yield CheckResult("[E, L_b] = -2F(J_b)", "first E-L commutator",
                      all(first_e_l_commutator(b, x) for x in xs for b in range(3)))
    yield CheckResult("[E, L_a] = [E, R_a]", "L-R-E commutator",
                      all(l_r_e_commutator(a, x) for x in xs for a in range(3)))
    yield CheckResult("[E, F(J_b)] = L_b E + E R_b", "E-F commutator",
                      all(e_f_commutator(b, x) for x in xs for b in range(3)))
    yield CheckResult("[E,[E,[E,L_v]]] + 2[E^2,L_v] = 0", "left action identity",
                      all(left_action_identity(v, x) for x in xs for v in range(3)))
    yield CheckResult("ad_v = L_v - R_v", "adjoint as L - R",
                      all(adjoint_l_r(v, x) for x in xs for v in range(3)))
    yield CheckResult("ad_{a x b} = [ad_a, ad_b]", "Lie algebra action",
                      all(jacobi_ad(a, b, x) for x in xs[:5] for a in range(3) for b in range(3)))


def _sample_words(k: int, rng: random.Random, exhaustive_upto: int, n: int) -> list[tuple[int, ...]]:
    if k <= exhaustive_upto:
        return list(product(range(3), repeat=k))
    return [tuple(rng.randrange(3) for _ in range(k)) for _ in range(n)]


def multipole_checks(k_max: int, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    for k in range(k_max + 1):
        words = _sample_words(k, rng, 3, 6)
        yield CheckResult(f"E_{k} T_{k} = 0", "multipoles of least tensor order",
                          all(not e_factor(k, mp.multipole(k, w)) for w in words))
        sym_ok = True
        for w in words[:4]:
            ref = mp.multipole(k, w)
            perms = set(permutations(w))
            sym_ok &= all(mp.multipole(k, p) == ref for p in list(perms)[:24])
        yield CheckResult(f"T_{k} total symmetry", "multipole total symmetry", sym_ok)
        trace_ok = True
        if k >= 2:
            for w in words[:4]:
                for p in range(k):
                    for q in range(p + 1, k):
                        trace_ok &= mp.contraction(k, w, p, q).is_zero()
        yield CheckResult(f"T_{k} tracelessness", "multipole contractionlessness", trace_ok)
        yield CheckResult(f"dim Im T_{k} = {2 * k + 1}", "image dimension 2k+1",
                          mp.image_rank(k) == 2 * k + 1)
        yield CheckResult(f"L_v = D_v + Lambda_v + S+_v on T_{k}", "identity resolution",
                          all(mp.verify_resolution(k, v, w) for w in words[:6] for v in range(3)))
        if k >= 1:
            yield CheckResult(f"cubic annihilates L_v T_{k}", "consecutive-root cubic",
                              all(mp.cubic_annihilates(k, v, w) for w in words[:3] for v in range(3)))


def step_image_checks(k_max: int = 5, seed: int = 0) -> Iterator[CheckResult]:
    rng = random.Random(seed)
    yield CheckResult("D_a T_1(b) = C delta_ab / 3", "step-down dipole image",
                      all(mp.verify_step_down_dipole(a, b) for a in range(3) for b in range(3)))
    for k in range(1, k_max + 1):
        words = _sample_words(k, rng, 3, 4)
        if k >= 2:
            yield CheckResult(f"step-down image at k={k}", "step-down multipole image",
                              all(mp.verify_step_down_image(k, a, w) for w in words for a in range(3)))
        yield CheckResult(f"step-level image at k={k}", "step-level multipole image",
                          all(mp.verify_step_level_image(k, a, w) for w in words for a in range(3)))
    for k in range(0, k_max + 1):
        words = _sample_words(k, rng, 3, 4)
        yield CheckResult(f"right-multiplication steps at k={k}", "right multiplication images",
                          all(mp.verify_right_step_identities(k, v, w) for w in words for v in range(3)))


def spin_checks(two_s_max: int) -> Iterator[CheckResult]:
    for k in range(two_s_max + 1):
        table = sa.spin_algebra(k)
        yield CheckResult(f"dim S_{k}/2 = {(k + 1) ** 2}", "spin algebra dimension",
                          table.dim == (k + 1) ** 2 and sa.reduced_rank(k) == (k + 1) ** 2)
        triples = None if k <= 3 else sa.random_triples(table.dim, 500)
        yield CheckResult(f"S_{k}/2 associativity", "associative quotient",
                          sa.check_associativity(table, triples))
        yield CheckResult(f"S_{k}/2 identity element", "unit", sa.check_identity(table))
        yield CheckResult(f"S_{k}/2 Casimir = {sa.casimir_scalar(k)}", "Casimir acts as a scalar",
                          sa.casimir_scalar_check(k))
        yield CheckResult(f"S_{k}/2 eigenspectrum polynomial", "eigenspectrum identities",
                          all(sa.eigenspectrum_check(k, a) for a in range(3)))
        yield CheckResult(f"S_{k}/2 T_{k + 1}, T_{k + 2} vanish", "top multipole generates the ideal",
                          sa.top_multipole_vanishes(k))
        yield CheckResult(f"(4C + k(k+2)) T_k = 0 at k={k}", "Casimir factor on top multipole",
                          sa.casimir_factor_identity_check(k))
        yield CheckResult(f"S_{k}/2 step-down of step-up vanishes", "step combination",
                          all(sa.stepdown_stepup_vanishes(k, a, b) for a in range(3) for b in range(3)))
        yield CheckResult(f"S_{k}/2 level-one bracket", "Lie product preserved",
                          sa.level_one_commutators(table))
    if two_s_max >= 1:
        yield CheckResult("Clifford identity in S_1/2", "Clifford algebra", sa.clifford_check(sa.spin_algebra(1)))
    if two_s_max >= 2:
        yield CheckResult("Kemmer identity in S_1", "Kemmer algebra", sa.kemmer_check(sa.spin_algebra(2)))


def oracle_checks(two_s_max: int, tol: float = 1e-10) -> Iterator[CheckResult]:
    from . import oracle

    worst = 0.0
    for k in range(two_s_max + 1):
        rep = oracle.compare_structure_constants(sa.spin_algebra(k), tol)
        worst = max(worst, rep.max_deviation)
        yield CheckResult(f"oracle structure constants 2s={k}", "matrix representation",
                          rep.passed, f"max deviation {rep.max_deviation:.3e}")
        ranks = [oracle.multipole_image_rank(n, k) for n in range(k + 2)]
        yield CheckResult(f"oracle Im T_n ranks 2s={k}", "image dimension 2k+1",
                          ranks == [2 * n + 1 for n in range(k + 1)] + [0], f"ranks {ranks}")
    c, km = oracle.clifford_residual(), oracle.kemmer_residual()
    yield CheckResult("oracle Clifford (physics convention)", "Clifford algebra", c < tol, f"residual {c:.3e}")
    yield CheckResult("oracle Kemmer (physics convention)", "Kemmer algebra", km < tol, f"residual {km:.3e}")
    yield CheckResult("oracle max deviation", "matrix representation", worst < tol, f"{worst:.3e}")


def run_all(two_s_max: int, k_max: int, with_oracle: bool = False) -> Iterator[CheckResult]:
    yield from algebra_checks()
    yield from multipole_checks(k_max)
    yield from step_image_checks(min(k_max, 5))
    yield from spin_checks(two_s_max)
    if with_oracle:
        yield from oracle_checks(two_s_max)
