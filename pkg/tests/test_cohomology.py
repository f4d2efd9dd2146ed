import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from matorbit.cohomology import (
    InterpolationError, codim_matrix_orbit, codim_torus_orbit, degree_from_class, degree_uniform,
    gkm_check, interpolate, klocalize_limit, klocalize_orbit, localization_table,
    localize_expansion, localize_grassmannian, localize_orbit_via_permutations,
    localize_uniform_closed, multidegree, random_point, rotated_complement, section_form,
    uniform_class, uniform_class_grassmannian, uniform_class_omega, uniform_class_ut,
    degree_uniform_class,
)
from matorbit.exactpoly import LaurentPoly
from matorbit.kclass import Rank2Config, k_rank2, k_uniform_rank2
from matorbit.linalg import RationalMatrix
from matorbit.matroid import Matroid
from matorbit.oracle import degree_from_k, initial_ideal, iprime_generators, k_numerator_monomial
from matorbit.symfunc import SchurExpansion, rho, rho_H, schur_expand

Z4 = (0, 0, 0, 0)


def e1(n):
    return {((), tuple(int(i == j) for i in range(n))): 1 for j in range(n)}


def from_bases_excluding(n, r, bad):
    return Matroid.from_bases(n, r, [B for B in combinations(range(1, n + 1), r) if B not in bad])


# -- multidegree ------------------------------------------------------------------------------


def test_multidegree_uniform():
    C = multidegree(k_uniform_rank2(4), 1)
    assert C == SchurExpansion(2, 4, {((1,), Z4): 2, **e1(4)})


def test_multidegree_det():
    E = SchurExpansion(2, 2, {((), (0, 0)): 1, ((1, 1), (1, 1)): -1})
    assert multidegree(E, 1) == SchurExpansion(2, 2, {((1,), (0, 0)): 1, **e1(2)})


def test_multidegree_of_one():
    one = SchurExpansion(2, 3, {((), (0, 0, 0)): 1})
    assert multidegree(one, 0) == one


def test_multidegree_wrong_codim():
    with pytest.raises(ValueError, match="below codim"):
        multidegree(k_uniform_rank2(4), 2)
    with pytest.raises(ValueError):
        multidegree(k_uniform_rank2(4), -1)


@pytest.mark.parametrize("mu", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1), (1, 1, 1, 1),
                                (3, 2), (2, 2, 1), (1, 1, 1, 1, 1)])
def test_multidegree_sits_at_codim(mu):
    cfg = Rank2Config.from_mu(mu)
    c = codim_matrix_orbit(cfg.matroid(), 2)
    C = multidegree(k_rank2(cfg), c)
    assert C.terms or c == 0
    assert all(len(lam) + sum(a) == c or sum(lam) + sum(a) == c for lam, a in C.terms)


@pytest.mark.parametrize("mu", [(1, 1), (2, 1), (1, 1, 1), (2, 2), (3, 1), (2, 1, 1)])
def test_rho_h_pipeline(mu):
    cfg = Rank2Config.from_mu(mu)
    E, n = k_rank2(cfg), cfg.n
    c = codim_matrix_orbit(cfg.matroid(), 2)
    assert multidegree(rho(E), c + n - 2) == rho_H(1, multidegree(E, c))


# -- codimensions ------------------------------------------------------------------------------------


def test_codim_examples():
    assert codim_matrix_orbit(Matroid.uniform(2, 4), 2) == 1
    assert codim_matrix_orbit(Matroid.uniform(2, 3), 2) == 0
    assert codim_matrix_orbit(from_bases_excluding(4, 2, [(1, 2), (3, 4)]), 2) == 2
    with pytest.raises(ValueError):
        codim_matrix_orbit(Matroid.uniform(2, 4), 3)


def test_torus_codim():
    assert codim_torus_orbit(Matroid.uniform(2, 4)) == 1
    assert codim_torus_orbit(Matroid.uniform(3, 6)) == 4


# -- uniform class -----------------------------------------------------------------------------------


def test_rotated_complement():
    assert rotated_complement((), 1, 2) == (2,)
    assert rotated_complement((1,), 1, 2) == (1,)
    assert rotated_complement((2, 1), 2, 2) == (1,)


def test_uniform_class_examples():
    assert uniform_class_ut(2, 3) == SchurExpansion(2, 3, {((), (0, 0, 0)): 1})
    assert uniform_class_ut(2, 4) == SchurExpansion(2, 4, {((1,), Z4): 2, **e1(4)})
    assert uniform_class_ut(2, 4) == multidegree(k_uniform_rank2(4), 1)


@pytest.mark.parametrize("r,n", [(2, 4), (2, 5), (2, 6), (3, 5), (3, 6)])
def test_uniform_class_forms_agree(r, n):
    shown = uniform_class_ut(r, n)
    assert shown == uniform_class_omega(r, n)
    C = uniform_class(r, n)
    assert all((lam[0] if lam else 0) <= n - r for lam, _ in C.terms)
    assert (C == shown) == ((r, n) != (3, 6))


def test_section_form_is_invisible_to_restriction():
    rng = random.Random(3)
    C, shown = uniform_class(3, 6), uniform_class_ut(3, 6)
    assert any(lam and lam[0] > 3 for lam, _ in shown.terms)
    for _ in range(3):
        pt = random_point(6, rng)
        for B in combinations(range(1, 7), 3):
            assert localize_expansion(C, B, pt) == localize_expansion(shown, B, pt)


def test_section_form_fixes_small_classes():
    E = SchurExpansion(2, 3, {((1,), (1, 0, 0)): 2, ((), (0, 1, 1)): -1})
    assert section_form(E) == E
    # h_2(u) with r = 2, n = 3: h_2 = -e_1(t) h_1 - e_2(t)
    h2 = section_form(SchurExpansion(2, 3, {((2,), (0, 0, 0)): 1}))
    want = {((1,), (1, 0, 0)): -1, ((1,), (0, 1, 0)): -1, ((1,), (0, 0, 1)): -1,
            ((), (1, 1, 0)): -1, ((), (1, 0, 1)): -1, ((), (0, 1, 1)): -1}
    assert h2 == SchurExpansion(2, 3, want)


@pytest.mark.slow
def test_uniform_class_3_6_against_oracle():
    v = RationalMatrix([[1] * 6, list(range(1, 7)), [j * j for j in range(1, 7)]])
    lms = initial_ideal(iprime_generators(v), cap_steps=10**8)
    assert all(e <= 1 for m in lms for e in m)
    P = k_numerator_monomial(lms, 3, 6)
    assert multidegree(schur_expand(P, 3, 6), 4) == uniform_class(3, 6)
    assert degree_from_k(P, 3, 4) == degree_uniform_class(3, 6) == 90
    assert degree_uniform(3, 6) == 105


@pytest.mark.parametrize("n", [4, 5, 6])
def test_uniform_class_is_multidegree(n):
    assert uniform_class_ut(2, n) == multidegree(k_uniform_rank2(n), n - 3)


def test_uniform_class_rejects_bad_shape():
    with pytest.raises(ValueError):
        uniform_class_grassmannian(1, 3)
    with pytest.raises(ValueError):
        uniform_class_grassmannian(3, 3)


# -- localization ----------------------------------------------------------------------------------


def test_localization_examples():
    U = Matroid.uniform(2, 4)
    assert localize_uniform_closed((1, 2), 2, 4, (1, 2, 3, 4)) == 4
    assert localize_orbit_via_permutations(U, (1, 2), (1, 2, 3, 4)) == 4
    assert localize_uniform_closed((1, 2), 2, 3, (5, 7, 11)) == 1


def test_localization_non_basis_and_point_orbit():
    M = from_bases_excluding(4, 2, [(1, 2)])
    assert localize_orbit_via_permutations(M, (1, 2), (1, 2, 3, 4)) == 0
    assert klocalize_orbit(M, (1, 2), (1, 2, 3, 4)) == 0
    I = Matroid.uniform(3, 3)
    assert localize_orbit_via_permutations(I, (1, 2, 3), (2, 3, 5)) == 1
    assert klocalize_orbit(I, (1, 2, 3), (2, 3, 5)) == 1


def test_repeated_t_values_rejected():
    with pytest.raises(ValueError):
        localize_uniform_closed((1, 2), 2, 4, (1, 1, 3, 4))
    with pytest.raises(ValueError):
        klocalize_orbit(Matroid.uniform(2, 4), (1, 2), (0, 1, 3, 4))


@pytest.mark.parametrize("r,n", [(2, 4), (2, 5), (3, 5), (2, 6), (3, 6)])
def test_closed_form_matches_permutation_lemma(r, n):
    rng = random.Random(r * 10 + n)
    U = Matroid.uniform(r, n)
    ut = uniform_class_ut(r, n)
    for _ in range(20 if n < 6 else 3):
        pt = random_point(n, rng)
        for B in combinations(range(1, n + 1), r):
            a = localize_uniform_closed(B, r, n, pt)
            assert a == localize_orbit_via_permutations(U, B, pt)
            assert a == localize_grassmannian(r, n, B, pt)
            assert a == localize_expansion(ut, B, pt)


def test_printed_q_restriction_differs_off_self_conjugate():
    pt = (1, 2, 3, 4)
    assert localize_grassmannian(2, 4, (1, 2), pt, as_printed=True) == localize_grassmannian(2, 4, (1, 2), pt)
    pt5 = (1, 2, 3, 5, 8)
    diff = [B for B in combinations(range(1, 6), 2)
            if localize_grassmannian(2, 5, B, pt5, as_printed=True) != localize_grassmannian(2, 5, B, pt5)]
    assert diff


def test_disconnected_localization_factorizes():
    M = from_bases_excluding(4, 2, [(1, 2), (3, 4)])
    pt = [Fraction(x) for x in (2, 3, 7, 11)]
    # each component is U_{1,2}: one permutation survives in each, giving 1/(t_b - t_a)
    expected = (pt[1] - pt[0]) * (pt[3] - pt[0]) * (pt[1] - pt[2]) * (pt[3] - pt[2])
    expected /= (pt[1] - pt[0]) * (pt[3] - pt[2])
    assert localize_orbit_via_permutations(M, (1, 3), pt) == expected
    # full interpolation must give a polynomial of degree codim
    L = localization_table(lambda B, p: localize_orbit_via_permutations(M, B, p), 2, 4, codim_torus_orbit(M))
    assert gkm_check(L)


@pytest.mark.parametrize("B", [(1, 2), (1, 3), (2, 4)])
def test_klocalize_limit(B):
    U = Matroid.uniform(2, 4)
    pt = (1, 2, 3, 4)
    lim = klocalize_limit(U, B, pt)
    exact = localize_orbit_via_permutations(U, B, pt)
    assert abs(lim - exact) < Fraction(1, 10**3)


@given(st.permutations([1, 2, 3, 4]))
def test_symbolic_localization_entry(perm):
    # f_B = sum over the complement minus sum over B, for every B
    B = tuple(sorted(perm[:2]))
    rng = random.Random(0)
    f = interpolate(lambda pt: localize_uniform_closed(B, 2, 4, pt), 4, 1, rng)
    names = ("t1", "t2", "t3", "t4")
    expected = LaurentPoly.zero(names)
    for j in range(1, 5):
        expected = expected + LaurentPoly.var(names, f"t{j}") * (-1 if j in B else 1)
    assert f == expected


# -- GKM -------------------------------------------------------------------------------------------


@pytest.mark.parametrize("r,n", [(2, 4), (2, 5), (3, 5)])
def test_gkm_uniform(r, n):
    codim = codim_torus_orbit(Matroid.uniform(r, n))
    L = localization_table(lambda B, pt: localize_grassmannian(r, n, B, pt), r, n, codim)
    assert gkm_check(L)


def test_gkm_edge_example():
    L = localization_table(lambda B, pt: localize_uniform_closed(B, 2, 4, pt), 2, 4, 1)
    names = L[(1, 2)].variables
    t2, t3 = LaurentPoly.var(names, "t2"), LaurentPoly.var(names, "t3")
    assert L[(1, 2)] - L[(1, 3)] == (t3 - t2) * 2


def test_gkm_constant_and_corrupted():
    names = ("t1", "t2", "t3", "t4")
    const = {B: LaurentPoly.const(names, 3) for B in combinations(range(1, 5), 2)}
    assert gkm_check(const)
    L = localization_table(lambda B, pt: localize_grassmannian(2, 4, B, pt), 2, 4, 1)
    L[(1, 2)] = L[(1, 2)] + LaurentPoly.var(names, "t1")
    assert not gkm_check(L)


def test_interpolation_rejects_non_polynomials():
    with pytest.raises(InterpolationError):
        interpolate(lambda pt: 1 / pt[0], 2, 1, random.Random(1))


# -- degrees -------------------------------------------------------------------------------------


def test_degrees():
    assert degree_uniform(2, 3) == 1
    assert degree_uniform(2, 4) == 4
    assert degree_uniform(2, 5) == 10
    assert degree_uniform(3, 5) == degree_uniform_class(3, 5) == 15


@pytest.mark.parametrize("n", [4, 5, 6])
def test_degree_from_class_matches(n):
    assert degree_from_class(uniform_class_ut(2, n)) == degree_uniform(2, n)
