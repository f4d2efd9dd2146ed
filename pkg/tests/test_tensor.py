import random
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from matorbit.acceptance import realization
from matorbit.exactpoly import LaurentPoly
from matorbit.kclass import Rank2Config, hilbert_coefficient, k_rank2
from matorbit.linalg import RationalMatrix
from matorbit.matroid import Matroid, catalog
from matorbit.symfunc import SchurExpansion, partitions
from matorbit.tensor import (
    char_rank2, char_uniform_rank2, character_dimension, class_size, gl_dimension,
    hook_generating_identity, hook_multiplicity_nbc, mn_character, multiplicities_as_character,
    schur_weyl_module, sn_multiplicities, specht_dimension, support_test,
)


def chars(d):
    return SchurExpansion(2, 0, {(lam, ()): c for lam, c in d.items()})


def q_poly(coeffs):
    return LaurentPoly(("q",), {(k,): c for k, c in coeffs.items() if c})


@pytest.fixture(scope="module")
def small_catalog():
    return [(v, M) for v, M in catalog() if M.n <= 5]


# -- closed forms ------------------------------------------------------------------------------


def test_uniform_character_examples():
    assert char_uniform_rank2(4) == chars({(4,): 1, (3, 1): 3, (2, 2): 1})
    assert char_uniform_rank2(2) == chars({(2,): 1, (1, 1): 1})
    assert character_dimension(char_uniform_rank2(2)) == 4


@pytest.mark.parametrize("n", range(2, 10))
def test_uniform_dimension_formula(n):
    assert character_dimension(char_uniform_rank2(n)) == (n ** 3 + 5 * n + 6) // 6


def test_rank2_character_examples():
    assert char_rank2((1, 1, 1, 1)) == char_uniform_rank2(4)
    assert char_rank2((2, 2)) == chars({(4,): 1, (3, 1): 1, (2, 2): 1})
    assert char_rank2((3, 1)) == chars({(4,): 1, (3, 1): 1})
    with pytest.raises(ValueError):
        char_rank2((4,))


@pytest.mark.parametrize("mu", [p for n in range(2, 7) for p in partitions(n) if len(p) >= 2])
def test_rank2_character_is_hilbert_coefficient(mu):
    cfg = Rank2Config.from_mu(mu)
    assert hilbert_coefficient(k_rank2(cfg), (1,) * cfg.n) == char_rank2(mu)


# -- hooks, nbc, Tutte -------------------------------------------------------------------------------


def test_hook_multiplicity_examples():
    U24 = Matroid.uniform(2, 4)
    assert hook_multiplicity_nbc(U24, 1) == 1
    assert hook_multiplicity_nbc(U24, 2) == 3
    assert hook_multiplicity_nbc(U24, 3) == 0
    assert hook_multiplicity_nbc(Matroid.uniform(1, 3), 1) == 1
    with pytest.raises(ValueError):
        hook_multiplicity_nbc(U24, 0)


def test_hook_generating_examples():
    lhs, rhs = hook_generating_identity(Matroid.uniform(2, 4))
    assert lhs == rhs == q_poly({2: 3, 1: 4, 0: 1})
    lhs, rhs = hook_generating_identity(Matroid.uniform(1, 1))
    assert lhs == rhs == q_poly({1: 1, 0: 1})
    lhs, rhs = hook_generating_identity(Matroid.uniform(1, 3))
    assert lhs == rhs == q_poly({1: 1, 0: 1})


def test_hook_generating_identity_on_catalog():
    for _, M in catalog():
        lhs, rhs = hook_generating_identity(M)
        assert lhs == rhs, M.bases_list()


def test_hooks_vanish_with_loops():
    M = Matroid.from_bases(3, 1, [(1,), (2,)])
    assert M.loops() == (3,)
    assert hook_multiplicity_nbc(M, 1) == 0
    lhs, rhs = hook_generating_identity(M)
    assert not lhs and not rhs


# -- support --------------------------------------------------------------------------------------


def test_support_examples():
    U24 = Matroid.uniform(2, 4)
    assert support_test(U24, (3, 1))
    assert not support_test(U24, (2, 1, 1))
    assert support_test(U24, (2, 2))
    with pytest.raises(ValueError):
        support_test(U24, (3,))


@pytest.mark.parametrize("mu", [(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (2, 2, 1), (3, 1, 1), (1,) * 5])
def test_support_matches_character(mu):
    M = Rank2Config.from_mu(mu).matroid()
    ch = char_rank2(mu)
    for lam in partitions(M.n, 2):
        assert support_test(M, lam) == ((lam, ()) in ch.terms)


# -- symmetric group characters -----------------------------------------------------------------


def test_mn_examples():
    for n in range(1, 7):
        for cls in partitions(n):
            assert mn_character((n,), cls) == 1
            odd = sum(c - 1 for c in cls) % 2
            assert mn_character((1,) * n, cls) == (-1) ** odd
    assert mn_character((2, 1), (1, 1, 1)) == 2
    assert mn_character((2, 1), (3,)) == -1
    with pytest.raises(ValueError):
        mn_character((2, 1), (2,))


@pytest.mark.parametrize("n", range(1, 8))
def test_character_orthogonality(n):
    parts = list(partitions(n))
    for a in parts:
        for b in parts:
            s = sum(class_size(c) * mn_character(a, c) * mn_character(b, c) for c in parts)
            assert s == (factorial(n) if a == b else 0)


def test_specht_dimensions():
    assert [specht_dimension(l) for l in [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]] == [1, 3, 2, 3, 1]
    assert sum(specht_dimension(l) ** 2 for l in partitions(6)) == factorial(6)


# -- Schur-Weyl oracle -----------------------------------------------------------------------------


def test_oracle_uniform_2_4():
    mod = schur_weyl_module([[1, 0, 1, 1], [0, 1, 1, 2]])
    mults = sn_multiplicities(mod)
    assert mults == {(4,): 1, (3, 1): 3, (2, 2): 1}
    assert gl_dimension(mults, 2) == 15
    assert mod.dim == sum(m * specht_dimension(l) for l, m in mults.items()) == 12


def test_oracle_equal_columns():
    mod = schur_weyl_module([[1, 1, 1], [2, 2, 2]])
    assert mod.dim == 1
    assert sn_multiplicities(mod) == {(3,): 1}


def test_oracle_mu_22():
    mod = schur_weyl_module(realization((2, 2), []))
    mults = sn_multiplicities(mod)
    assert mults == {(4,): 1, (3, 1): 1, (2, 2): 1}
    assert mod.dim == 6
    assert multiplicities_as_character(mults) == char_rank2((2, 2))


def test_oracle_size_limit():
    with pytest.raises(ValueError, match="size limit"):
        schur_weyl_module([[1] * 8, list(range(8))])


@pytest.mark.parametrize("mu", [p for n in range(2, 6) for p in partitions(n) if 2 <= len(p)])
def test_oracle_matches_rank2_formula(mu):
    mod = schur_weyl_module(realization(mu, [2, 3, -1]))
    mults = sn_multiplicities(mod)
    assert multiplicities_as_character(mults) == char_rank2(mu)
    assert mod.dim == sum(m * specht_dimension(l) for l, m in mults.items())


@pytest.mark.slow
def test_oracle_hooks_match_nbc(small_catalog):
    for v, M in small_catalog:
        if M.loops() or M.rank == 0 or M.n < 2:
            continue
        mults = sn_multiplicities(schur_weyl_module(v))
        n = M.n
        for k in range(1, M.rank + 1):
            hook = (n - k + 1,) + (1,) * (k - 1)
            assert mults.get(hook, 0) == hook_multiplicity_nbc(M, k), (v, k)


@settings(max_examples=15)
@given(st.integers(0, 10**6), st.permutations(range(4)))
def test_oracle_invariance(seed, perm):
    rnd = random.Random(seed)
    v = RationalMatrix(realization((2, 1, 1), [2]))
    base = sn_multiplicities(schur_weyl_module(v))
    permuted = RationalMatrix([[row[p] for p in perm] for row in v.entries])
    assert sn_multiplicities(schur_weyl_module(permuted)) == base
    while True:
        g = RationalMatrix.random(2, 2, -3, 3, rnd)
        if g.det() != 0:
            break
    t = RationalMatrix([[Fraction(rnd.choice([-2, -1, 1, 3])) if i == j else 0 for j in range(4)] for i in range(4)])
    assert sn_multiplicities(schur_weyl_module(g @ v @ t)) == base
