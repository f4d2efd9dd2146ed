import random

import pytest
from hypothesis import given, strategies as st

from matorbit.exactpoly import LaurentPoly
from matorbit.kclass import (
    Rank2Config, add_zero_column, dep_polynomial_as_printed, discrepancy_report,
    duplicate_last_column, engine_for, hilbert_coefficient, hook_coefficient,
    hook_discrepancy_report, hook_enumerator_fakedep, hooks_from_enumerator, k_class, k_direct_sum,
    k_rank2, k_rank2_closed_form_as_printed, k_stabilize, k_uniform_rank2,
)
from matorbit.matroid import Matroid
from matorbit.oracle import idoubleprime_generators, k_polynomial_of_quotient, minors_ideal
from matorbit.linalg import RationalMatrix
from matorbit.symfunc import SchurExpansion, partitions
from matorbit.tensor import char_uniform_rank2

E4 = (1, 1, 1, 1)


def S(r, n, rows):
    return SchurExpansion(r, n, dict(rows))


UNIFORM4 = S(2, 4, {((), (0,) * 4): 1, ((2, 2), E4): -1})
PAIR12 = S(2, 4, {((), (0,) * 4): 1, ((1, 1), (1, 1, 0, 0)): -1})
MU22 = S(2, 4, {((), (0,) * 4): 1, ((1, 1), (1, 1, 0, 0)): -1, ((1, 1), (0, 0, 1, 1)): -1, ((2, 2), E4): 1})


def test_uniform_examples():
    assert k_uniform_rank2(3) == SchurExpansion.one(2, 3)
    assert k_uniform_rank2(4) == UNIFORM4


def test_uniform_n5_matches_oracle():
    v = RationalMatrix([[1, 0, 1, 1, 1], [0, 1, 1, 2, 3]])
    oracle = k_polynomial_of_quotient(idoubleprime_generators(v))
    assert k_uniform_rank2(5) == oracle
    # coefficients are -(-1)^{|lam|} s_lam(1,1)
    assert oracle.coefficient((3, 2), (1,) * 5) == 2
    assert oracle.coefficient((2, 2), (1, 1, 1, 1, 0)) == -1


def test_add_zero_column_examples():
    r2 = add_zero_column(SchurExpansion.one(2, 0))
    assert r2 == S(2, 1, {((), (0,)): 1, ((1,), (1,)): -1, ((1, 1), (2,)): 1})
    r1 = add_zero_column(SchurExpansion.one(1, 0))
    assert r1 == S(1, 1, {((), (0,)): 1, ((1,), (1,)): -1})


def test_add_zero_column_commutes_with_relabel():
    E = k_uniform_rank2(3)
    twice = add_zero_column(add_zero_column(E))
    assert twice.permute_t([0, 1, 2, 4, 3]) == twice


def test_duplicate_examples():
    E = duplicate_last_column(add_zero_column(k_uniform_rank2(3)))
    assert E == S(2, 4, {((), (0,) * 4): 1, ((1, 1), (0, 0, 1, 1)): -1})
    one = duplicate_last_column(add_zero_column(SchurExpansion.one(1, 1)))
    assert one == SchurExpansion.one(1, 2)


def test_chain_bba_to_bbaa():
    assert k_rank2(Rank2Config((0, 0, 1, 1))) == MU22


def test_k_rank2_examples():
    assert k_rank2(Rank2Config.from_mu(E4)) == UNIFORM4
    assert k_rank2(Rank2Config.from_mu((2, 1, 1))) == PAIR12
    assert k_rank2(Rank2Config.from_mu((2, 2))) == MU22


def test_closed_form_examples():
    assert k_rank2_closed_form_as_printed(Rank2Config.from_mu(E4)) == UNIFORM4
    assert k_rank2_closed_form_as_printed(Rank2Config.from_mu((2, 1, 1))) == PAIR12
    cfg = Rank2Config.from_mu((2, 2))
    printed = k_rank2_closed_form_as_printed(cfg)
    report = discrepancy_report(printed, k_rank2(cfg))
    assert report == [{"beta": [1, 1, 1, 1], "lambda": [2, 2], "k": 2, "printed": "0", "normative": "1"}]


def test_direct_sum_examples():
    pair = SchurExpansion.one(1, 2)
    assert k_direct_sum(pair, pair) == MU22
    one = SchurExpansion.one(1, 1)
    two_coloops = k_direct_sum(one, one)
    assert two_coloops == SchurExpansion.one(2, 2)


def test_direct_sum_with_coloop_keeps_hooks():
    E = k_class(Matroid.uniform(2, 4), 2)
    F = k_direct_sum(E, SchurExpansion.one(1, 1))
    M = Matroid.uniform(2, 4).direct_sum(Matroid.uniform(1, 1))
    hooks = hooks_from_enumerator(hook_enumerator_fakedep(M), 5)
    for bits in range(1, 32):
        beta = tuple((bits >> j) & 1 for j in range(5))
        for k in (1, 2, 3):
            assert hook_coefficient(F, k, beta) == hooks.get((beta, k), 0)


def test_stabilize_examples():
    three = k_class(Matroid.uniform(1, 3), 2)
    assert three == k_polynomial_of_quotient(minors_ideal(2, 3, 2))
    assert k_stabilize(three) == k_polynomial_of_quotient(minors_ideal(3, 3, 2))
    assert k_stabilize(SchurExpansion.one(1, 2)) == S(2, 2, {((), (0, 0)): 1, ((1, 1), (1, 1)): -1})
    assert not k_stabilize(SchurExpansion(2, 3))


def test_hilbert_examples():
    H = hilbert_coefficient(UNIFORM4, E4)
    expect = S(2, 0, {((4,), ()): 1, ((3, 1), ()): 3, ((2, 2), ()): 1})
    assert H == expect.extend_t(0)
    assert hilbert_coefficient(UNIFORM4, E4, method="pieri") == H
    assert hilbert_coefficient(UNIFORM4, (0,) * 4) == SchurExpansion.one(2, 0)


def test_hilbert_mu22_hooks_match_nbc():
    H = hilbert_coefficient(MU22, E4)
    assert dict((lam, c) for (lam, _), c in H.items()) == {(4,): 1, (3, 1): 1, (2, 2): 1}


def test_fakedep_examples():
    V = ("t1", "t2", "q")
    assert hook_enumerator_fakedep(Matroid.uniform(1, 2)) == LaurentPoly(V, {(0, 0, 0): 1, (1, 1, 1): -1, (1, 1, 2): -1})
    assert hook_enumerator_fakedep(Matroid.uniform(1, 1)) == LaurentPoly(("t1", "q"), {(0, 0): 1})
    P = hook_enumerator_fakedep(Matroid.uniform(2, 4))
    top = {e[-1]: c for e, c in P.terms.items() if e[:4] == E4}
    assert top == {2: 1, 3: 4, 4: 3}


def test_dep_as_printed_examples():
    U12 = Matroid.uniform(1, 2)
    assert dep_polynomial_as_printed(U12) == LaurentPoly(("t1", "t2", "q"), {(0, 0, 0): 1, (1, 1, 0): -1, (1, 1, 1): -1})
    free = Matroid.uniform(3, 3)
    assert dep_polynomial_as_printed(free) == hook_enumerator_fakedep(free) == LaurentPoly.const(free_vars(3), 1)
    assert hook_discrepancy_report(U12) == [
        {"beta": [1, 1], "k": 1, "printed": "-1", "normative": "0"},
        {"beta": [1, 1], "k": 2, "printed": "0", "normative": "-1"},
    ]
    # printed Dep puts one hook (-1)^rk at k = rk(beta); FakeDep has none there
    for M in (Matroid.uniform(2, 4), Matroid.uniform(1, 3)):
        printed = hooks_from_enumerator(dep_polynomial_as_printed(M), M.n)
        normative = hooks_from_enumerator(hook_enumerator_fakedep(M), M.n)
        assert hook_discrepancy_report(M)
        for bits in range(1, 1 << M.n):
            beta = tuple((bits >> j) & 1 for j in range(M.n))
            rk = M.rank_mask(bits)
            if rk == sum(beta):
                continue
            assert {k: c for (b, k), c in printed.items() if b == beta} == {rk: (-1) ** rk}
            assert normative.get((beta, rk), 0) == 0


def free_vars(n):
    return tuple(f"t{j}" for j in range(1, n + 1)) + ("q",)


def test_hook_coefficient_examples():
    assert hook_coefficient(k_rank2(Rank2Config.from_mu((2, 1, 1))), 2, (1, 1, 0, 0)) == -1
    assert hook_coefficient(k_class(Matroid.uniform(1, 3), 2), 2, (1, 1, 1)) == 1
    assert hook_coefficient(UNIFORM4, 2, (1, 1, 0, 0)) == 0


def test_engine_for():
    assert engine_for(Matroid.uniform(2, 4)) == "demazure-rank2"
    assert engine_for(Matroid.uniform(3, 5)) == "oracle"
    assert engine_for(Matroid.uniform(1, 2).direct_sum(Matroid.uniform(1, 2))) == "direct-sum"
    with pytest.raises(NotImplementedError):
        k_class(Matroid.uniform(3, 5))


def test_k_class_handles_loops_and_relabels():
    M = Matroid.from_matrix([[1, 0, 0, 1], [0, 0, 1, 1]])  # column 2 is zero
    E = k_class(M)
    cfg = Rank2Config((0, None, 1, 2))
    assert E == k_rank2(cfg)


# -- properties over the rank-2 battery -----------------------------------------------------

BATTERY = [mu for n in range(2, 7) for mu in partitions(n) if len(mu) >= 2]


@pytest.mark.parametrize("mu", BATTERY, ids=str)
def test_square_free_and_shape(mu):
    E = k_rank2(Rank2Config.from_mu(mu))
    for (lam, a), c in E.terms.items():
        assert max(a, default=0) <= 1
        if len(lam) == 1:
            pytest.fail(f"length-1 partition {lam} in {E}")
        if not lam:
            assert not any(a)


@pytest.mark.parametrize("mu", BATTERY, ids=str)
def test_hooks_against_fakedep(mu):
    cfg = Rank2Config.from_mu(mu)
    E, M = k_rank2(cfg), cfg.matroid()
    hooks = hooks_from_enumerator(hook_enumerator_fakedep(M), M.n)
    for bits in range(1, 1 << M.n):
        beta = tuple((bits >> j) & 1 for j in range(M.n))
        for k in (1, 2):
            assert hook_coefficient(E, k, beta) == hooks.get((beta, k), 0)


@pytest.mark.parametrize("mu", [m for m in BATTERY if sum(m) <= 5], ids=str)
def test_hilbert_routes_agree(mu):
    E = k_rank2(Rank2Config.from_mu(mu))
    beta = (1,) * sum(mu)
    assert hilbert_coefficient(E, beta) == hilbert_coefficient(E, beta, method="pieri")


def test_uniform_characters_from_hilbert():
    for n in range(2, 7):
        H = hilbert_coefficient(k_uniform_rank2(n), (1,) * n)
        assert H == char_uniform_rank2(n)


def test_direct_sums_in_catalog():
    pair = SchurExpansion.one(1, 2)
    triple = SchurExpansion.one(1, 3)
    one = SchurExpansion.one(1, 1)
    assert k_direct_sum(pair, triple) == k_rank2(Rank2Config((0, 0, 1, 1, 1)))
    assert k_direct_sum(one, triple) == k_rank2(Rank2Config((0, 1, 1, 1)))
    assert k_direct_sum(pair, one) == k_rank2(Rank2Config((0, 0, 1)))


@given(st.sampled_from(BATTERY), st.integers(0, 2 ** 32))
def test_order_and_relabel_invariance(mu, seed):
    rng = random.Random(seed)
    cfg = Rank2Config.from_mu(mu)
    E = k_rank2(cfg)
    dups = [j for c in cfg.classes() for j in c[1:]]
    rng.shuffle(dups)
    assert k_rank2(cfg, order=dups) == E
    perm = list(range(cfg.n))
    rng.shuffle(perm)
    labels = [None] * cfg.n
    for j, lab in enumerate(cfg.labels):
        labels[perm[j]] = lab
    assert k_rank2(Rank2Config(tuple(labels))) == E.permute_t(perm)
