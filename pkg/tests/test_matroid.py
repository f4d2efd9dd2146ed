import random
from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from matorbit.exactpoly import LaurentPoly
from matorbit.linalg import RationalMatrix
from matorbit.matroid import (
    Matroid, MatroidError, catalog, dominance_geq, face_matroid, is_isomorphic,
    multivariate_tutte, nbc_bases_of_truncation, subdivision_check, tutte, tutte_corank_nullity,
)

U24 = Matroid.uniform(2, 4)
M1 = Matroid.from_bases(4, 2, [B for B in combinations(range(1, 5), 2) if B != (1, 2)])
M2 = Matroid.from_bases(4, 2, [B for B in combinations(range(1, 5), 2) if B != (3, 4)])
M12 = Matroid.from_bases(4, 2, [B for B in combinations(range(1, 5), 2) if B not in ((1, 2), (3, 4))])

XY = ("x", "y")


def T(terms):
    return LaurentPoly(XY, terms)


def test_from_matrix_examples():
    assert Matroid.from_matrix([[1, 0, 1, 1], [0, 1, 1, 2]]) == U24
    M = Matroid.from_matrix([[1, 1], [0, 0]])
    assert M.rank == 1 and M.bases_list() == [[1], [2]]
    Z = Matroid.from_matrix([[0, 0], [0, 0]])
    assert Z.rank == 0 and Z.bases_list() == [[]]


def test_from_bases_examples():
    assert M1.rank == 2 and len(M1.bases) == 5
    with pytest.raises(MatroidError, match="mixed basis cardinalities"):
        Matroid.from_bases(3, 2, [[1, 2], [3]])
    L = Matroid.from_bases(2, 1, [[1]])
    assert L.loops() == (2,)


def test_exchange_axiom_enforced():
    with pytest.raises(MatroidError, match="exchange axiom"):
        Matroid.from_bases(4, 2, [[1, 2], [3, 4]])


def test_minor_examples():
    assert U24.dual() == U24
    assert M12.connected_components() == [(1, 2), (3, 4)]
    assert U24.truncate(1) == Matroid.uniform(1, 4)
    assert U24.contract([1, 2]).bases_list() == [[]]
    assert U24.delete([4]).bases_list() == [[1, 2], [1, 3], [2, 3]]


def test_rank_partition_examples():
    assert U24.rank_partition() == (2, 2)
    assert Matroid.uniform(1, 3).rank_partition() == (1, 1, 1)
    assert Matroid.uniform(4, 4).rank_partition() == (4,)


def test_dominance_examples():
    assert dominance_geq((2, 2), (2, 2))
    assert dominance_geq((3, 1), (2, 2))
    assert not dominance_geq((1, 1, 1, 1), (2, 2))


def test_nbc_examples():
    assert U24.broken_circuits() == {(2, 3), (2, 4), (3, 4)}
    assert U24.nbc_bases() == {(1, 2), (1, 3), (1, 4)}
    assert nbc_bases_of_truncation(U24, 2) == 3
    assert nbc_bases_of_truncation(U24, 1) == 1
    assert nbc_bases_of_truncation(M12, 0) == 1
    assert nbc_bases_of_truncation(Matroid.from_bases(2, 1, [[1]]), 0) == 0


def test_tutte_examples():
    coloop = Matroid.uniform(1, 1)
    loop = Matroid.uniform(0, 1)
    assert tutte(coloop) == T({(1, 0): 1})
    assert tutte(loop) == T({(0, 1): 1})
    assert tutte(U24) == T({(2, 0): 1, (1, 0): 2, (0, 1): 2, (0, 2): 1})


def test_multivariate_tutte_examples():
    V = ("t1", "t2", "q")
    assert multivariate_tutte(Matroid.uniform(1, 2)) == LaurentPoly(
        V, {(0, 0, 0): 1, (1, 0, -1): 1, (0, 1, -1): 1, (1, 1, -1): 1})
    assert multivariate_tutte(Matroid.uniform(0, 1)) == LaurentPoly(("t1", "q"), {(0, 0): 1, (1, 0): 1})
    assert multivariate_tutte(Matroid.uniform(1, 1)) == LaurentPoly(("t1", "q"), {(0, 0): 1, (1, -1): 1})


def test_parallelism_partition_examples():
    assert U24.parallelism_partition() == (1, 1, 1, 1)
    assert M1.parallelism_partition() == (2, 1, 1)
    assert M12.parallelism_partition() == (2, 2)


def test_face_examples():
    assert face_matroid(U24, []) == U24
    assert face_matroid(U24, [[1, 2]]).bases_list() == [[1, 2]]
    assert face_matroid(U24, [[1, 2, 3, 4]]) == U24


def test_subdivision_examples():
    assert subdivision_check(U24, [(1, M1), (1, M2), (-1, M12)])
    assert subdivision_check(U24, [(1, U24)])
    assert not subdivision_check(U24, [(1, M1)])


def test_isomorphism():
    assert is_isomorphic(M1, M2)
    assert not is_isomorphic(M1, M12)


# -- properties ------------------------------------------------------------------------------

CATALOG = catalog()


def test_catalog_is_nontrivial_and_distinct():
    from matorbit.matroid import canonical_form
    forms = [canonical_form(M) for _, M in CATALOG]
    assert len(forms) == len(set(forms))
    assert len(CATALOG) >= 60
    for v, M in CATALOG:
        assert Matroid.from_matrix(v) == M


@pytest.mark.parametrize("idx", range(len(CATALOG)))
def test_catalog_invariants(idx):
    _, M = CATALOG[idx]
    assert tutte(M) == tutte_corank_nullity(M)
    assert M.dual().dual() == M
    lam = M.rank_partition()
    assert list(lam) == sorted(lam, reverse=True)


matrices = st.integers(0, 2 ** 32).map(lambda s: random.Random(s))


@given(matrices)
def test_matroid_is_orbit_invariant(rng):
    r, n = rng.randint(1, 3), rng.randint(2, 5)
    v = RationalMatrix.random(r, n, -2, 2, rng)
    while True:
        g = RationalMatrix.random(r, r, -3, 3, rng)
        if g.det() != 0:
            break
    t = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n)]
    gv = g @ v
    w = RationalMatrix([[gv[i, j] * t[j] for j in range(n)] for i in range(r)], r, n)
    assert Matroid.from_matrix(v) == Matroid.from_matrix(w)


@given(matrices)
def test_restriction_dual_is_contraction_of_dual(rng):
    idx = rng.randrange(len(CATALOG))
    M = CATALOG[idx][1]
    J = [j for j in range(1, M.n + 1) if rng.random() < 0.6] or [1]
    Jc = [j for j in range(1, M.n + 1) if j not in J]
    lhs = M.restrict(J).dual()
    rhs = M.dual().contract(Jc)
    assert lhs == rhs
