"""Matroids on ``{1..n}`` stored by their bases.

Elements are 1-indexed in every public signature; internally a subset is a
bitmask with bit ``j-1`` for element ``j``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from typing import Iterable, Mapping, Sequence

from .exactpoly import LaurentPoly, ring
from .linalg import RationalMatrix, rank as mat_rank


class MatroidError(ValueError):
    pass


def _mask(S: Iterable[int]) -> int:
    m = 0
    for j in S:
        m |= 1 << (j - 1)
    return m


def _elems(mask: int) -> tuple[int, ...]:
    out = []
    j = 1
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def _popcount(m: int) -> int:
    return bin(m).count("1")


class Matroid:
    __slots__ = ("n", "rank", "bases", "_rank_cache", "_circuits")

    def __init__(self, n: int, rank: int, bases: Iterable[int], _validate: bool = True):
        self.n = n
        self.rank = rank
        self.bases = frozenset(bases)
        self._rank_cache: dict = {}
        self._circuits = None
        if _validate:
            self._validate()

    def _validate(self):
        if not self.bases:
            raise MatroidError("no bases")
        full = (1 << self.n) - 1
        for B in self.bases:
            if B & ~full:
                raise MatroidError(f"basis {_elems(B)} outside ground set")
            if _popcount(B) != self.rank:
                raise MatroidError(f"basis {_elems(B)} has size {_popcount(B)}, rank is {self.rank}")
        for B1 in self.bases:
            for B2 in self.bases:
                for x in _elems(B1 & ~B2):
                    base = B1 & ~(1 << (x - 1))
                    if not any((base | (1 << (y - 1))) in self.bases for y in _elems(B2 & ~B1)):
                        raise MatroidError(
                            f"exchange axiom violated: {list(_elems(B1))}, {list(_elems(B2))}, element {x}"
                        )

    # -- construction ---------------------------------------------------------
    @classmethod
    def from_bases(cls, n: int, rank: int, bases: Iterable[Iterable[int]]) -> "Matroid":
        bases = [tuple(B) for B in bases]
        sizes = {len(set(B)) for B in bases}
        if len(sizes) > 1:
            raise MatroidError(f"mixed basis cardinalities {sorted(sizes)}")
        return cls(n, rank, [_mask(B) for B in bases])

    @classmethod
    def from_matrix(cls, v: RationalMatrix | Sequence[Sequence]) -> "Matroid":
        if not isinstance(v, RationalMatrix):
            v = RationalMatrix(v)
        n = v.cols
        rk = v.rank()
        cols = [v.column(j) for j in range(n)]
        bases = []
        for S in combinations(range(n), rk):
            sub = [[cols[j][i] for j in S] for i in range(v.rows)]
            if mat_rank(sub) == rk:
                bases.append(sum(1 << j for j in S))
        return cls(n, rk, bases, _validate=False)

    @classmethod
    def uniform(cls, r: int, n: int) -> "Matroid":
        return cls(n, r, [sum(1 << j for j in S) for S in combinations(range(n), r)], _validate=False)

    # -- protocol -------------------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Matroid) and (self.n, self.rank, self.bases) == (other.n, other.rank, other.bases)

    def __hash__(self):
        return hash((self.n, self.rank, self.bases))

    def __repr__(self):
        return f"Matroid(n={self.n}, rank={self.rank}, bases={self.bases_list()})"

    def bases_list(self) -> list[list[int]]:
        return sorted(list(_elems(B)) for B in self.bases)

    def to_json(self) -> dict:
        return {"n": self.n, "rank": self.rank, "bases": self.bases_list()}

    @classmethod
    def from_json(cls, data: Mapping) -> "Matroid":
        return cls.from_bases(data["n"], data["rank"], data["bases"])

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    # -- rank and independence ---------------------------------------------------------
    def rank_mask(self, S: int) -> int:
        v = self._rank_cache.get(S)
        if v is None:
            v = max(_popcount(B & S) for B in self.bases)
            self._rank_cache[S] = v
        return v

    def rank_of(self, S: Iterable[int]) -> int:
        return self.rank_mask(_mask(S))

    def is_independent_mask(self, S: int) -> bool:
        return self.rank_mask(S) == _popcount(S)

    def is_independent(self, S: Iterable[int]) -> bool:
        return self.is_independent_mask(_mask(S))

    def loops(self) -> tuple[int, ...]:
        union = 0
        for B in self.bases:
            union |= B
        return _elems(self.ground & ~union)

    def coloops(self) -> tuple[int, ...]:
        inter = self.ground
        for B in self.bases:
            inter &= B
        return _elems(inter)

    def is_loopless(self) -> bool:
        return not self.loops()

    # -- constructions ---------------------------------------------------------------
    def dual(self) -> "Matroid":
        return Matroid(self.n, self.n - self.rank, [self.ground & ~B for B in self.bases], _validate=False)

    def _minor_bases(self, keep: int, contract: int) -> set:
        """Bases of ``(M | (keep|contract)) / contract`` as masks in original labels."""
        S = keep | contract
        rs = self.rank_mask(S)
        rc = self.rank_mask(contract)
        out = set()
        for B in self.bases:
            BS = B & S
            if _popcount(BS) == rs and _popcount(BS & contract) == rc:
                out.add(BS & keep)
        return out

    def _relabel(self, keep: int, bases: Iterable[int]) -> "Matroid":
        elems = _elems(keep)
        pos = {e: i for i, e in enumerate(elems)}
        new = []
        for B in bases:
            new.append(sum(1 << pos[e] for e in _elems(B)))
        r = _popcount(next(iter(bases))) if bases else 0
        return Matroid(len(elems), r, new, _validate=False)

    def restrict(self, S: Iterable[int]) -> "Matroid":
        """``M|S`` on ``S`` relabelled ``1..|S|`` in increasing order."""
        keep = _mask(S) & self.ground
        return self._relabel(keep, self._minor_bases(keep, 0))

    def contract(self, S: Iterable[int]) -> "Matroid":
        c = _mask(S) & self.ground
        keep = self.ground & ~c
        return self._relabel(keep, self._minor_bases(keep, c))

    def delete(self, S: Iterable[int]) -> "Matroid":
        keep = self.ground & ~_mask(S)
        return self._relabel(keep, self._minor_bases(keep, 0))

    def direct_sum(self, other: "Matroid") -> "Matroid":
        sh = self.n
        return Matroid(
            self.n + other.n,
            self.rank + other.rank,
            [B1 | (B2 << sh) for B1 in self.bases for B2 in other.bases],
            _validate=False,
        )

    def truncate(self, k: int) -> "Matroid":
        if k > self.rank or k < 0:
            raise MatroidError(f"cannot truncate rank {self.rank} matroid to {k}")
        out = set()
        for B in self.bases:
            for S in combinations(_elems(B), k):
                out.add(_mask(S))
        return Matroid(self.n, k, out, _validate=False)

    def permute(self, perm: Sequence[int]) -> "Matroid":
        """Relabel element ``j`` as ``perm[j-1]``."""
        new = []
        for B in self.bases:
            new.append(_mask(perm[j - 1] for j in _elems(B)))
        return Matroid(self.n, self.rank, new, _validate=False)

    def connected_components(self) -> list[tuple[int, ...]]:
        parent = list(range(self.n + 1))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        B = min(self.bases)
        # the fundamental-circuit graph of one basis has the same components
        for e in _elems(self.ground & ~B):
            for b in _elems(B):
                if ((B & ~(1 << (b - 1))) | (1 << (e - 1))) in self.bases:
                    parent[find(e)] = find(b)
        comps: dict = {}
        for j in range(1, self.n + 1):
            comps.setdefault(find(j), []).append(j)
        return sorted((tuple(c) for c in comps.values()), key=lambda c: c[0])

    def is_connected(self) -> bool:
        return len(self.connected_components()) <= 1

    # -- circuits and nbc ----------------------------------------------------------------
    def circuits(self) -> list[tuple[int, ...]]:
        if self._circuits is None:
            out = []
            for size in range(1, self.rank + 2):
                for S in combinations(range(1, self.n + 1), size):
                    m = _mask(S)
                    if self.rank_mask(m) != size - 1:
                        continue
                    if all(self.is_independent_mask(m & ~(1 << (x - 1))) for x in S):
                        out.append(S)
            self._circuits = out
        return list(self._circuits)

    def broken_circuits(self, order: Sequence[int] | None = None) -> set[tuple[int, ...]]:
        pos = {e: i for i, e in enumerate(order)} if order is not None else {e: e for e in range(1, self.n + 1)}
        out = set()
        for C in self.circuits():
            m = min(C, key=pos.__getitem__)
            out.add(tuple(x for x in C if x != m))
        return out

    def nbc_sets(self, order: Sequence[int] | None = None) -> set[tuple[int, ...]]:
        bcs = [_mask(b) for b in self.broken_circuits(order)]
        out = set()
        for size in range(self.rank + 1):
            for S in combinations(range(1, self.n + 1), size):
                m = _mask(S)
                if not self.is_independent_mask(m):
                    continue
                if any(b & m == b for b in bcs):
                    continue
                out.add(S)
        return out

    def nbc_bases(self, order: Sequence[int] | None = None) -> set[tuple[int, ...]]:
        return {S for S in self.nbc_sets(order) if len(S) == self.rank}

    # -- invariants ---------------------------------------------------------------------
    def rank_partition(self) -> tuple[int, ...]:
        ranks = [self.rank_mask(A) for A in range(1 << self.n)]
        sizes = [_popcount(A) for A in range(1 << self.n)]
        sums = [0]
        k = 1
        while True:
            p = min(self.n - sizes[A] + k * ranks[A] for A in range(1 << self.n))
            if p == sums[-1]:
                break
            sums.append(p)
            if p == self.n:
                break
            k += 1
        parts = [b - a for a, b in zip(sums, sums[1:])]
        return tuple(parts)

    def parallelism_partition(self) -> tuple[int, ...]:
        if self.rank != 2:
            raise MatroidError("parallelism partition needs rank 2")
        if self.loops():
            raise MatroidError("parallelism partition needs a loopless matroid")
        return tuple(sorted((len(c) for c in self.parallel_classes()), reverse=True))

    def parallel_classes(self) -> list[tuple[int, ...]]:
        """Rank-one flats of a loopless matroid, ordered by smallest element."""
        seen = 0
        classes = []
        for i in range(1, self.n + 1):
            if seen >> (i - 1) & 1:
                continue
            cls_ = [i] + [j for j in range(i + 1, self.n + 1) if self.rank_of((i, j)) == 1]
            for j in cls_:
                seen |= 1 << (j - 1)
            classes.append(tuple(cls_))
        return classes

    def polytope_vertices(self) -> set[tuple[int, ...]]:
        return {tuple((B >> j) & 1 for j in range(self.n)) for B in self.bases}

    def polytope_contains(self, x: Sequence) -> bool:
        """Rank-inequality membership test for the base polytope."""
        if sum(x) != self.rank:
            return False
        if any(xi < 0 for xi in x):
            return False
        for S in range(1, 1 << self.n):
            if sum(x[j] for j in range(self.n) if S >> j & 1) > self.rank_mask(S):
                return False
        return True


# -- free functions mirroring the method API -------------------------------------------


def from_matrix(v) -> Matroid:
    return Matroid.from_matrix(v)


def from_bases(n, rank, bases) -> Matroid:
    return Matroid.from_bases(n, rank, bases)


def uniform(r, n) -> Matroid:
    return Matroid.uniform(r, n)


def dominance_geq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    if sum(mu) != sum(lam):
        raise ValueError(f"partitions of different sizes {sum(mu)} and {sum(lam)}")
    a = b = 0
    for i in range(max(len(mu), len(lam))):
        a += mu[i] if i < len(mu) else 0
        b += lam[i] if i < len(lam) else 0
        if a < b:
            return False
    return True


def nbc_bases_of_truncation(M: Matroid, k: int, order: Sequence[int] | None = None) -> int:
    if k == 0:
        # the rank-0 truncation turns every element into a loop, whose broken
        # circuit is empty; count the empty set of M instead
        return 0 if M.loops() else 1
    return len(M.truncate(k).nbc_bases(order))


def tutte(M: Matroid) -> LaurentPoly:
    """Tutte polynomial in ``x, y`` by deletion-contraction."""
    V = ("x", "y")

    @lru_cache(maxsize=None)
    def rec(ground: int, bases: frozenset) -> tuple:
        if ground == 0:
            return (((0, 0), 1),)
        e = ground & -ground
        rest = ground & ~e
        in_some = any(B & e for B in bases)
        in_all = all(B & e for B in bases)
        out: dict = {}
        if not in_some:  # loop
            for (a, b), c in rec(rest, bases):
                out[(a, b + 1)] = out.get((a, b + 1), 0) + c
        elif in_all:  # coloop
            for (a, b), c in rec(rest, frozenset(B & ~e for B in bases)):
                out[(a + 1, b)] = out.get((a + 1, b), 0) + c
        else:
            for (a, b), c in rec(rest, frozenset(B for B in bases if not B & e)):
                out[(a, b)] = out.get((a, b), 0) + c
            for (a, b), c in rec(rest, frozenset(B & ~e for B in bases if B & e)):
                out[(a, b)] = out.get((a, b), 0) + c
        return tuple(out.items())

    return LaurentPoly(V, dict(rec(M.ground, M.bases)))


def tutte_corank_nullity(M: Matroid) -> LaurentPoly:
    """Independent route: ``sum_A (x-1)^{r - rk A} (y-1)^{|A| - rk A}``."""
    V = ("x", "y")
    x1 = LaurentPoly.var(V, "x") - 1
    y1 = LaurentPoly.var(V, "y") - 1
    total = LaurentPoly.zero(V)
    for A in range(1 << M.n):
        rk = M.rank_mask(A)
        total = total + (x1 ** (M.rank - rk)) * (y1 ** (_popcount(A) - rk))
    return total


def multivariate_tutte(M: Matroid) -> LaurentPoly:
    """``sum_{b in {0,1}^n} q^{-rk(M|b)} t^b`` over variables ``t1..tn, q``."""
    V = ring(0, M.n, q=True)
    terms = {}
    for A in range(1 << M.n):
        e = tuple((A >> j) & 1 for j in range(M.n)) + (-M.rank_mask(A),)
        terms[e] = 1
    return LaurentPoly(V, terms)


def face_matroid(M: Matroid, flag: Sequence[Iterable[int]]) -> Matroid:
    """``(M|S_1) + (M|S_2)/S_1 + ... + M/S_k`` in the original labels."""
    masks = [_mask(S) for S in flag]
    for S in masks:
        if S & ~M.ground:
            raise MatroidError("flag set outside the ground set")
    for a, b in zip(masks, masks[1:]):
        if a & ~b or a == b:
            raise MatroidError("flag is not strictly nested")
    chain = [0] + masks
    if chain[-1] != M.ground:
        chain.append(M.ground)
    pieces = []
    for prev, cur in zip(chain, chain[1:]):
        pieces.append(M._minor_bases(cur & ~prev, prev))
    bases = {0}
    for piece in pieces:
        bases = {B | P for B in bases for P in piece}
    rk = _popcount(next(iter(bases)))
    return Matroid(M.n, rk, bases, _validate=False)


def polytope_vertices(M: Matroid) -> set:
    return M.polytope_vertices()


def _sample_points(parent: Matroid, count: int, rng: random.Random):
    verts = sorted(parent.polytope_vertices())
    for _ in range(count):
        k = rng.randint(1, min(len(verts), parent.n + 1))
        chosen = rng.sample(verts, k)
        w = [Fraction(rng.randint(1, 9)) for _ in chosen]
        s = sum(w)
        yield tuple(sum(wi * v[j] for wi, v in zip(w, chosen)) / s for j in range(parent.n))


def subdivision_check(parent: Matroid, cells: Sequence, samples: int = 200, seed: int = 0) -> bool:
    """Heuristic check that ``[P(parent)] = sum sign * [P(cell)]``.

    ``cells`` is a list of ``(sign, Matroid)``.  Indicator functions are
    compared on the grid ``{0, 1/2, 1}^n`` and on random points of the parent
    polytope; agreement is evidence, not proof.
    """
    for _, C in cells:
        if C.n != parent.n or C.rank != parent.rank:
            raise MatroidError("cells must share ground set size and rank with the parent")
    half = Fraction(1, 2)
    pts = list(product((0, half, 1), repeat=parent.n))
    pts += list(_sample_points(parent, samples, random.Random(seed)))
    for p in pts:
        lhs = 1 if parent.polytope_contains(p) else 0
        rhs = sum(s for s, C in cells if C.polytope_contains(p))
        if lhs != rhs:
            return False
    return True


# -- catalog --------------------------------------------------------------------------


def canonical_form(M: Matroid) -> tuple:
    """Lexicographically least sorted basis list over all relabellings."""
    best = None
    for perm in permutations(range(M.n)):
        key = tuple(sorted(sum(1 << perm[j] for j in range(M.n) if B >> j & 1) for B in M.bases))
        if best is None or key < best:
            best = key
    return (M.n, M.rank, best)


def is_isomorphic(M1: Matroid, M2: Matroid) -> bool:
    return canonical_form(M1) == canonical_form(M2)


def catalog(seed: int = 2024, samples: int = 400, max_r: int = 3, max_n: int = 6,
            entries: tuple = (-2, 2)) -> list[tuple[RationalMatrix, Matroid]]:
    """Representable matroids from small integer matrices, up to isomorphism.

    Exhaustive enumeration of every matrix is out of reach, so the catalog
    combines structured matrices with a seeded random sample; each isomorphism
    class keeps its first representing matrix.
    """
    rng = random.Random(seed)
    found: dict = {}

    def add(v):
        M = Matroid.from_matrix(v)
        key = canonical_form(M)
        if key not in found:
            found[key] = (v, M)

    for r in range(1, max_r + 1):
        for n in range(r, max_n + 1):
            # generic, and with forced parallel / zero / repeated columns
            add(RationalMatrix([[(j + 1) ** i for j in range(n)] for i in range(r)]))
            add(RationalMatrix([[int(i == j % r) for j in range(n)] for i in range(r)]))
    for _ in range(samples):
        r = rng.randint(1, max_r)
        n = rng.randint(r, max_n)
        v = RationalMatrix.random(r, n, entries[0], entries[1], rng)
        if rng.random() < 0.5:
            # duplicate a column to make parallel classes likely
            j, k = rng.randrange(n), rng.randrange(n)
            for i in range(r):
                v.entries[i][k] = v.entries[i][j] * rng.choice((1, -1, 2))
        add(v)
    return sorted(found.values(), key=lambda vm: (vm[1].n, vm[1].rank, vm[1].bases_list()))
