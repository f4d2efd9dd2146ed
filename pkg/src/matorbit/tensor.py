"""Tensor-module characters and the Schur-Weyl oracle.

The tensor module of ``v`` is the ``GL_r``-module generated by
``v_1 (x) ... (x) v_n``.  Its character is computed three ways: closed
formulas (uniform and rank 2), the Hilbert-series coefficient of the
K-class (see :func:`matorbit.kclass.hilbert_coefficient`), and the
symmetric-group side, where the cyclic ``S_n``-module spanned by the
permuted tensors is decomposed with Murnaghan-Nakayama characters.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .exactpoly import LaurentPoly
from .linalg import RationalMatrix
from .matroid import Matroid, dominance_geq, nbc_bases_of_truncation, tutte
from .symfunc import SchurExpansion, _schur_terms, partition, partitions, transpose


def _two_row(n: int, coeffs: dict) -> SchurExpansion:
    return SchurExpansion(2, 0, {(partition(lam), ()): c for lam, c in coeffs.items()})


def char_uniform_rank2(n: int) -> SchurExpansion:
    if n < 2:
        raise ValueError("need n >= 2")
    coeffs = {(n,): 1}
    for l in range(1, n // 2 + 1):
        coeffs[(n - l, l)] = n - 2 * l + 1
    return _two_row(n, coeffs)


def char_rank2(mu: Sequence[int]) -> SchurExpansion:
    mu = partition(sorted(mu, reverse=True))
    if len(mu) < 2:
        raise ValueError("a rank-2 configuration has at least two parallel classes")
    n = sum(mu)
    conj = transpose(mu)
    coeffs = {(n,): 1}
    for k in range(1, n // 2 + 1):
        c = max(sum(conj[:k]) - 2 * k + 1, 0)
        if c:
            coeffs[(n - k, k)] = c
    return _two_row(n, coeffs)


def character_dimension(E: SchurExpansion) -> int:
    """Evaluate a ``t``-free character at ``u = (1, ..., 1)``."""
    return sum(c * sum(d for _, d in _schur_terms(lam, E.r)) for (lam, _), c in E.terms.items())


def hook_multiplicity_nbc(M: Matroid, k: int) -> int:
    if k < 1:
        raise ValueError("k must be positive")
    if M.loops():
        return 0  # a zero column kills the tensor
    return nbc_bases_of_truncation(M, k) if k <= M.rank else 0


def hook_generating_identity(M: Matroid) -> tuple[LaurentPoly, LaurentPoly]:
    """``(sum_k nbc_k q^{k-1}(q+1), q^rk T_M(1 + 1/q, 0))``; both vanish with loops."""
    Q = ("q",)
    q = LaurentPoly.var(Q, "q")
    lhs = LaurentPoly.zero(Q)
    for k in range(1, M.rank + 1):
        lhs = lhs + (q ** (k - 1)) * (q + 1) * hook_multiplicity_nbc(M, k)
    if M.rank == 0 and not M.loops():
        lhs = LaurentPoly.const(Q, 1)
    x = 1 + q ** -1
    rhs = LaurentPoly.zero(Q)
    for (a, b), c in tutte(M).terms.items():
        if b == 0:
            rhs = rhs + (x ** a) * c
    rhs = rhs * (q ** M.rank)
    return lhs, rhs


def support_test(M: Matroid, mu: Sequence[int]) -> bool:
    if sum(mu) != M.n:
        raise ValueError(f"|mu| = {sum(mu)} but n = {M.n}")
    if M.loops():
        raise ValueError("loops present")
    return dominance_geq(partition(mu), transpose(M.rank_partition()))


# -- symmetric group characters ----------------------------------------------------------


@lru_cache(maxsize=None)
def mn_character(lam: tuple, cls: tuple) -> int:
    """Irreducible character ``chi^lam`` at cycle type ``cls`` (Murnaghan-Nakayama)."""
    lam, cls = partition(lam), partition(sorted(cls, reverse=True))
    if sum(lam) != sum(cls):
        raise ValueError("size mismatch")
    if not cls:
        return 1
    k, rest = cls[0], cls[1:]
    m = len(lam)
    beads = [lam[i] + m - 1 - i for i in range(m)]
    occupied = set(beads)
    total = 0
    for b in beads:
        nb = b - k
        if nb < 0 or nb in occupied:
            continue
        height = sum(1 for x in beads if nb < x < b)
        new = sorted([x for x in beads if x != b] + [nb], reverse=True)
        mu = partition(new[i] - (m - 1 - i) for i in range(m))
        total += (-1) ** height * mn_character(mu, rest)
    return total


def specht_dimension(lam: Sequence[int]) -> int:
    lam = partition(lam)
    return mn_character(lam, (1,) * sum(lam))


def class_size(cls: Sequence[int]) -> int:
    n = sum(cls)
    z = 1
    counts: dict = {}
    for c in cls:
        counts[c] = counts.get(c, 0) + 1
    for c, m in counts.items():
        z *= c ** m * factorial(m)
    return factorial(n) // z


# -- Schur-Weyl oracle ----------------------------------------------------------------------


@dataclass
class SnModule:
    n: int
    r: int
    basis: list           # fully reduced rows over Fraction
    pivots: list
    traces: dict          # cycle type -> trace

    @property
    def dim(self) -> int:
        return len(self.basis)


def _index_map(r: int, n: int, perm: Sequence[int]) -> list[int]:
    """Map tensor slot ``(i_1..i_n)`` to the slot with factors moved by ``perm``."""
    size = r ** n
    out = [0] * size
    for idx in range(size):
        digits = []
        x = idx
        for _ in range(n):
            digits.append(x % r)
            x //= r
        digits.reverse()
        new = [0] * n
        for pos, d in enumerate(digits):
            new[perm[pos]] = d
        y = 0
        for d in new:
            y = y * r + d
        out[idx] = y
    return out


def _apply(vec: list, imap: list) -> list:
    out = [Fraction(0)] * len(vec)
    for i, x in enumerate(vec):
        if x:
            out[imap[i]] = x
    return out


def _cycle_perm(cls: Sequence[int]) -> list[int]:
    perm = []
    start = 0
    for c in cls:
        perm += [start + (i + 1) % c for i in range(c)]
        start += c
    return perm


class _Echelon:
    """Fully reduced row echelon basis maintained incrementally."""

    def __init__(self):
        self.rows: list = []
        self.pivots: list = []

    def reduce(self, vec: list) -> list:
        vec = list(vec)
        for row, p in zip(self.rows, self.pivots):
            c = vec[p]
            if c:
                vec = [a - c * b for a, b in zip(vec, row)]
        return vec

    def add(self, vec: list) -> bool:
        vec = self.reduce(vec)
        p = next((i for i, x in enumerate(vec) if x), None)
        if p is None:
            return False
        inv = 1 / vec[p]
        vec = [x * inv for x in vec]
        for k, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[k] = [a - c * b for a, b in zip(row, vec)]
        self.rows.append(vec)
        self.pivots.append(p)
        return True


def schur_weyl_module(v: RationalMatrix | Sequence[Sequence], max_n: int = 7) -> SnModule:
    if not isinstance(v, RationalMatrix):
        v = RationalMatrix(v)
    r, n = v.rows, v.cols
    if n > max_n:
        raise ValueError(f"size limit exceeded: n={n} > {max_n}")
    vec = [Fraction(1)]
    for j in range(n):
        col = v.column(j)
        vec = [a * b for a in vec for b in col]
    ech = _Echelon()
    gens = [_index_map(r, n, [i + 1 if k == i else i if k == i + 1 else k for k in range(n)]) for i in range(n - 1)]
    queue = []
    if ech.add(vec):
        queue.append(vec)
    while queue:
        w = queue.pop()
        for g in gens:
            x = _apply(w, g)
            if ech.add(x):
                queue.append(x)
    # in a fully reduced basis the coordinate along the row with pivot p is
    # just the entry at p, so a trace is a sum of pivot entries
    traces = {}
    for cls in partitions(n):
        imap = _index_map(r, n, _cycle_perm(cls))
        traces[cls] = sum((_apply(row, imap)[p] for row, p in zip(ech.rows, ech.pivots)), Fraction(0))
    return SnModule(n, r, ech.rows, ech.pivots, traces)


def sn_multiplicities(mod: SnModule) -> dict:
    n = mod.n
    out = {}
    for lam in partitions(n):
        s = sum(class_size(cls) * mn_character(lam, cls) * tr for cls, tr in mod.traces.items())
        m = Fraction(s, factorial(n))
        if m.denominator != 1:
            raise ArithmeticError(f"non-integer multiplicity {m} for {lam}")
        if m:
            out[lam] = int(m)
    return out


def gl_dimension(mults: dict, r: int) -> int:
    """Dimension of the ``GL_r`` side: ``sum m_lam dim V_lam`` over ``len(lam) <= r``."""
    return sum(m * sum(d for _, d in _schur_terms(lam, r)) for lam, m in mults.items() if len(lam) <= r)


def multiplicities_as_character(mults: dict, r: int = 2) -> SchurExpansion:
    return SchurExpansion(r, 0, {(lam, ()): c for lam, c in mults.items() if len(lam) <= r})
