"""Equivariant K-classes of matrix orbit closures.

Classes are :class:`~matorbit.symfunc.SchurExpansion` values: ``r`` is the
number of rows, ``n`` the number of columns.  The rank-2 engine builds a
class from the uniform one by inserting parallel columns with the Demazure
operator, then appending zero columns.  Direct sums and added zero rows are
handled by the raising operator ``rho``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .exactpoly import LaurentPoly, NotDivisibleError, exact_divide, ring, truncated_geometric_product
from .matroid import Matroid, MatroidError, multivariate_tutte
from .symfunc import (
    SchurExpansion,
    demazure,
    elementary_t,
    lr_product,
    partition,
    rho,
    schur_expand,
)


# -- configurations -------------------------------------------------------------


@dataclass(frozen=True)
class Rank2Config:
    """Column ``j`` belongs to parallel class ``labels[j]`` or is zero (``None``)."""

    labels: tuple

    @property
    def n(self) -> int:
        return len(self.labels)

    def classes(self) -> list[list[int]]:
        """Column indices (0-based) of each class, ordered by first column."""
        out: dict = {}
        for j, c in enumerate(self.labels):
            if c is not None:
                out.setdefault(c, []).append(j)
        return list(out.values())

    def zero_columns(self) -> list[int]:
        return [j for j, c in enumerate(self.labels) if c is None]

    @property
    def mu(self) -> tuple:
        return tuple(sorted((len(c) for c in self.classes()), reverse=True))

    @classmethod
    def from_mu(cls, mu: Sequence[int], zeros: int = 0) -> "Rank2Config":
        labels = []
        for i, m in enumerate(mu):
            labels += [i] * m
        return cls(tuple(labels) + (None,) * zeros)

    @classmethod
    def from_matroid(cls, M: Matroid) -> "Rank2Config":
        if M.rank != 2:
            raise MatroidError(f"rank-2 engine needs rank 2, got {M.rank}")
        loops = set(M.loops())
        labels: list = [None] * M.n
        seen = 0
        for e in range(1, M.n + 1):
            if e in loops or labels[e - 1] is not None:
                continue
            for f in range(e, M.n + 1):
                if f not in loops and labels[f - 1] is None and M.rank_of((e, f)) <= 1:
                    labels[f - 1] = seen
            seen += 1
        return cls(tuple(labels))

    def matroid(self) -> Matroid:
        bases = []
        for a, b in combinations(range(self.n), 2):
            la, lb = self.labels[a], self.labels[b]
            if la is not None and lb is not None and la != lb:
                bases.append((a + 1, b + 1))
        return Matroid.from_bases(self.n, 2, bases)


# -- building blocks ----------------------------------------------------------------


def k_uniform_rank2(n: int) -> SchurExpansion:
    """K-class of a generic ``2 x n`` matrix."""
    if n < 2:
        raise ValueError("need n >= 2")
    E = SchurExpansion.one(2, n)
    for size in range(4, n + 1):
        for l2 in range(2, size // 2 + 1):
            l1 = size - l2
            c = -((-1) ** size) * (l1 - l2 + 1)
            E = E + SchurExpansion.single(2, n, (l1, l2), c=c).mul_t(elementary_t(size, n))
    return E


def add_zero_column(E: SchurExpansion) -> SchurExpansion:
    """Append ``t_{n+1}`` and multiply by ``prod_i (1 - u_i t_{n+1})``."""
    n = E.n + 1
    F = E.extend_t(n)
    factor = SchurExpansion(E.r, n, {
        ((1,) * k, (0,) * (n - 1) + (k,)): (-1) ** k for k in range(E.r + 1)
    })
    return F * factor


def duplicate_last_column(E: SchurExpansion) -> SchurExpansion:
    """``delta_{n-1}`` on the class of a configuration whose last column is zero."""
    if E.n < 2:
        raise ValueError("need at least two columns")
    f = demazure(E.n - 1, E.to_poly())
    return schur_expand(f, E.r, E.n)


def _swap(n: int, a: int, b: int) -> list[int]:
    p = list(range(n))
    p[a], p[b] = p[b], p[a]
    return p


def k_rank2(cfg: Rank2Config, order: Sequence[int] | None = None) -> SchurExpansion:
    """Rank-2 engine; ``order`` optionally fixes the duplicate insertion order."""
    classes = cfg.classes()
    if len(classes) < 2:
        raise MatroidError("rank-2 engine needs at least two parallel classes")
    reps = [c[0] for c in classes]
    rep_of = {j: c[0] for c in classes for j in c}
    dups = [j for c in classes for j in c[1:]]
    if order is not None:
        if sorted(order) != sorted(dups):
            raise ValueError("order must list exactly the duplicate columns")
        dups = list(order)
    E = k_uniform_rank2(len(reps))
    cols = list(reps)  # original column at each t position
    for d in dups:
        p = cols.index(rep_of[d])
        last = len(cols) - 1
        E = E.permute_t(_swap(len(cols), p, last))
        cols[p], cols[last] = cols[last], cols[p]
        E = duplicate_last_column(add_zero_column(E))
        cols.append(d)
    for z in cfg.zero_columns():
        E = add_zero_column(E)
        cols.append(z)
    return E.permute_t(cols)


def k_rank2_closed_form_as_printed(cfg: Rank2Config) -> SchurExpansion:
    """Literal transcription of the four-case closed form (comparator only)."""
    if cfg.zero_columns():
        raise ValueError("closed form assumes no zero columns")
    n = cfg.n
    terms = {}
    for bits in range(1 << n):
        beta = tuple((bits >> j) & 1 for j in range(n))
        cols = [j for j in range(n) if beta[j]]
        size = len(cols)
        sizes: dict = {}
        for j in cols:
            sizes[cfg.labels[j]] = sizes.get(cfg.labels[j], 0) + 1
        mu = sorted(sizes.values(), reverse=True)
        rank = min(len(mu), 2)
        conj = [sum(1 for m in mu if m > i) for i in range(mu[0])] if mu else []
        for k in range(size // 2 + 1):
            if k == 0:
                d = 1 if size == 0 else 0
            elif k == 1:
                d = (-1) ** (size + 1) if rank == 1 else 0
            else:
                s = sum(conj[: k - 1])
                if len(mu) >= 4 and s >= 2 * k - 1:
                    d = (-1) ** (size + 1) * (s - 2 * k + 1)
                else:
                    d = 0
            if d:
                terms[((size - k, k), beta)] = d
    return SchurExpansion(2, n, terms)


def discrepancy_report(printed: SchurExpansion, normative: SchurExpansion) -> list[dict]:
    """Entries ``{beta, k, printed, normative}`` where two-row expansions differ."""
    out = []
    for key in sorted(set(printed.terms) | set(normative.terms), key=lambda k: (k[1], k[0])):
        a, b = printed.terms.get(key, 0), normative.terms.get(key, 0)
        if a != b:
            lam, beta = key
            out.append({
                "beta": list(beta),
                "lambda": list(lam),
                "k": lam[1] if len(lam) > 1 else 0,
                "printed": str(a),
                "normative": str(b),
            })
    return out


def raise_to(E: SchurExpansion, r: int) -> SchurExpansion:
    while E.r < r:
        E = rho(E)
    if E.r > r:
        raise ValueError(f"class already has {E.r} rows")
    return E


def k_direct_sum(E1: SchurExpansion, E2: SchurExpansion) -> SchurExpansion:
    """Class of a block-diagonal configuration; ``t`` of ``E2`` follow ``E1``."""
    r1, r2 = E1.r, E2.r
    A = raise_to(E1, r1 + r2).extend_t(E1.n + E2.n)
    B = raise_to(E2, r1 + r2).extend_t(E1.n + E2.n)
    B = B.permute_t([E1.n + j for j in range(E2.n)] + list(range(E1.n)))
    return A * B


def k_stabilize(E: SchurExpansion) -> SchurExpansion:
    """Class after appending a zero row: ``rho(E)``."""
    return rho(E)


def k_class(M: Matroid, r: int | None = None) -> SchurExpansion:
    """K-class of ``X_v`` for any realization ``v`` of ``M`` with ``r`` rows.

    Handled when every connected component has rank at most 2; otherwise
    :class:`NotImplementedError` (use the Groebner oracle).
    """
    r = M.rank if r is None else r
    if r < M.rank:
        raise ValueError(f"r={r} is smaller than the rank {M.rank}")
    loops = set(M.loops())
    parts = []  # (class, original columns)
    for comp in M.connected_components():
        if comp[0] in loops:
            continue
        sub = M.restrict(comp)
        if sub.rank == 1:
            parts.append((SchurExpansion.one(1, len(comp)), list(comp)))
        elif sub.rank == 2:
            parts.append((k_rank2(Rank2Config.from_matroid(sub)), list(comp)))
        else:
            raise NotImplementedError(f"component {comp} has rank {sub.rank}")
    if not parts:
        E = SchurExpansion.one(0, 0)
        cols: list = []
    else:
        E, cols = parts[0]
        for F, c in parts[1:]:
            E = k_direct_sum(E, F)
            cols = cols + c
    E = raise_to(E, r)
    for z in sorted(loops):
        E = add_zero_column(E)
        cols = cols + [z]
    return E.permute_t([c - 1 for c in cols])


def engine_for(M: Matroid) -> str:
    comps = [c for c in M.connected_components() if c[0] not in set(M.loops())]
    ranks = [M.restrict(c).rank for c in comps]
    if any(k > 2 for k in ranks):
        return "oracle"
    if len(comps) == 1 and ranks == [2]:
        return "demazure-rank2"
    return "direct-sum"


# -- Hilbert series coefficients -----------------------------------------------------------


def hilbert_coefficient(E: SchurExpansion, beta: Sequence[int], method: str = "monomial") -> SchurExpansion:
    """Coefficient of ``t^beta`` in ``E / prod (1 - u_i t_j)``, Schur expanded.

    ``method="monomial"`` multiplies monomial forms against the truncated
    geometric product; ``method="pieri"`` uses ``h_k = s_(k)`` and LR products.
    """
    beta = tuple(beta)
    if len(beta) != E.n:
        raise ValueError(f"beta has length {len(beta)}, expected {E.n}")
    if any(b < 0 for b in beta):
        raise ValueError("beta must be nonnegative")
    r = E.r
    if method == "pieri":
        out: dict = {}
        for (lam, a), c in E.terms.items():
            need = [b - x for b, x in zip(beta, a)]
            if any(x < 0 for x in need):
                continue
            acc = {lam: c}
            for k in need:
                if k == 0:
                    continue
                nxt: dict = {}
                for mu, d in acc.items():
                    for nu, e in lr_product(mu, (k,), r):
                        nxt[nu] = nxt.get(nu, 0) + d * e
                acc = nxt
            for nu, d in acc.items():
                out[(nu, ())] = out.get((nu, ()), 0) + d
        return SchurExpansion(r, 0, out)
    if method != "monomial":
        raise ValueError(f"unknown method {method}")
    G = truncated_geometric_product(r, beta)
    by_t: dict = {}
    for e, c in G.terms.items():
        by_t.setdefault(e[r:], {})[e[:r]] = c
    P = E.to_poly()
    acc: dict = {}
    for e, c in P.terms.items():
        a = e[r:]
        need = tuple(b - x for b, x in zip(beta, a))
        g = by_t.get(need)
        if not g:
            continue
        for ue, d in g.items():
            key = tuple(x + y for x, y in zip(e[:r], ue))
            acc[key] = acc.get(key, 0) + c * d
    f = LaurentPoly(ring(r, 0), acc)
    return schur_expand(f, r, 0)


# -- hook enumerators -------------------------------------------------------------------------


def _mod_squares(terms: dict, n: int) -> dict:
    return {e: c for e, c in terms.items() if all(x <= 1 for x in e[:n]) and c}


def hook_enumerator_fakedep(M: Matroid) -> LaurentPoly:
    """``prod_j (1 - q t_j) * Z(-1/q; -t)`` modulo ``t_j^2``, over ``t1..tn, q``."""
    n = M.n
    Z = multivariate_tutte(M)
    # Z(-1/q; -t): q^{-rk} -> (-1)^rk q^rk, t^b -> (-1)^|b| t^b
    terms = {}
    for e, c in Z.terms.items():
        rk = -e[n]
        size = sum(e[:n])
        terms[e[:n] + (rk,)] = c * (-1) ** (rk + size)
    for j in range(n):
        new: dict = {}
        for e, c in terms.items():
            new[e] = new.get(e, 0) + c
            if e[j] == 0:
                f = list(e)
                f[j] = 1
                f[n] += 1
                key = tuple(f)
                new[key] = new.get(key, 0) - c
        terms = _mod_squares(new, n)
    return LaurentPoly(Z.variables, terms)


def dep_polynomial_as_printed(M: Matroid) -> LaurentPoly:
    """``1 + sum over dependent b of (-1)^rk q^{rk-1} (q+1) t^b`` as printed."""
    n = M.n
    V = ring(0, n, q=True)
    terms = {(0,) * (n + 1): 1}
    for bits in range(1, 1 << n):
        size = bin(bits).count("1")
        rk = M.rank_mask(bits)
        if rk == size:
            continue
        b = tuple((bits >> j) & 1 for j in range(n))
        sign = (-1) ** rk
        for p in (rk - 1, rk):
            key = b + (p,)
            terms[key] = terms.get(key, 0) + sign
    return LaurentPoly(V, terms)


def _q_coefficients(P: LaurentPoly, n: int) -> dict:
    """``{beta: {q-exponent: c}}`` for a polynomial over ``t1..tn, q``."""
    out: dict = {}
    for e, c in P.terms.items():
        out.setdefault(e[:n], {})[e[n]] = c
    return out


def hooks_from_enumerator(P: LaurentPoly, n: int) -> dict:
    """Divide each ``t^beta`` coefficient by ``q+1``: ``{(beta, k): d}``.

    The constant term (``beta = 0``) is kept as ``(0, 0) -> 1``-style entry
    with ``k = 0``.  Raises :class:`NotDivisibleError` if some coefficient is
    not a multiple of ``q+1``.
    """
    Q = ("q",)
    qp1 = LaurentPoly(Q, {(1,): 1, (0,): 1})
    out = {}
    for beta, coeffs in _q_coefficients(P, n).items():
        if not any(beta):
            for p, c in coeffs.items():
                out[(beta, p)] = c
            continue
        f = LaurentPoly(Q, {(p,): c for p, c in coeffs.items()})
        h = exact_divide(f, qp1)
        for (p,), c in h.terms.items():
            out[(beta, p + 1)] = c
    return out


def hook_discrepancy_report(M: Matroid) -> list[dict]:
    """Compare hook data of the printed Dep polynomial with FakeDep."""
    n = M.n
    a = hooks_from_enumerator(dep_polynomial_as_printed(M), n)
    b = hooks_from_enumerator(hook_enumerator_fakedep(M), n)
    out = []
    for key in sorted(set(a) | set(b)):
        x, y = a.get(key, 0), b.get(key, 0)
        if x != y:
            out.append({"beta": list(key[0]), "k": key[1], "printed": str(x), "normative": str(y)})
    return out


def hook_partition(size: int, k: int) -> tuple:
    return partition((size - k + 1,) + (1,) * (k - 1))


def hook_coefficient(E: SchurExpansion, k: int, beta: Sequence[int]) -> int:
    beta = tuple(beta)
    if any(b not in (0, 1) for b in beta):
        raise ValueError("beta must be 0/1")
    if k < 1 or k > E.r:
        raise ValueError(f"k must lie in 1..{E.r}")
    if k > sum(beta):
        return 0
    return E.coefficient(hook_partition(sum(beta), k), beta)


def hook_theorem_as_printed(M: Matroid, k: int, beta: Sequence[int]) -> int:
    """The printed statement: ``(-1)^k`` on a rank ``k-1`` dependent set, else 0."""
    bits = sum(1 << j for j, b in enumerate(beta) if b)
    size = sum(beta)
    rk = M.rank_mask(bits)
    return (-1) ** k if rk < size and rk == k - 1 else 0


__all__ = [
    "Rank2Config", "k_uniform_rank2", "add_zero_column", "duplicate_last_column", "k_rank2",
    "k_rank2_closed_form_as_printed", "discrepancy_report", "k_direct_sum", "k_stabilize",
    "k_class", "engine_for", "raise_to", "hilbert_coefficient", "hook_enumerator_fakedep",
    "dep_polynomial_as_printed", "hooks_from_enumerator", "hook_discrepancy_report",
    "hook_coefficient", "hook_theorem_as_printed", "hook_partition", "NotDivisibleError",
]
