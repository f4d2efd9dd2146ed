"""Schur functions in the ``u`` variables with coefficients in ``Z[t]``.

Partitions are plain tuples of positive integers (weakly decreasing, no
trailing zeros).  A :class:`SchurExpansion` stores ``sum c s_lambda(u) t^a``
as a dict keyed by ``(lambda, a)``.

The raising operators ``rho_k`` are defined through the determinantal
formula: ``rho_k s_lambda(u_1..u_r) = s_{(lambda_1..lambda_r, k)}(u_1..u_{r+1})``
after straightening.  Note that this gives ``rho_k 1 = 0`` for ``0 < k <= r``
and ``rho_{r+1} 1 = (-1)^r s_{1^{r+1}}``.
"""

from __future__ import annotations

import threading
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .exactpoly import LaurentPoly, exact_divide, ring

Partition = tuple


# -- partitions ---------------------------------------------------------------


def partition(seq: Iterable[int]) -> Partition:
    """Canonical form: checked weakly decreasing, trailing zeros removed."""
    lam = tuple(int(x) for x in seq)
    if any(x < 0 for x in lam):
        raise ValueError(f"negative part in {lam}")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not weakly decreasing")
    while lam and lam[-1] == 0:
        lam = lam[:-1]
    return lam


def transpose(lam: Sequence[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > i) for i in range(lam[0]))


def partitions(size: int, max_len: int | None = None, max_part: int | None = None):
    """All partitions of ``size`` (reverse lex), optionally bounded."""
    if max_part is None:
        max_part = size
    if size == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(size, max_part), 0, -1):
        for rest in partitions(size - first, None if max_len is None else max_len - 1, first):
            yield (first,) + rest


def contains(big: Sequence[int], small: Sequence[int]) -> bool:
    if len(small) > len(big):
        return False
    return all(b >= s for b, s in zip(big, small))


# -- Schur polynomials ---------------------------------------------------------


@lru_cache(maxsize=None)
def _schur_terms(lam: Partition, m: int) -> tuple:
    """Monomial expansion of s_lambda(x_1..x_m) via horizontal-strip branching."""
    if len(lam) > m:
        return ()
    if not lam:
        return (((0,) * m, 1),)
    if m == 1:
        return (((lam[0],), 1),) if len(lam) == 1 else ()
    out: dict = {}
    # mu interlaces lam: lam_{i+1} <= mu_i <= lam_i, with len(mu) <= m-1
    bounds = [(lam[i + 1] if i + 1 < len(lam) else 0, lam[i]) for i in range(len(lam))]

    def rec(i, acc):
        if i == len(bounds):
            mu = partition(acc)
            if len(mu) > m - 1:
                return
            d = sum(lam) - sum(mu)
            for e, c in _schur_terms(mu, m - 1):
                key = e + (d,)
                out[key] = out.get(key, 0) + c
            return
        lo, hi = bounds[i]
        for x in range(lo, hi + 1):
            rec(i + 1, acc + [x])

    rec(0, [])
    return tuple(out.items())


def schur_poly(lam: Sequence[int], m: int, variables: Sequence[str] | None = None) -> LaurentPoly:
    """``s_lambda(u_1..u_m)``; zero when ``len(lambda) > m``.

    ``variables`` places the result in a larger ring; the first ``m`` names
    of the form ``u1..um`` are used.
    """
    lam = partition(lam)
    own = tuple(f"u{i}" for i in range(1, m + 1))
    p = LaurentPoly(own, dict(_schur_terms(lam, m)))
    return p if variables is None else p.embed(variables)


def schur_straighten(seq: Sequence[int], m: int):
    """Straighten ``s_seq`` in ``m`` variables by the determinantal formula.

    Returns ``0`` or ``(sign, partition)``.
    """
    seq = tuple(seq)
    if len(seq) != m:
        raise ValueError(f"sequence {seq} must have length {m}")
    exps = [seq[j] + m - 1 - j for j in range(m)]
    if len(set(exps)) < m or any(e < 0 for e in exps):
        # negative shifted exponents give a vanishing column in the polynomial ring
        if len(set(exps)) < m:
            return 0
        raise ValueError(f"sequence {seq} leaves the polynomial range")
    # sign of the sort into decreasing order = parity of inversions
    inv = sum(1 for i, j in combinations(range(m), 2) if exps[i] < exps[j])
    srt = sorted(exps, reverse=True)
    lam = partition(srt[j] - (m - 1 - j) for j in range(m))
    return (-1 if inv % 2 else 1, lam)


# -- Littlewood-Richardson ------------------------------------------------------


_lr_lock = threading.Lock()
_lr_memo: dict = {}


def _lr_count(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Count LR tableaux of shape nu/lam and content mu."""
    rows = [(lam[i] if i < len(lam) else 0, nu[i]) for i in range(len(nu))]
    cells = [(i, j) for i, (a, b) in enumerate(rows) for j in range(b - 1, a - 1, -1)]
    filling: dict = {}
    count = [0] * (len(mu) + 1)
    k = len(mu)

    def rec(pos):
        if pos == len(cells):
            return 1
        i, j = cells[pos]
        hi = k
        right = filling.get((i, j + 1))
        if right is not None:
            hi = min(hi, right)
        lo = 1
        above = filling.get((i - 1, j))
        if above is not None:
            lo = above + 1
        total = 0
        for v in range(lo, hi + 1):
            if count[v] >= mu[v - 1]:
                continue
            if v > 1 and count[v] + 1 > count[v - 1]:
                continue
            count[v] += 1
            filling[(i, j)] = v
            total += rec(pos + 1)
            del filling[(i, j)]
            count[v] -= 1
        return total

    return rec(0)


def lr_coeff(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """``c^nu_{lam mu}``: the coefficient of ``s_nu`` in ``s_lam s_mu``."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if sum(lam) + sum(mu) != sum(nu) or not contains(nu, lam) or not contains(nu, mu):
        return 0
    key = (lam, mu, nu)
    val = _lr_memo.get(key)
    if val is None:
        val = _lr_count(lam, mu, nu)
        with _lr_lock:
            _lr_memo[key] = val
    return val


@lru_cache(maxsize=None)
def lr_product(lam: Partition, mu: Partition, max_len: int | None = None) -> tuple:
    """``s_lam * s_mu`` as a tuple of ``(nu, c)``, dropping ``len(nu) > max_len``."""
    size = sum(lam) + sum(mu)
    bound = len(lam) + len(mu)
    if max_len is not None:
        bound = min(bound, max_len)
    first = (lam[0] if lam else 0) + (mu[0] if mu else 0)
    out = []
    for nu in partitions(size, bound, first):
        if contains(nu, lam) and contains(nu, mu):
            c = lr_coeff(lam, mu, nu)
            if c:
                out.append((nu, c))
    return tuple(out)


# -- expansions -------------------------------------------------------------------


def elementary_t(k: int, n: int) -> dict:
    """``e_k(t_1..t_n)`` as ``{exponent: 1}``."""
    out = {}
    for S in combinations(range(n), k):
        a = [0] * n
        for j in S:
            a[j] = 1
        out[tuple(a)] = 1
    return out


class SchurExpansion:
    """``sum c s_lambda(u_1..u_r) t^a``; keys are ``(lambda, a)``."""

    __slots__ = ("r", "n", "terms")

    def __init__(self, r: int, n: int, terms: Mapping | None = None):
        self.r = r
        self.n = n
        clean = {}
        for (lam, a), c in (terms or {}).items():
            if c == 0:
                continue
            a = tuple(a)
            if len(a) != n:
                raise ValueError(f"t-exponent {a} has length {len(a)}, expected {n}")
            key = (partition(lam), a)
            clean[key] = clean.get(key, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def one(cls, r, n):
        return cls(r, n, {((), (0,) * n): 1})

    @classmethod
    def single(cls, r, n, lam, a=None, c=1):
        return cls(r, n, {(tuple(lam), tuple(a) if a is not None else (0,) * n): c})

    def _same(self, other):
        if not isinstance(other, SchurExpansion):
            return False
        if (self.r, self.n) != (other.r, other.n):
            raise ValueError(f"incompatible expansions (r={self.r},n={self.n}) vs (r={other.r},n={other.n})")
        return True

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return (self.r, self.n, self.terms) == (other.r, other.n, other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.r, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0][0]), kv[0][0], kv[0][1]))

    def coefficient(self, lam, a=None):
        a = tuple(a) if a is not None else (0,) * self.n
        return self.terms.get((partition(lam), a), 0)

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SchurExpansion(self.r, self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return SchurExpansion(self.r, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SchurExpansion(self.r, self.n, {k: c * other for k, c in self.terms.items()})
        if isinstance(other, SchurExpansion):
            return schur_product(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def mul_t(self, tpoly: Mapping) -> "SchurExpansion":
        """Multiply by a polynomial in ``t`` given as ``{exponent: coeff}``."""
        out: dict = {}
        for (lam, a), c in self.terms.items():
            for b, d in tpoly.items():
                key = (lam, tuple(x + y for x, y in zip(a, b)))
                out[key] = out.get(key, 0) + c * d
        return SchurExpansion(self.r, self.n, out)

    def truncate(self, r: int | None = None) -> "SchurExpansion":
        r = self.r if r is None else r
        return SchurExpansion(r, self.n, {k: c for k, c in self.terms.items() if len(k[0]) <= r})

    def with_r(self, r: int) -> "SchurExpansion":
        """Reinterpret in ``r`` u-variables (dropping partitions that vanish)."""
        return self.truncate(r)

    def permute_t(self, perm: Sequence[int]) -> "SchurExpansion":
        """Relabel ``t_j -> t_{perm[j]}`` (0-indexed)."""
        out = {}
        for (lam, a), c in self.terms.items():
            b = [0] * self.n
            for j, x in enumerate(a):
                b[perm[j]] = x
            out[(lam, tuple(b))] = c
        return SchurExpansion(self.r, self.n, out)

    def extend_t(self, n: int) -> "SchurExpansion":
        """Append new ``t`` variables with exponent zero."""
        pad = (0,) * (n - self.n)
        return SchurExpansion(self.r, n, {(lam, a + pad): c for (lam, a), c in self.terms.items()})

    def homogeneous_part(self, d: int) -> "SchurExpansion":
        return SchurExpansion(self.r, self.n, {k: c for k, c in self.terms.items() if sum(k[0]) + sum(k[1]) == d})

    def to_poly(self, variables: Sequence[str] | None = None) -> LaurentPoly:
        variables = tuple(variables) if variables is not None else ring(self.r, self.n)
        out: dict = {}
        r, n = self.r, self.n
        k = len(variables)
        upos = [variables.index(f"u{i}") for i in range(1, r + 1)]
        tpos = [variables.index(f"t{j}") for j in range(1, n + 1)]
        for (lam, a), c in self.terms.items():
            for e, d in _schur_terms(lam, r):
                f = [0] * k
                for p, x in zip(upos, e):
                    f[p] = x
                for p, x in zip(tpos, a):
                    f[p] = x
                key = tuple(f)
                out[key] = out.get(key, 0) + c * d
        return LaurentPoly(variables, out)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (lam, a), c in self.items():
            s = f"{c} s{list(lam)}"
            mono = " ".join(f"t{j + 1}" if x == 1 else f"t{j + 1}^{x}" for j, x in enumerate(a) if x)
            parts.append(f"{s} {mono}".rstrip())
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [{"lambda": list(lam), "t": list(a), "coeff": str(c)} for (lam, a), c in self.items()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], r: int, n: int) -> "SchurExpansion":
        return cls(r, n, {(tuple(d["lambda"]), tuple(d["t"])): int(d["coeff"]) for d in data})


def _is_u_symmetric(f: LaurentPoly, names: Sequence[str]) -> bool:
    if len(names) < 2:
        return True
    idx = [f.variables.index(v) for v in names]

    def permuted(p):
        out = {}
        for e, c in f.terms.items():
            g = list(e)
            for src, dst in zip(idx, p):
                g[dst] = e[src]
            out[tuple(g)] = c
        return out

    swap = [idx[1], idx[0]] + idx[2:]
    cyc = idx[1:] + idx[:1]
    return permuted(swap) == f.terms and permuted(cyc) == f.terms


def schur_expand(f: LaurentPoly, r: int, n: int) -> SchurExpansion:
    """Expand a ``u``-symmetric polynomial in the Schur basis over ``Z[t]``."""
    unames = [f"u{i}" for i in range(1, r + 1)]
    tnames = [f"t{j}" for j in range(1, n + 1)]
    for v in f.variables:
        if v not in unames and v not in tnames:
            # extra variables are allowed only if absent from every term
            i = f.variables.index(v)
            if any(e[i] for e in f.terms):
                raise ValueError(f"variable {v} outside u/t")
    if not _is_u_symmetric(f, unames):
        raise ValueError("not symmetric")
    upos = [f.variables.index(v) for v in unames]
    tpos = [f.variables.index(v) for v in tnames]
    groups: dict = {}
    for e, c in f.terms.items():
        a = tuple(e[p] for p in tpos)
        ue = tuple(e[p] for p in upos)
        groups.setdefault(a, {})[ue] = c
    out = {}
    for a, g in groups.items():
        g = dict(g)
        while g:
            lead = max(g)
            c = g[lead]
            if any(x < y for x, y in zip(lead, lead[1:])) or any(x < 0 for x in lead):
                raise ValueError("not symmetric")
            lam = partition(lead)
            out[(lam, a)] = c
            for e, d in _schur_terms(lam, r):
                v = g.get(e, 0) - c * d
                if v:
                    g[e] = v
                else:
                    g.pop(e, None)
    return SchurExpansion(r, n, out)


def schur_product(E1: SchurExpansion, E2: SchurExpansion) -> SchurExpansion:
    """Product in ``r`` variables; partitions longer than ``r`` vanish."""
    E1._same(E2)
    out: dict = {}
    for (l1, a1), c1 in E1.terms.items():
        for (l2, a2), c2 in E2.terms.items():
            a = tuple(x + y for x, y in zip(a1, a2))
            for nu, c in lr_product(l1, l2, E1.r):
                key = (nu, a)
                out[key] = out.get(key, 0) + c1 * c2 * c
    return SchurExpansion(E1.r, E1.n, out)


def omega_transpose(E: SchurExpansion) -> SchurExpansion:
    """Transpose every partition; the result is not truncated."""
    return SchurExpansion(E.r, E.n, {(transpose(lam), a): c for (lam, a), c in E.terms.items()})


def schur_of_union(nu: Sequence[int], alphabets: Sequence, collapse: bool = False) -> dict:
    """``s_nu`` of a union of alphabets, as ``{(lam_1, .., lam_k): c}``.

    ``alphabets`` is a list of names or ``(name, size)`` pairs; a finite size
    drops partitions that vanish in that many variables.  With ``collapse``
    the slots sharing a name are multiplied together (by LR) so keys become
    one partition per distinct name, in order of first appearance.
    """
    nu = partition(nu)
    specs = [(a, None) if isinstance(a, str) else (a[0], a[1]) for a in alphabets]
    if not specs:
        raise ValueError("need at least one alphabet")

    def split(shape, k):
        # s_shape(A_1 u .. u A_k) recursively
        size = specs[k - 1][1]
        if k == 1:
            if size is not None and len(shape) > size:
                return {}
            return {(shape,): 1}
        out: dict = {}
        for d in range(sum(shape) + 1):
            for mu in partitions(d):
                if not contains(shape, mu):
                    continue
                if size is not None and len(mu) > size:
                    continue
                for lam in partitions(sum(shape) - d):
                    c = lr_coeff(lam, mu, shape)
                    if not c:
                        continue
                    for key, e in split(lam, k - 1).items():
                        out[key + (mu,)] = out.get(key + (mu,), 0) + c * e
        return out

    raw = split(nu, len(specs))
    if not collapse:
        return {k: v for k, v in raw.items() if v}
    names = []
    for name, _ in specs:
        if name not in names:
            names.append(name)
    sizes = {}
    for name, size in specs:
        sizes[name] = size
    out: dict = {}
    for key, c in raw.items():
        acc = {tuple(() for _ in names): c}
        for (name, _), lam in zip(specs, key):
            slot = names.index(name)
            nxt: dict = {}
            for k2, v in acc.items():
                for prod_nu, d in lr_product(k2[slot], lam, sizes[name]):
                    kk = k2[:slot] + (prod_nu,) + k2[slot + 1:]
                    nxt[kk] = nxt.get(kk, 0) + v * d
            acc = nxt
        for k2, v in acc.items():
            out[k2] = out.get(k2, 0) + v
    return {k: v for k, v in out.items() if v}


# -- Demazure and raising operators ---------------------------------------------------


def demazure(i: int, f: LaurentPoly) -> LaurentPoly:
    """``(t_i f - t_{i+1} s_i f) / (t_i - t_{i+1})`` with ``t`` 1-indexed."""
    a, b = f"t{i}", f"t{i + 1}"
    if a not in f.variables or b not in f.variables or i < 1:
        raise ValueError(f"demazure index {i} out of range")
    ia, ib = f.variables.index(a), f.variables.index(b)
    swapped = {}
    for e, c in f.terms.items():
        g = list(e)
        g[ia], g[ib] = e[ib], e[ia]
        swapped[tuple(g)] = c
    sf = LaurentPoly(f.variables, swapped)
    ta = LaurentPoly.var(f.variables, a)
    tb = LaurentPoly.var(f.variables, b)
    return exact_divide(ta * f - tb * sf, ta - tb)


def rho_k(k: int, E: SchurExpansion) -> SchurExpansion:
    """``s_lambda(u_1..u_r) -> s_{(lambda, k)}(u_1..u_{r+1})``, straightened."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    r = E.r
    out: dict = {}
    for (lam, a), c in E.terms.items():
        if len(lam) > r:
            raise ValueError(f"partition {lam} longer than r={r}")
        seq = tuple(lam) + (0,) * (r - len(lam)) + (k,)
        st = schur_straighten(seq, r + 1)
        if st == 0:
            continue
        sign, nu = st
        key = (nu, a)
        out[key] = out.get(key, 0) + sign * c
    return SchurExpansion(r + 1, E.n, out)


def rho(E: SchurExpansion) -> SchurExpansion:
    """``sum_k (-1)^k e_k(t) rho_k``."""
    total = SchurExpansion(E.r + 1, E.n)
    for k in range(E.n + 1):
        part = rho_k(k, E)
        if part:
            total = total + part.mul_t(elementary_t(k, E.n)) * ((-1) ** k)
    return total


def rho_H(c: int, E: SchurExpansion) -> SchurExpansion:
    """Cohomological raising operator from ``r`` to ``r + c`` u-variables."""
    if c < 1:
        raise ValueError("c must be at least 1")
    r, n = E.r, E.n
    state = E
    for _ in range(c):
        nxt = SchurExpansion(state.r + 1, n)
        for k in range(n + 1):
            part = rho_k(n + c - k, state)
            if part:
                nxt = nxt + part.mul_t(elementary_t(k, n))
        state = nxt
    m = r + c
    out = {}
    for (lam, a), coef in state.terms.items():
        padded = tuple(lam) + (0,) * (m - len(lam))
        if any(x < c for x in padded):
            raise ValueError("division by e_{r+c} failed")
        out[(tuple(x - c for x in padded), a)] = coef * (-1) ** (c * r)
    return SchurExpansion(m, n, out)
