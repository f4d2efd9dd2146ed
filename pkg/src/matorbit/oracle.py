"""Independent ground truth from explicit ideals.

Polynomials live in ``Q[x_ij]`` (``i <= r``, ``j <= n``) with the grading
``deg x_ij = a_i + b_j``.  They are stored fraction-free: a dict from
exponent tuples (variable ``x_ij`` at slot ``(i-1)*n + (j-1)``) to integers,
kept primitive.  Groebner bases use graded reverse lexicographic order with
``x11 > x12 > ... > xrn``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from itertools import combinations
from math import gcd
from typing import Iterable, Mapping, Sequence

from .exactpoly import LaurentPoly, ring
from .linalg import RationalMatrix, nullspace, rank as mat_rank
from .matroid import Matroid
from .symfunc import SchurExpansion, _is_u_symmetric, schur_expand


class ResourceLimit(RuntimeError):
    """Raised when a Groebner computation exceeds its step cap."""


DEFAULT_CAP = int(os.environ.get("MATORBIT_CAP_STEPS", "200000"))


def _key(m):
    return (sum(m), tuple(-x for x in reversed(m)))


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _primitive(terms: dict) -> dict:
    if not terms:
        return terms
    g = reduce(gcd, terms.values())
    lead = max(terms, key=_key)
    if terms[lead] < 0:
        g = -g
    if g != 1:
        terms = {m: c // g for m, c in terms.items()}
    return terms


def _integral(terms: Mapping) -> dict:
    """Clear denominators and make primitive."""
    den = 1
    for c in terms.values():
        c = Fraction(c)
        den = den * c.denominator // gcd(den, c.denominator)
    return _primitive({m: int(Fraction(c) * den) for m, c in terms.items() if c != 0})


@dataclass(frozen=True)
class GradedPoly:
    r: int
    n: int
    terms: Mapping = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "terms", _integral(self.terms))
        degs = {self.multidegree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("polynomial is not multihomogeneous")

    def multidegree(self, m) -> tuple:
        r, n = self.r, self.n
        a = tuple(sum(m[i * n:(i + 1) * n]) for i in range(r))
        b = tuple(sum(m[i * n + j] for i in range(r)) for j in range(n))
        return a + b

    def weight(self) -> tuple:
        return self.multidegree(next(iter(self.terms))) if self.terms else ()

    def degree(self) -> int:
        return max((sum(m) for m in self.terms), default=-1)

    def evaluate(self, x: RationalMatrix | Sequence[Sequence]) -> Fraction:
        ent = x.entries if isinstance(x, RationalMatrix) else [[Fraction(v) for v in row] for row in x]
        flat = [Fraction(ent[i][j]) for i in range(self.r) for j in range(self.n)]
        total = Fraction(0)
        for m, c in self.terms.items():
            t = Fraction(c)
            for v, e in zip(flat, m):
                if e:
                    t *= v ** e
            total += t
        return total

    def to_json(self) -> dict:
        names = [f"x{i + 1}{j + 1}" for i in range(self.r) for j in range(self.n)]
        return {
            "vars": names,
            "terms": [{"exp": list(m), "coeff": str(c)} for m, c in sorted(self.terms.items(), key=lambda t: _key(t[0]), reverse=True)],
        }

    def __str__(self):
        names = [f"x{i + 1}{j + 1}" for i in range(self.r) for j in range(self.n)]
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda t: _key(t[0]), reverse=True):
            mono = " ".join(v if e == 1 else f"{v}^{e}" for v, e in zip(names, m) if e)
            parts.append(f"{c} * {mono}" if mono else str(c))
        return " + ".join(parts) or "0"


@dataclass
class IdealPresentation:
    r: int
    n: int
    generators: list
    provenance: str = "custom"

    def to_json(self) -> dict:
        return {"r": self.r, "n": self.n, "provenance": self.provenance,
                "generators": [g.to_json() for g in self.generators]}


# -- generators -------------------------------------------------------------------------


def gale_dual(v: RationalMatrix) -> RationalMatrix:
    """Rows span the right kernel of ``v``."""
    rows = nullspace(v.entries, v.cols)
    return RationalMatrix(rows, len(rows), v.cols)


def _det_linear(cols: Sequence[Sequence], rows: Sequence[int], nvars: int) -> dict:
    """Determinant of a square matrix whose entries are ``c * x_var`` or zero.

    ``cols[k][row]`` is ``None`` or a pair ``(var, coeff)``.
    """
    size = len(rows)
    out: dict = {}

    def rec(k, used, mono, coef, sign_perm):
        if k == size:
            key = tuple(mono)
            out[key] = out.get(key, 0) + coef * sign_perm
            return
        for idx, row in enumerate(rows):
            if used >> idx & 1:
                continue
            ent = cols[k][row]
            if ent is None:
                continue
            var, c = ent
            # sign: count used indices greater than idx (inversions)
            inv = bin(used >> (idx + 1)).count("1")
            mono[var] += 1
            rec(k + 1, used | (1 << idx), mono, coef * c, sign_perm * (-1) ** inv)
            mono[var] -= 1

    rec(0, 0, [0] * nvars, Fraction(1), 1)
    return {m: c for m, c in out.items() if c != 0}


def _tensor_columns(v: RationalMatrix, J: Sequence[int]):
    """Columns ``x_{j_i} (x) (v_J^perp)_i`` as lists of ``(var, coeff)`` entries."""
    r, n = v.rows, v.cols
    vJ = v.columns(J)
    dual = nullspace(vJ.entries, len(J))  # rows of v_J^perp
    d = len(dual)
    cols = []
    for i, j in enumerate(J):
        col = []
        for a in range(r):
            for b in range(d):
                c = dual[b][i]
                col.append((a * n + j, c) if c != 0 else None)
        cols.append(col)
    return cols, r * d


def iprime_generators(v: RationalMatrix) -> IdealPresentation:
    """Size-``|J|`` minors of ``x_J (.) v_J^perp`` over all dependent ``J``."""
    r, n = v.rows, v.cols
    gens = []
    seen = set()
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            if mat_rank(v.columns(J).entries) == size:
                continue
            cols, nrows = _tensor_columns(v, J)
            if nrows < size:
                continue
            for rows in combinations(range(nrows), size):
                det = _det_linear(cols, rows, r * n)
                if not det:
                    continue
                g = GradedPoly(r, n, det)
                key = frozenset(g.terms.items())
                if key not in seen:
                    seen.add(key)
                    gens.append(g)
    return IdealPresentation(r, n, gens, "I'_v")


def idoubleprime_generators(v: RationalMatrix) -> IdealPresentation:
    """Size-4 minors of the ``4 x n`` matrix with columns ``(x_1j, x_2j) (x) v_j``."""
    if v.rows != 2:
        raise ValueError("I''_v needs a 2-row matrix")
    M = Matroid.from_matrix(v)
    if M != Matroid.uniform(2, v.cols):
        raise ValueError("I''_v needs a uniform rank-2 configuration")
    n = v.cols
    cols = []
    for j in range(n):
        col = []
        for a in range(2):
            for b in range(2):
                c = v.entries[b][j]
                col.append((a * n + j, c) if c != 0 else None)
        cols.append(col)
    gens = []
    seen = set()
    for J in combinations(range(n), 4):
        det = _det_linear([cols[j] for j in J], range(4), 2 * n)
        if det:
            g = GradedPoly(2, n, det)
            key = frozenset(g.terms.items())
            if key not in seen:
                seen.add(key)
                gens.append(g)
    return IdealPresentation(2, n, gens, "I''_v")


def minors_ideal(r: int, n: int, size: int) -> IdealPresentation:
    """Size-``size`` minors of the generic ``r x n`` matrix."""
    gens = []
    for R in combinations(range(r), size):
        for C in combinations(range(n), size):
            cols = [[(R[a] * n + c, 1) for a in range(size)] for c in C]
            gens.append(GradedPoly(r, n, _det_linear(cols, range(size), r * n)))
    return IdealPresentation(r, n, gens, "minors")


# -- Buchberger -------------------------------------------------------------------------------


class _Counter:
    def __init__(self, cap):
        self.cap = cap
        self.steps = 0

    def tick(self, k=1):
        self.steps += k
        if self.cap is not None and self.steps > self.cap:
            raise ResourceLimit(f"Groebner step cap {self.cap} exceeded")


def _lead(f: dict):
    return max(f, key=_key)


def _normal_form(f: dict, G: list, counter: _Counter, full: bool = True) -> dict:
    """Reduce ``f`` modulo ``G`` (list of ``(lm, lc, terms)``); primitive result."""
    f = dict(f)
    rem: dict = {}
    while f:
        m = _lead(f)
        c = f[m]
        for lm, lc, g in G:
            if _divides(lm, m):
                counter.tick(len(g))
                shift = tuple(x - y for x, y in zip(m, lm))
                d = gcd(c, lc)
                a, b = lc // d, c // d
                if a != 1:
                    f = {k: v * a for k, v in f.items()}
                    rem = {k: v * a for k, v in rem.items()}
                for k, v in g.items():
                    key = tuple(x + y for x, y in zip(k, shift))
                    val = f.get(key, 0) - b * v
                    if val:
                        f[key] = val
                    else:
                        f.pop(key, None)
                break
        else:
            rem[m] = c
            del f[m]
            if not full:
                rem.update(f)
                break
    return _primitive(rem)


def buchberger(I: IdealPresentation | Sequence, cap_steps: int | None = None) -> list[dict]:
    """Reduced Groebner basis (grevlex) as primitive integer term dicts."""
    gens = I.generators if isinstance(I, IdealPresentation) else I
    counter = _Counter(DEFAULT_CAP if cap_steps is None else cap_steps)
    G: list = []  # (lm, lc, terms)
    pairs: list = []

    def add(h: dict):
        lm = _lead(h)
        k = len(G)
        # chain criterion on existing pairs
        keep = []
        for (i, j, L) in pairs:
            if _divides(lm, L) and _lcm(G[i][0], lm) != L and _lcm(G[j][0], lm) != L:
                continue
            keep.append((i, j, L))
        pairs[:] = keep
        G.append((lm, h[lm], h))
        for i in range(k):
            pairs.append((i, k, _lcm(G[i][0], lm)))

    for g in gens:
        terms = g.terms if isinstance(g, GradedPoly) else _integral(g)
        h = _normal_form(terms, G, counter)
        if h:
            add(h)
    while pairs:
        pairs.sort(key=lambda p: _key(p[2]))
        i, j, L = pairs.pop(0)
        li, ci, gi = G[i]
        lj, cj, gj = G[j]
        if all(x == 0 or y == 0 for x, y in zip(li, lj)):
            continue  # coprime leading monomials
        si = tuple(x - y for x, y in zip(L, li))
        sj = tuple(x - y for x, y in zip(L, lj))
        d = gcd(ci, cj)
        a, b = cj // d, ci // d
        s: dict = {}
        for k, v in gi.items():
            key = tuple(x + y for x, y in zip(k, si))
            s[key] = s.get(key, 0) + a * v
        for k, v in gj.items():
            key = tuple(x + y for x, y in zip(k, sj))
            val = s.get(key, 0) - b * v
            if val:
                s[key] = val
            else:
                s.pop(key, None)
        counter.tick(len(gi) + len(gj))
        if not s:
            continue
        h = _normal_form(s, G, counter)
        if h:
            add(h)
    # minimalize and interreduce
    polys = [g for _, _, g in G]
    lms = [_lead(g) for g in polys]
    minimal = []
    for idx, (lm, g) in enumerate(zip(lms, polys)):
        if any(_divides(lms[o], lm) and (lms[o] != lm or o < idx) for o in range(len(polys)) if o != idx):
            continue
        minimal.append(g)
    out = []
    for idx, g in enumerate(minimal):
        others = [(_lead(h), h[_lead(h)], h) for o, h in enumerate(minimal) if o != idx]
        out.append(_normal_form_tail(g, others, counter))
    out.sort(key=lambda g: _key(_lead(g)))
    return out


def _normal_form_tail(g: dict, others: list, counter: _Counter) -> dict:
    """Reduce every non-leading term of ``g`` by ``others``."""
    lm = _lead(g)
    f = dict(g)
    done = {lm: f.pop(lm)}
    while f:
        m = _lead(f)
        c = f[m]
        for olm, olc, h in others:
            if _divides(olm, m):
                counter.tick(len(h))
                shift = tuple(x - y for x, y in zip(m, olm))
                d = gcd(c, olc)
                a, b = olc // d, c // d
                if a != 1:
                    f = {k: v * a for k, v in f.items()}
                    done = {k: v * a for k, v in done.items()}
                for k, v in h.items():
                    key = tuple(x + y for x, y in zip(k, shift))
                    val = f.get(key, 0) - b * v
                    if val:
                        f[key] = val
                    else:
                        f.pop(key, None)
                break
        else:
            done[m] = c
            del f[m]
    return _primitive(done)


def leading_monomials(G: Sequence[dict]) -> list[tuple]:
    return [_lead(g) for g in G]


def reduce_mod(f: GradedPoly | dict, G: Sequence[dict]) -> dict:
    """Normal form of ``f`` modulo a Groebner basis ``G``."""
    terms = f.terms if isinstance(f, GradedPoly) else _integral(f)
    return _normal_form(terms, [(_lead(g), g[_lead(g)], g) for g in G], _Counter(None))


# -- monomial ideals: K-polynomial and dimension -------------------------------------------------


def _minimalize(gens: Iterable[tuple]) -> frozenset:
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(_divides(h, g) for h in out):
            out.append(g)
    return frozenset(out)


def k_numerator_monomial(gens: Iterable[tuple], r: int, n: int) -> LaurentPoly:
    """K-polynomial of ``R / <gens>`` over ``ring(r, n)`` by pivot splitting."""
    nv = r * n
    memo: dict = {}

    def weight(m):
        w = [0] * (r + n)
        for idx, e in enumerate(m):
            if e:
                i, j = divmod(idx, n)
                w[i] += e
                w[r + j] += e
        return tuple(w)

    def mul(a: dict, b: dict) -> dict:
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                key = tuple(x + y for x, y in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return {k: v for k, v in out.items() if v}

    zero = (0,) * (r + n)

    def rec(I: frozenset) -> dict:
        if not I:
            return {zero: 1}
        if any(sum(g) == 0 for g in I):
            return {}
        hit = memo.get(I)
        if hit is not None:
            return hit
        supports = [frozenset(i for i, e in enumerate(g) if e) for g in I]
        coprime = all(not (a & b) for a, b in combinations(supports, 2))
        if coprime:
            res = {zero: 1}
            for g in I:
                res = mul(res, {zero: 1, weight(g): -1})
        else:
            counts = [0] * nv
            for s in supports:
                for i in s:
                    counts[i] += 1
            x = max(range(nv), key=lambda i: counts[i])
            xm = tuple(int(i == x) for i in range(nv))
            plus = _minimalize([g for g in I if not g[x]] + [xm])
            colon = _minimalize(tuple(e - (i == x and e > 0) for i, e in enumerate(g)) for g in I)
            a = rec(plus)
            b = mul(rec(colon), {weight(xm): 1})
            res = dict(a)
            for k, v in b.items():
                res[k] = res.get(k, 0) + v
            res = {k: v for k, v in res.items() if v}
        memo[I] = res
        return res

    return LaurentPoly(ring(r, n), rec(_minimalize(gens)))


def initial_ideal(I: IdealPresentation, cap_steps: int | None = None) -> list[tuple]:
    if not I.generators:
        return []
    return leading_monomials(buchberger(I, cap_steps))


def k_polynomial_of_quotient(I: IdealPresentation, cap_steps: int | None = None) -> SchurExpansion:
    """K-polynomial of ``R/I`` in the Schur basis (via ``in(I)``)."""
    lms = initial_ideal(I, cap_steps)
    P = k_numerator_monomial(lms, I.r, I.n)
    if not _is_u_symmetric(P, [f"u{i}" for i in range(1, I.r + 1)]):
        raise ValueError("not u-symmetric")
    return schur_expand(P, I.r, I.n)


def _min_hitting_set(supports: list) -> int:
    best = [len(set().union(*supports)) if supports else 0]

    def rec(sets, chosen):
        if chosen >= best[0]:
            return
        if not sets:
            best[0] = chosen
            return
        s = min(sets, key=len)
        for v in s:
            rec([t for t in sets if v not in t], chosen + 1)

    rec(supports, 0)
    return best[0]


def dimension_of_monomial(gens: Iterable[tuple], nvars: int) -> int:
    gens = list(_minimalize(gens))
    if any(sum(g) == 0 for g in gens):
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    return nvars - _min_hitting_set(supports)


def dimension_of_quotient(I: IdealPresentation, cap_steps: int | None = None) -> int:
    """Krull dimension of ``R/I`` from maximal independent sets of ``in(I)``."""
    return dimension_of_monomial(initial_ideal(I, cap_steps), I.r * I.n)


def is_squarefree_initial(I: IdealPresentation, cap_steps: int | None = None) -> bool:
    return all(e <= 1 for m in initial_ideal(I, cap_steps) for e in m)


def degree_of_quotient(I: IdealPresentation, cap_steps: int | None = None) -> int:
    """Degree under the standard grading, from the K-numerator."""
    lms = initial_ideal(I, cap_steps)
    P = k_numerator_monomial(lms, I.r, I.n)
    codim = I.r * I.n - dimension_of_monomial(lms, I.r * I.n)
    return degree_from_k(P, I.r, codim)


def degree_from_k(P: LaurentPoly | SchurExpansion, r: int, codim: int) -> int:
    """``h(1)`` where ``K(u=1, t=z) = (1-z)^codim h(z)``."""
    if isinstance(P, SchurExpansion):
        P = P.to_poly()
    coeffs: dict = {}
    tpos = [i for i, v in enumerate(P.variables) if v.startswith("t")]
    for e, c in P.terms.items():
        d = sum(e[i] for i in tpos)
        coeffs[d] = coeffs.get(d, 0) + c
    poly = [coeffs.get(d, 0) for d in range(max(coeffs, default=0) + 1)]
    for _ in range(codim):
        # synthetic division by (1 - z): h_d = sum_{i<=d} p_i
        if sum(poly) != 0:
            raise ValueError("K-polynomial does not vanish to the stated order at z=1")
        acc = 0
        out = []
        for c in poly[:-1]:
            acc += c
            out.append(acc)
        poly = out
    return sum(poly)


# -- set-theoretic membership ------------------------------------------------------------------


def membership_test(w: RationalMatrix, v: RationalMatrix) -> bool:
    """``w`` lies in the orbit closure of ``v`` (tensor dependence criterion)."""
    if (w.rows, w.cols) != (v.rows, v.cols):
        raise ValueError("w and v must have the same shape")
    r, n = v.rows, v.cols
    for size in range(1, n + 1):
        for J in combinations(range(n), size):
            vJ = v.columns(J)
            if mat_rank(vJ.entries) == size:
                continue
            dual = nullspace(vJ.entries, size)
            vecs = []
            for i, j in enumerate(J):
                wj = w.column(j)
                vecs.append([wj[a] * dual[b][i] for a in range(r) for b in range(len(dual))])
            if mat_rank(vecs) >= size:
                return False
    return True


def is_radical_case(v: RationalMatrix) -> bool:
    """Whether ``I'_v = I_v`` is proven: rank-2 uniform or corank-2 uniform."""
    M = Matroid.from_matrix(v)
    r, n = M.rank, M.n
    if M != Matroid.uniform(r, n) or r != v.rows:
        return False
    return r == 2 or r == n - 2
