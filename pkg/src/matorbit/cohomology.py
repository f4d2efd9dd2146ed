"""Multidegrees, the uniform class, and torus-fixed-point localization.

A localization is a dict ``{B: f_B}`` over the ``r``-subsets ``B`` of
``{1..n}`` (1-indexed tuples), each ``f_B`` a polynomial in ``t1..tn``.
Numeric routines take a point as a sequence of rationals ``t_1..t_n``.
"""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from typing import Callable, Mapping, Sequence

from .exactpoly import LaurentPoly, NotDivisibleError, exact_divide, substitute_affine
from .linalg import rref
from .matroid import Matroid, _mask
from .symfunc import (
    SchurExpansion,
    _schur_terms,
    elementary_t,
    lr_coeff,
    lr_product,
    partition,
    partitions,
    schur_expand,
    schur_of_union,
    transpose,
)


def multidegree(E: SchurExpansion, codim: int) -> SchurExpansion:
    """Degree-``codim`` part of ``K(1-u, 1-t)``."""
    if codim < 0:
        raise ValueError("codim must be nonnegative")
    P = substitute_affine(E.to_poly(), max_degree=codim)
    if any(sum(e) < codim for e in P.terms):
        raise ValueError("nonzero terms below codim")
    return schur_expand(P.homogeneous_part(codim), E.r, E.n)


def codim_matrix_orbit(M: Matroid, r: int) -> int:
    if M.rank != r:
        raise ValueError(f"matroid rank {M.rank} differs from r={r}")
    c = len(M.connected_components())
    return r * M.n - (r * r + M.n - c)


def codim_torus_orbit(M: Matroid) -> int:
    """Codimension of the torus orbit closure in ``Gr(r, n)``."""
    c = len(M.connected_components())
    return M.rank * (M.n - M.rank) - (M.n - c)


# -- uniform class -------------------------------------------------------------------------


def _rectangle(r: int, n: int) -> tuple[int, int]:
    if not 2 <= r < n:
        raise ValueError("need 2 <= r < n")
    return r - 1, n - r - 1


def rotated_complement(lam: Sequence[int], rows: int, width: int) -> tuple:
    lam = tuple(lam) + (0,) * (rows - len(lam))
    if len(lam) > rows or any(x > width for x in lam):
        raise ValueError(f"{lam} does not fit in {rows}x{width}")
    return partition(width - lam[rows - 1 - i] for i in range(rows))


def uniform_class_grassmannian(r: int, n: int) -> list[tuple[tuple, tuple]]:
    """Pairs ``(lam, lam~)``: the class is ``sum s_lam(S^vee) s_lam~(Q)``."""
    rows, width = _rectangle(r, n)
    out = []
    for size in range(rows * width + 1):
        for lam in partitions(size, rows, width):
            out.append((lam, rotated_complement(lam, rows, width)))
    return out


def _t_schur(mu: Sequence[int], n: int) -> dict:
    return dict(_schur_terms(partition(mu), n))


def uniform_class_ut(r: int, n: int) -> SchurExpansion:
    """``sum c^{lam~}_{mu nu} s_lam(u) s_{mu'}(t) s_nu(u)`` with LR in ``u``."""
    out: dict = {}
    for lam, tl in uniform_class_grassmannian(r, n):
        for nsize in range(sum(tl) + 1):
            for nu in partitions(nsize):
                for mu in partitions(sum(tl) - nsize):
                    c = lr_coeff(mu, nu, tl)
                    if not c:
                        continue
                    tpart = _t_schur(transpose(mu), n)
                    for prod_nu, d in lr_product(lam, nu, r):
                        for a, e in tpart.items():
                            key = (prod_nu, a)
                            out[key] = out.get(key, 0) + c * d * e
    return SchurExpansion(r, n, out)



def _add_into(out: dict, key, c) -> None:
    v = out.get(key, 0) + c
    if v:
        out[key] = v
    else:
        out.pop(key, None)


@lru_cache(maxsize=None)
def _section_schur(lam: tuple, r: int, n: int) -> tuple:
    """``s_lam(u)`` modulo the Grassmannian relations, as ``((mu, a), c)`` with ``mu_1 <= n - r``.

    Uses ``h_m(u) = -sum_{a >= 1} e_a(t) h_{m-a}(u)`` for ``m > n - r`` and
    ``s_lam = h_{lam_1} s_rest - (other Pieri terms)``; every step lowers the
    ``u``-degree or the shape in lex order.
    """
    zero = (0,) * n
    if not lam or lam[0] <= n - r:
        return (((lam, zero), 1),)
    out: dict = {}
    m, rest = lam[0], partition(lam[1:])
    for nu, c in lr_product((m,), rest, r):
        if nu != lam:
            for key, v in _section_schur(nu, r, n):
                _add_into(out, key, -c * v)
    for a in range(1, min(m, n) + 1):
        ea = elementary_t(a, n)
        for nu, c in lr_product(partition((m - a,)), rest, r):
            for (mu, b), v in _section_schur(nu, r, n):
                for e in ea:
                    _add_into(out, (mu, tuple(x + y for x, y in zip(b, e))), -c * v)
    return tuple(out.items())


def section_form(E: SchurExpansion) -> SchurExpansion:
    """Representative of ``E`` modulo the kernel of restriction to the Grassmannian
    whose Schur terms all have ``lam_1 <= n - r``."""
    out: dict = {}
    for (lam, a), c in E.terms.items():
        for (mu, b), v in _section_schur(lam, E.r, E.n):
            _add_into(out, (mu, tuple(x + y for x, y in zip(a, b))), c * v)
    return SchurExpansion(E.r, E.n, out)


def uniform_class(r: int, n: int) -> SchurExpansion:
    """Class of ``X_v`` for uniform ``v``: the displayed ``(u, t)`` sum put in section form.

    The two differ once ``s_lam(u) s_nu(u)`` can exceed width ``n - r``
    (first at ``r=3, n=6``); the Groebner oracle sides with the section form.
    """
    return section_form(uniform_class_ut(r, n))

def uniform_class_omega(r: int, n: int) -> SchurExpansion:
    """``omega(s_{(r-1)^{n-r-1}}(u, u, t))`` truncated to ``r`` rows."""
    _rectangle(r, n)
    nu = (r - 1,) * (n - r - 1)
    split = schur_of_union(nu, ["u", "u", ("t", n)], collapse=True)
    out: dict = {}
    for (ulam, tlam), c in split.items():
        ul = transpose(ulam)
        if len(ul) > r:
            continue
        for a, e in _t_schur(tlam, n).items():
            out[(ul, a)] = out.get((ul, a), 0) + c * e
    return SchurExpansion(r, n, out)


# -- localization -------------------------------------------------------------------------------


def _check_point(point: Sequence, n: int) -> list[Fraction]:
    pt = [Fraction(x) for x in point]
    if len(pt) != n:
        raise ValueError(f"point has {len(pt)} coordinates, expected {n}")
    if len(set(pt)) != n:
        raise ValueError("repeated t-values")
    return pt


def _schur_eval(lam, values) -> Fraction:
    lam = partition(lam)
    m = len(values)
    total = Fraction(0)
    for e, c in _schur_terms(lam, m):
        term = Fraction(c)
        for x, k in zip(values, e):
            if k:
                term *= x ** k
        total += term
    return total


def localize_grassmannian(r: int, n: int, B: Sequence[int], point: Sequence,
                          as_printed: bool = False) -> Fraction:
    """Restriction of ``sum s_lam(S^vee) s_lam~(Q)`` to ``x_B``.

    ``S^vee`` restricts to the alphabet ``-t_B``.  The ``Q`` factor is read
    with the same omega convention as the ``(u, t)`` form, which puts a
    transpose on the ``t`` side: ``s_lam~(Q) -> s_{lam~'}(t_{B^c})``.  With
    ``as_printed`` the untransposed ``s_lam~(t_{B^c})`` is used instead; the
    two agree only when every ``lam~`` is self-conjugate (e.g. ``r=2, n=4``).
    """
    pt = _check_point(point, n)
    Bs = set(B)
    tb = [-pt[i - 1] for i in sorted(Bs)]
    tc = [pt[j - 1] for j in range(1, n + 1) if j not in Bs]
    total = Fraction(0)
    for lam, tl in uniform_class_grassmannian(r, n):
        q = tl if as_printed else transpose(tl)
        total += _schur_eval(lam, tb) * _schur_eval(q, tc)
    return total


def localize_expansion(E: SchurExpansion, B: Sequence[int], point: Sequence) -> Fraction:
    """Restrict a ``(u, t)`` class to ``x_B``: ``u_k -> -t_{B_k}``."""
    pt = _check_point(point, E.n)
    B = sorted(B)
    if len(B) != E.r:
        raise ValueError("B must have r elements")
    vals = {f"u{k + 1}": -pt[b - 1] for k, b in enumerate(B)}
    vals.update({f"t{j + 1}": pt[j] for j in range(E.n)})
    return Fraction(E.to_poly().evaluate(vals))


def _prefactor(B, n, pt, ktheory=False) -> Fraction:
    out = Fraction(1)
    Bs = set(B)
    for i in Bs:
        for j in range(1, n + 1):
            if j in Bs:
                continue
            out *= (1 - pt[j - 1] / pt[i - 1]) if ktheory else (pt[j - 1] - pt[i - 1])
    return out


def localize_uniform_closed(B: Sequence[int], r: int, n: int, point: Sequence) -> Fraction:
    """Grouped closed form of the uniform localization (uniform input only)."""
    pt = _check_point(point, n)
    Bs = sorted(B)
    if len(Bs) != r:
        raise ValueError("B must have r elements")
    comp = [j for j in range(1, n + 1) if j not in Bs]
    total = Fraction(0)
    for ir in Bs:
        term = Fraction(1)
        for i in Bs:
            if i != ir:
                term /= pt[ir - 1] - pt[i - 1]
        for j in comp:
            term /= pt[j - 1] - pt[ir - 1]
        total += term
    return _prefactor(Bs, n, pt) * total


def _greedy_basis(M: Matroid, order: Sequence[int]) -> int:
    chosen = 0
    for e in order:
        cand = chosen | (1 << (e - 1))
        if M.is_independent_mask(cand):
            chosen = cand
    return chosen


def _component_sum(M: Matroid, comp: Sequence[int], Bmask: int, pt, ktheory: bool) -> Fraction:
    if len(comp) == 1:
        return Fraction(1)
    target = Bmask & _mask(comp)
    total = Fraction(0)
    for perm in permutations(comp):
        if _greedy_basis(M, perm) & _mask(comp) != target:
            continue
        term = Fraction(1)
        for a, b in zip(perm, perm[1:]):
            if ktheory:
                term /= 1 - pt[b - 1] / pt[a - 1]
            else:
                term /= pt[b - 1] - pt[a - 1]
        total += term
    return total


def _orbit_localization(M: Matroid, B, point, ktheory: bool) -> Fraction:
    pt = _check_point(point, M.n)
    if ktheory and any(x == 0 for x in pt):
        raise ValueError("t-values must be nonzero")
    if M.n > 9:
        raise ValueError("permutation sweep limited to n <= 9")
    Bmask = _mask(B)
    if Bmask not in M.bases:
        return Fraction(0)
    # per connected component: the lemma is stated for connected matroids
    prod = Fraction(1)
    for comp in M.connected_components():
        prod *= _component_sum(M, comp, Bmask, pt, ktheory)
        if prod == 0:
            return prod
    return _prefactor(sorted(B), M.n, pt, ktheory) * prod


def localize_orbit_via_permutations(M: Matroid, B: Sequence[int], point: Sequence) -> Fraction:
    return _orbit_localization(M, B, point, ktheory=False)


def klocalize_orbit(M: Matroid, B: Sequence[int], point: Sequence) -> Fraction:
    return _orbit_localization(M, B, point, ktheory=True)


def klocalize_limit(M: Matroid, B: Sequence[int], point: Sequence, eps=Fraction(1, 10**6)) -> Fraction:
    """``K|_{t -> 1 - eps t} / eps^codim``, which tends to the cohomological value."""
    pt = [1 - eps * Fraction(x) for x in point]
    return klocalize_orbit(M, B, pt) / eps ** codim_torus_orbit(M)


def random_point(n: int, rng: random.Random) -> list[Fraction]:
    while True:
        pt = [Fraction(rng.randint(1, 10**4)) for _ in range(n)]
        if len(set(pt)) == n:
            return pt


# -- GKM ----------------------------------------------------------------------------------------


class InterpolationError(ValueError):
    pass


def _monomials(n: int, degbound: int) -> list[tuple]:
    out = []
    for d in range(degbound + 1):
        for combo in combinations_with_replacement(range(n), d):
            e = [0] * n
            for j in combo:
                e[j] += 1
            out.append(tuple(e))
    return out


def interpolate(fn: Callable[[Sequence[Fraction]], Fraction], n: int, degbound: int,
                rng: random.Random, extra: int = 8) -> LaurentPoly:
    """Polynomial of degree ``<= degbound`` in ``t1..tn`` through ``fn``'s values."""
    monos = _monomials(n, degbound)
    rows = []
    for _ in range(len(monos) + extra):
        pt = random_point(n, rng)
        val = Fraction(fn(pt))
        row = []
        for e in monos:
            x = Fraction(1)
            for p, k in zip(pt, e):
                if k:
                    x *= p ** k
            row.append(x)
        rows.append(row + [val])
    red, piv = rref(rows, len(monos) + 1)
    if len(monos) in piv:
        raise InterpolationError("values are not a polynomial of the given degree")
    if len(piv) < len(monos):
        raise InterpolationError("insufficient points")
    coeffs = {}
    for row, p in zip(red, piv):
        if row[-1] != 0:
            coeffs[monos[p]] = row[-1]
    return LaurentPoly(tuple(f"t{j}" for j in range(1, n + 1)), coeffs)


def localization_table(fn: Callable, r: int, n: int, degbound: int, seed: int = 0) -> dict:
    """Interpolate ``{B: f_B}`` from a numeric localization ``fn(B, point)``."""
    rng = random.Random(seed)
    return {
        B: interpolate(lambda pt, B=B: fn(B, pt), n, degbound, rng)
        for B in combinations(range(1, n + 1), r)
    }


def gkm_check(L: Mapping[tuple, LaurentPoly]) -> bool:
    """Every edge difference ``f_B - f_{B - i + j}`` is divisible by ``t_j - t_i``."""
    for B, fB in L.items():
        Bs = set(B)
        n = len(fB.variables)
        for i in B:
            for j in range(1, n + 1):
                if j in Bs:
                    continue
                B2 = tuple(sorted((Bs - {i}) | {j}))
                if B2 not in L:
                    continue
                diff = fB - L[B2]
                if not diff:
                    continue
                lin = LaurentPoly.var(fB.variables, f"t{j}") - LaurentPoly.var(fB.variables, f"t{i}")
                try:
                    exact_divide(diff, lin)
                except NotDivisibleError:
                    return False
    return True


# -- degrees -------------------------------------------------------------------------------------


def schur_dimension(lam: Sequence[int], m: int) -> int:
    """``s_lam(1, ..., 1)`` with ``m`` ones."""
    return sum(c for _, c in _schur_terms(partition(lam), m))


def degree_uniform(r: int, n: int) -> int:
    """The displayed dimension sum; equals the true degree only while no reduction is needed."""
    return sum(schur_dimension(lam, r) * schur_dimension(tl, r) for lam, tl in uniform_class_grassmannian(r, n))


def degree_uniform_class(r: int, n: int) -> int:
    return degree_from_class(uniform_class(r, n))


def degree_from_class(C: SchurExpansion) -> int:
    """Standard-grading degree: the class at ``u = 0``, ``t = 1``."""
    return sum(c for (lam, a), c in C.terms.items() if not lam)
