"""Sparse exact Laurent polynomials.

A :class:`LaurentPoly` is a map from integer exponent vectors to exact
coefficients (``int`` or :class:`fractions.Fraction`) over a fixed tuple of
named variables.  Everything else in the package is built on top of it: the
``u`` variables carry the ``GL_r`` weights, the ``t`` variables the torus
weights, and ``q`` is the auxiliary variable of the hook enumerators.

Values are immutable; every operation returns a new, zero-pruned polynomial.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence


class ArityError(ValueError):
    """Raised when two polynomials live over different variable tuples."""


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`exact_divide` when no polynomial quotient exists."""


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def ring(r: int, n: int, q: bool = False) -> tuple[str, ...]:
    """Variable names ``u1..ur, t1..tn`` (and ``q`` if requested)."""
    names = tuple(f"u{i}" for i in range(1, r + 1)) + tuple(f"t{j}" for j in range(1, n + 1))
    return names + (("q",) if q else ())


class LaurentPoly:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        k = len(self.variables)
        clean = {}
        if terms:
            for e, c in terms.items():
                if c == 0:
                    continue
                e = tuple(e)
                if len(e) != k:
                    raise ArityError(f"exponent {e} has length {len(e)}, expected {k}")
                clean[e] = _normalize(c)
        self.terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------
    @classmethod
    def zero(cls, variables):
        return cls(variables)

    @classmethod
    def const(cls, variables, c=1):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name: str, power: int = 1):
        variables = tuple(variables)
        e = [0] * len(variables)
        e[variables.index(name)] = power
        return cls(variables, {tuple(e): 1})

    @classmethod
    def monomial(cls, variables, exps: Mapping[str, int] | Sequence[int], c=1):
        variables = tuple(variables)
        if isinstance(exps, Mapping):
            e = [0] * len(variables)
            for name, p in exps.items():
                e[variables.index(name)] += p
            exps = e
        return cls(variables, {tuple(exps): c})

    # -- basic protocol -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return not self.terms
            return self.terms == {(0,) * len(self.variables): other}
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms.items(), reverse=True))

    def _check(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(self.variables, other)
        if not isinstance(other, LaurentPoly):
            return None
        if other.variables != self.variables:
            raise ArityError(f"variables {self.variables} vs {other.variables}")
        return other

    def __add__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.variables, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPoly(self.variables, {e: c * other for e, c in self.terms.items()})
        other = self._check(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("negative powers only for monomials")
            (e, c), = self.terms.items()
            return LaurentPoly(self.variables, {tuple(k * a for a in e): Fraction(1, c) ** (-k)})
        out = LaurentPoly.const(self.variables, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- inspection -------------------------------------------------------
    def coefficient(self, exps: Mapping[str, int] | Sequence[int]):
        if isinstance(exps, Mapping):
            e = [0] * len(self.variables)
            for name, p in exps.items():
                e[self.variables.index(name)] = p
            exps = e
        return self.terms.get(tuple(exps), 0)

    def degree(self) -> int:
        """Total degree of the highest-degree term (``-1`` for zero)."""
        return max((sum(e) for e in self.terms), default=-1)

    def min_degree(self) -> int:
        return min((sum(e) for e in self.terms), default=-1)

    def homogeneous_part(self, d: int) -> "LaurentPoly":
        return LaurentPoly(self.variables, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self.terms for a in e)

    def index(self, name: str) -> int:
        return self.variables.index(name)

    def evaluate(self, point: Mapping[str, object] | Sequence):
        """Evaluate at a point; missing names in a mapping are left symbolic."""
        if not isinstance(point, Mapping):
            point = dict(zip(self.variables, point))
        keep = [v for v in self.variables if v not in point]
        if keep:
            idx = [self.variables.index(v) for v in keep]
            out: dict = {}
            for e, c in self.terms.items():
                val = c
                for v, a in zip(self.variables, e):
                    if v in point and a:
                        val = val * Fraction(point[v]) ** a
                key = tuple(e[i] for i in idx)
                out[key] = out.get(key, 0) + val
            return LaurentPoly(keep, out)
        total = 0
        vals = [Fraction(point[v]) for v in self.variables]
        for e, c in self.terms.items():
            term = Fraction(c)
            for x, a in zip(vals, e):
                if a:
                    term *= x ** a
            total += term
        return _normalize(total)

    def embed(self, variables: Sequence[str]) -> "LaurentPoly":
        """Re-express over a larger variable tuple (by name)."""
        variables = tuple(variables)
        pos = [variables.index(v) for v in self.variables]
        out = {}
        k = len(variables)
        for e, c in self.terms.items():
            f = [0] * k
            for p, a in zip(pos, e):
                f[p] = a
            out[tuple(f)] = c
        return LaurentPoly(variables, out)

    def rename(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        """Substitute variable ``v -> mapping[v]`` (a permutation of the names)."""
        target = [mapping.get(v, v) for v in self.variables]
        if sorted(target) != sorted(self.variables):
            raise ValueError("rename must permute the existing variables")
        slot = [self.variables.index(v) for v in target]
        out = {}
        for e, c in self.terms.items():
            f = [0] * len(e)
            for i, a in enumerate(e):
                f[slot[i]] = a
            out[tuple(f)] = c
        return LaurentPoly(self.variables, out)

    # -- text / json ---------------------------------------------------------
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for e, c in self:
            mono = " ".join(
                v if a == 1 else f"{v}^{a}" for v, a in zip(self.variables, e) if a
            )
            parts.append(f"{c} * {mono}" if mono else f"{c}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    def to_json(self) -> dict:
        return {
            "vars": list(self.variables),
            "terms": [{"exp": list(e), "coeff": str(c)} for e, c in self],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "LaurentPoly":
        return cls(data["vars"], {tuple(t["exp"]): _normalize(Fraction(t["coeff"])) for t in data["terms"]})


# --- module-level operations --------------------------------------------------


def add(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f + g


def mul(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    return f * g


def _shift(f: LaurentPoly, s: Sequence[int]) -> LaurentPoly:
    return LaurentPoly(f.variables, {tuple(a + b for a, b in zip(e, s)): c for e, c in f.terms.items()})


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly:
    """Return ``h`` with ``f == g * h``, or raise :class:`NotDivisibleError`.

    Works in the Laurent ring: monomial content is stripped from both sides
    before a lexicographic division, which for a single divisor leaves a zero
    remainder exactly when the quotient exists.
    """
    if f.variables != g.variables:
        raise ArityError(f"variables {f.variables} vs {g.variables}")
    if not g.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f.terms:
        return f
    k = len(f.variables)
    fmin = [min(e[i] for e in f.terms) for i in range(k)]
    gmin = [min(e[i] for e in g.terms) for i in range(k)]
    fp = _shift(f, [-a for a in fmin]).terms
    gp = _shift(g, [-a for a in gmin]).terms
    glead = max(gp)
    gc = gp[glead]
    rem = dict(fp)
    quot: dict = {}
    while rem:
        lead = max(rem)
        diff = tuple(a - b for a, b in zip(lead, glead))
        if any(d < 0 for d in diff):
            raise NotDivisibleError("not divisible")
        c = Fraction(rem[lead]) / gc
        c = _normalize(c)
        quot[diff] = c
        for e, gcoef in gp.items():
            key = tuple(a + b for a, b in zip(e, diff))
            val = rem.get(key, 0) - c * gcoef
            if val == 0:
                rem.pop(key, None)
            else:
                rem[key] = val
    q = LaurentPoly(f.variables, quot)
    return _shift(q, [a - b for a, b in zip(fmin, gmin)])


def substitute_affine(
    f: LaurentPoly, names: Iterable[str] | None = None, max_degree: int | None = None
) -> LaurentPoly:
    """Replace each variable ``x`` (default: all ``u*``/``t*``) by ``1 - x``.

    With ``max_degree`` only terms of total degree at most ``max_degree`` are kept.
    """
    if not f.is_polynomial():
        raise ValueError("substitute_affine needs nonnegative exponents")
    if names is None:
        names = [v for v in f.variables if v[0] in "ut"]
    idx = [f.variables.index(v) for v in names]
    sub = set(idx)
    fixed_slots = [i for i in range(len(f.variables)) if i not in sub]
    terms = dict(f.terms)
    done: list[int] = []
    # one variable at a time, so cancellation happens between steps; exponents
    # of finished slots never change again, which lets the bound prune early
    for i in idx:
        done.append(i)
        out: dict = {}
        for e, c in terms.items():
            base = sum(e[j] for j in fixed_slots) + sum(e[j] for j in done[:-1])
            top = e[i]
            if max_degree is not None:
                top = min(top, max_degree - base)
            for p in range(top + 1):
                key = e[:i] + (p,) + e[i + 1:]
                val = out.get(key, 0) + c * comb(e[i], p) * (-1) ** p
                if val:
                    out[key] = val
                else:
                    out.pop(key, None)
        terms = out
    if max_degree is not None:
        terms = {e: c for e, c in terms.items() if sum(e) <= max_degree}
    return LaurentPoly(f.variables, terms)


def truncated_geometric_product(r: int, bound: Sequence[int]) -> LaurentPoly:
    """``prod_{i<=r, j<=n} sum_{d=0}^{bound_j} (u_i t_j)^d`` over ``ring(r, n)``.

    Agrees with ``1 / prod (1 - u_i t_j)`` in every ``t``-degree up to ``bound``
    (coordinatewise); higher ``t``-degrees are discarded as they are produced.
    """
    bound = tuple(bound)
    if any(b < 0 for b in bound):
        raise ValueError("bound entries must be nonnegative")
    n = len(bound)
    variables = ring(r, n)
    terms = {(0,) * (r + n): 1}
    for j in range(n):
        for i in range(r):
            new: dict = {}
            for e, c in terms.items():
                room = bound[j] - e[r + j]
                for d in range(room + 1):
                    f = list(e)
                    f[i] += d
                    f[r + j] += d
                    key = tuple(f)
                    new[key] = new.get(key, 0) + c
            terms = new
    return LaurentPoly(variables, terms)
