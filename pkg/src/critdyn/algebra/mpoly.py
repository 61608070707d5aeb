"""Sparse multivariate polynomials with rational coefficients.

``MPoly`` carries an ordered tuple of variable names and a dict from exponent
tuples to nonzero coefficients. Two polynomials over different variable tuples
are aligned on the union of their variables, so ``u*v + w`` just works.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .poly import UniPoly, exact_quo


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class MPoly:
    __slots__ = ("vars", "terms")

    def __init__(self, vars, terms=None):
        self.vars = tuple(vars)
        t = {}
        for e, c in (terms or {}).items():
            if c != 0:
                t[tuple(e)] = _norm(c)
        self.terms = t

    # constructors ---------------------------------------------------------
    @classmethod
    def var(cls, name: str, vars=None) -> "MPoly":
        vars = tuple(vars) if vars else (name,)
        e = tuple(1 if v == name else 0 for v in vars)
        return cls(vars, {e: 1})

    @classmethod
    def const(cls, value, vars=()) -> "MPoly":
        return cls(vars, {(0,) * len(vars): value})

    @classmethod
    def gens(cls, *names):
        return tuple(cls.var(n, names) for n in names)

    @classmethod
    def parse(cls, text: str, vars=None) -> "MPoly":
        from .textform_parse import parse_polynomial

        p = parse_polynomial(text)
        return p.with_vars(vars) if vars else p

    # variable bookkeeping -----------------------------------------------
    def with_vars(self, vars) -> "MPoly":
        vars = tuple(vars)
        if vars == self.vars:
            return self
        idx = {v: i for i, v in enumerate(vars)}
        for v, e in self._used_exponents().items():
            if v not in idx and e:
                raise ValueError(f"variable {v} not in {vars}")
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(vars)
            for v, k in zip(self.vars, e):
                if k:
                    ne[idx[v]] = k
            terms[tuple(ne)] = c
        return MPoly(vars, terms)

    def _used_exponents(self):
        used = {v: 0 for v in self.vars}
        for e in self.terms:
            for v, k in zip(self.vars, e):
                used[v] = max(used[v], k)
        return used

    def used_vars(self):
        u = self._used_exponents()
        return tuple(v for v in self.vars if u[v])

    def _align(self, other):
        if not isinstance(other, MPoly):
            return self, MPoly.const(other, self.vars)
        if other.vars == self.vars:
            return self, other
        vars = list(self.vars)
        for v in other.vars:
            if v not in vars:
                vars.append(v)
        return self.with_vars(vars), other.with_vars(vars)

    # properties -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def degree(self, v: str) -> int:
        if v not in self.vars:
            return 0 if self.terms else -1
        i = self.vars.index(v)
        return max((e[i] for e in self.terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def coefficient(self, mono: dict):
        e = tuple(mono.get(v, 0) for v in self.vars)
        return self.terms.get(e, 0)

    def __eq__(self, other):
        a, b = self._align(other)
        return a.terms == b.terms

    def __hash__(self):
        return hash(frozenset(self.with_vars(sorted(self.vars)).terms.items()))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        a, b = self._align(other)
        t = dict(a.terms)
        for e, c in b.terms.items():
            t[e] = t.get(e, 0) + c
        return MPoly(a.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, MPoly) else -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            if other == 0:
                return MPoly(self.vars)
            return MPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        a, b = self._align(other)
        t = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MPoly(a.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = MPoly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            q = self.divexact(other)
            if q is None:
                raise ArithmeticError("inexact multivariate division")
            return q
        return MPoly(self.vars, {e: exact_quo(c, other) for e, c in self.terms.items()})

    # evaluation / substitution ------------------------------------------
    def __call__(self, *args, **kwargs):
        """Evaluate at a point; positional args follow ``self.vars``."""
        if args:
            kwargs = dict(zip(self.vars, args))
        return self.subs(kwargs)

    def subs(self, values: dict):
        """Substitute values (numbers, field elements or MPolys) for variables.

        Returns a plain scalar when every variable is replaced by a scalar.
        """
        keep = [v for v in self.vars if v not in values]
        poly_vals = any(isinstance(x, MPoly) for x in values.values())
        if not keep and not poly_vals:
            total = 0
            powcache = {}
            for e, c in self.terms.items():
                term = c
                for v, k in zip(self.vars, e):
                    if k:
                        key = (v, k)
                        if key not in powcache:
                            powcache[key] = values[v] ** k
                        term = term * powcache[key]
                total = total + term
            return total
        result = MPoly(keep)
        powcache = {}
        for e, c in self.terms.items():
            term = MPoly.const(c, keep)
            mono = [0] * len(keep)
            for v, k in zip(self.vars, e):
                if not k:
                    continue
                if v in values:
                    key = (v, k)
                    if key not in powcache:
                        powcache[key] = values[v] ** k
                    term = term * powcache[key]
                else:
                    mono[keep.index(v)] = k
            result = result + term * MPoly(keep, {tuple(mono): 1})
        return result

    def map_coeffs(self, f) -> "MPoly":
        return MPoly(self.vars, {e: f(c) for e, c in self.terms.items()})

    def diff(self, v: str) -> "MPoly":
        if v not in self.vars:
            return MPoly(self.vars)
        i = self.vars.index(v)
        t = {}
        for e, c in self.terms.items():
            if e[i]:
                ne = list(e)
                ne[i] -= 1
                t[tuple(ne)] = c * e[i]
        return MPoly(self.vars, t)

    def homogenize(self, h: str, degree: int | None = None) -> "MPoly":
        d = self.total_degree() if degree is None else degree
        vars = self.vars + (h,)
        return MPoly(vars, {e + (d - sum(e),): c for e, c in self.terms.items()})

    # univariate views -------------------------------------------------------
    def as_univariate(self, v: str) -> UniPoly:
        """View as a polynomial in ``v`` with MPoly coefficients in the other variables."""
        i = self.vars.index(v)
        rest = self.vars[:i] + self.vars[i + 1:]
        buckets: dict[int, dict] = {}
        for e, c in self.terms.items():
            buckets.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        deg = max(buckets, default=-1)
        return UniPoly([MPoly(rest, buckets.get(k, {})) for k in range(deg + 1)], v)

    def to_unipoly(self, order=None):
        """Nested UniPoly: first variable of ``order`` is outermost."""
        order = tuple(order or self.used_vars() or self.vars[:1])
        if not order:
            return self.terms.get((), 0)
        outer, inner = order[0], order[1:]
        p = self.with_vars(order)
        buckets: dict[int, dict] = {}
        for e, c in p.terms.items():
            buckets.setdefault(e[0], {})[e[1:]] = c
        deg = max(buckets, default=-1)
        coeffs = []
        for k in range(deg + 1):
            sub = MPoly(inner, buckets.get(k, {}))
            if inner:
                coeffs.append(sub.to_unipoly(inner))
            else:
                coeffs.append(sub.terms.get((), 0))
        return UniPoly(coeffs, outer)

    @classmethod
    def from_unipoly(cls, p, vars=None) -> "MPoly":
        terms = {}

        def walk(c, mono):
            if isinstance(c, UniPoly):
                for i, x in enumerate(c.c):
                    if x != 0:
                        m = dict(mono)
                        m[c.var] = m.get(c.var, 0) + i
                        walk(x, m)
            else:
                terms[tuple(sorted(mono.items()))] = c

        walk(p, {})
        names = set()
        for mono in terms:
            names.update(v for v, _ in mono)
        if vars is None:
            vars = tuple(sorted(names))
        out = {}
        for mono, c in terms.items():
            d = dict(mono)
            out[tuple(d.get(v, 0) for v in vars)] = c
        return cls(vars, out)

    # content ----------------------------------------------------------------
    def content(self) -> Fraction:
        """Positive rational content."""
        if not self.terms:
            return Fraction(0)
        den = 1
        for c in self.terms.values():
            den = lcm(den, Fraction(c).denominator)
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(Fraction(c) * den))
        return Fraction(g, den)

    def primitive(self) -> "MPoly":
        """Integer primitive part with positive leading coefficient (lex order)."""
        if not self.terms:
            return self
        p = self / self.content()
        if p.leading_term()[1] < 0:
            p = -p
        return p

    # division ---------------------------------------------------------------
    def leading_term(self):
        e = max(self.terms)
        return e, self.terms[e]

    def reduce(self, divisors):
        """Multivariate division (lex order on ``self.vars`` after alignment).

        Returns ``(quotients, remainder)``; a zero remainder proves membership in
        the ideal, and is also necessary when the divisors form a Groebner basis.
        """
        divisors = [d for d in divisors]
        allv = list(self.vars)
        for d in divisors:
            for v in d.vars:
                if v not in allv:
                    allv.append(v)
        p = self.with_vars(allv)
        ds = [d.with_vars(allv) for d in divisors]
        lts = [d.leading_term() for d in ds]
        qs = [dict() for _ in ds]
        rem = {}
        work = dict(p.terms)
        while work:
            e = max(work)
            c = work[e]
            for k, (le, lc_) in enumerate(lts):
                if all(x >= y for x, y in zip(e, le)):
                    shift = tuple(x - y for x, y in zip(e, le))
                    t = exact_quo(c, lc_)
                    qs[k][shift] = qs[k].get(shift, 0) + t
                    for de, dc in ds[k].terms.items():
                        ne = tuple(x + y for x, y in zip(de, shift))
                        nv = work.get(ne, 0) - t * dc
                        if nv == 0:
                            work.pop(ne, None)
                        else:
                            work[ne] = nv
                    break
            else:
                rem[e] = c
                del work[e]
        vars = tuple(allv)
        return [MPoly(vars, q) for q in qs], MPoly(vars, rem)

    def divexact(self, other: "MPoly"):
        """Exact quotient if ``other`` divides ``self`` over Q, else None."""
        (q,), r = self.reduce([other])
        return q if r.is_zero() else None

    def divides(self, other: "MPoly") -> bool:
        """True when self divides other."""
        return other.divexact(self) is not None

    # printing ---------------------------------------------------------------
    def sorted_terms(self, order=None):
        order = tuple(order or self.vars)
        p = self.with_vars(order) if set(order) >= set(self.used_vars()) else self
        return sorted(p.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True), p.vars

    def __str__(self):
        from .textform import format_terms

        items, vars = self.sorted_terms()
        return format_terms([(c, dict(zip(vars, e))) for e, c in items])

    def __repr__(self):
        return f"MPoly({self})"


def mpoly_gens(*names):
    return MPoly.gens(*names)
