"""Dense univariate polynomials over an exact coefficient ring.

Coefficients may be ``int``, ``Fraction``, finite-field elements, or another
``UniPoly`` in a different variable, which is how ``Q[a][z]`` is represented.
Coefficient lists run from the constant term upward.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def exact_quo(a, b):
    """Exact quotient a/b in the coefficient domain; raises if inexact."""
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        if not isinstance(b, UniPoly):
            return a.scale_div(b)
        if not isinstance(a, UniPoly):
            a = UniPoly([a], b.var)
        q = a.divexact(b)
        if q is None:
            raise ArithmeticError(f"inexact division of {a} by {b}")
        return q
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r == 0:
            return q
        return Fraction(a, b)
    q = a / b
    if isinstance(q, Fraction) and q.denominator == 1:
        return q.numerator
    return q


def _is_zero(c) -> bool:
    return c == 0


def _nests(outer, var: str) -> bool:
    """True when ``var`` occurs among the (nested) coefficients of ``outer``."""
    for c in outer.c:
        if isinstance(c, UniPoly) and (c.var == var or _nests(c, var)):
            return True
    return False


def _is_outer(other, var: str) -> bool:
    return isinstance(other, UniPoly) and other.var != var and _nests(other, var)


class UniPoly:
    __slots__ = ("c", "var")

    def __init__(self, coeffs=(), var: str = "z"):
        c = list(coeffs)
        while c and _is_zero(c[-1]):
            c.pop()
        self.c = c
        self.var = var

    # construction helpers -------------------------------------------------
    @classmethod
    def gen(cls, var: str = "z") -> "UniPoly":
        return cls([0, 1], var)

    @classmethod
    def const(cls, value, var: str = "z") -> "UniPoly":
        return cls([value], var)

    @classmethod
    def from_roots(cls, roots, var: str = "z") -> "UniPoly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    # basic properties -----------------------------------------------------
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def lc(self):
        return self.c[-1] if self.c else 0

    def __getitem__(self, i):
        return self.c[i] if 0 <= i < len(self.c) else 0

    def __len__(self):
        return len(self.c)

    def __iter__(self):
        return iter(self.c)

    def __hash__(self):
        return hash((self.var, tuple(self.c)))

    def __eq__(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            return self.c == other.c
        if isinstance(other, UniPoly):
            # different variables: equal only as constants
            return self.degree() <= 0 and other.degree() <= 0 and self[0] == other[0]
        return self.degree() <= 0 and self[0] == other

    def __bool__(self):
        return bool(self.c)

    # arithmetic -----------------------------------------------------------
    def _coerce(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            return other
        return UniPoly([other], self.var)

    def __add__(self, other):
        if _is_outer(other, self.var):
            return other + self
        o = self._coerce(other)
        n = max(len(self.c), len(o.c))
        return UniPoly([self[i] + o[i] for i in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-x for x in self.c], self.var)

    def __sub__(self, other):
        if _is_outer(other, self.var):
            return -(other - self)
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if _is_outer(other, self.var):
            return other * self
        if not (isinstance(other, UniPoly) and other.var == self.var):
            if _is_zero(other):
                return UniPoly([], self.var)
            return UniPoly([x * other for x in self.c], self.var)
        a, b = self.c, other.c
        if not a or not b:
            return UniPoly([], self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if _is_zero(x):
                continue
            for j, y in enumerate(b):
                out[i + j] = out[i + j] + x * y
        return UniPoly(out, self.var)

    def __rmul__(self, other):
        return self * other

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale_div(self, s) -> "UniPoly":
        return UniPoly([exact_quo(x, s) for x in self.c], self.var)

    def __truediv__(self, other):
        if isinstance(other, UniPoly) and other.var == self.var:
            q = self.divexact(other)
            if q is None:
                raise ArithmeticError("inexact polynomial division")
            return q
        return self.scale_div(other)

    # evaluation -----------------------------------------------------------
    def __call__(self, x):
        acc = 0
        for coeff in reversed(self.c):
            acc = acc * x + coeff
        return acc

    def map_coeffs(self, f) -> "UniPoly":
        return UniPoly([f(x) for x in self.c], self.var)

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly([], other.var)
        for coeff in reversed(self.c):
            acc = acc * other + coeff
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly([i * self.c[i] for i in range(1, len(self.c))], self.var)

    # division -------------------------------------------------------------
    def divmod(self, other: "UniPoly"):
        """Euclidean division; needs the divisor's leading coefficient to be invertible."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        dq = len(r) - len(other.c)
        if dq < 0:
            return UniPoly([], self.var), UniPoly(r, self.var)
        q = [0] * (dq + 1)
        lead = other.c[-1]
        m = len(other.c) - 1
        for k in range(dq, -1, -1):
            top = r[k + m]
            if _is_zero(top):
                continue
            t = _domain_quo(top, lead)
            q[k] = t
            for j, y in enumerate(other.c):
                r[k + j] = r[k + j] - t * y
        return UniPoly(q, self.var), UniPoly(r[:m], self.var)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def divexact(self, other: "UniPoly"):
        """Quotient in the coefficient domain if ``other`` divides ``self``, else None."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        m = len(other.c) - 1
        dq = len(r) - 1 - m
        if self.is_zero():
            return UniPoly([], self.var)
        if dq < 0:
            return None
        q = [0] * (dq + 1)
        lead = other.c[-1]
        for k in range(dq, -1, -1):
            top = r[k + m]
            if _is_zero(top):
                continue
            try:
                t = _domain_quo(top, lead)
            except ArithmeticError:
                return None
            q[k] = t
            for j, y in enumerate(other.c):
                r[k + j] = r[k + j] - t * y
        if any(not _is_zero(x) for x in r[:m]):
            return None
        return UniPoly(q, self.var)

    def pseudo_divmod(self, other: "UniPoly"):
        """lc(other)^(deg self - deg other + 1) * self = q*other + r."""
        m = other.degree()
        if m < 0:
            raise ZeroDivisionError("pseudo-division by zero")
        e = max(self.degree() - m + 1, 0)
        lead = other.lc()
        q = UniPoly([], self.var)
        r = self
        for _ in range(e):
            if r.degree() < m:
                q = q * lead
                r = r * lead
                continue
            shift = r.degree() - m
            t = UniPoly([0] * shift + [r.lc()], self.var)
            q = q * lead + t
            r = r * lead - t * other
        return q, r

    def monic(self) -> "UniPoly":
        return self.scale_div(self.lc())

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over a field of coefficients."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        if a.is_zero():
            return a
        return a.monic()

    # rational-coefficient helpers ------------------------------------------
    def content_q(self) -> Fraction:
        """Positive rational content: self = content * primitive integer polynomial."""
        if self.is_zero():
            return Fraction(0)
        den = 1
        for x in self.c:
            den = lcm(den, Fraction(x).denominator)
        g = 0
        for x in self.c:
            g = gcd(g, int(Fraction(x) * den))
        return Fraction(g, den)

    def primitive_int(self) -> list[int]:
        """Integer coefficient list of the primitive part (leading coefficient positive)."""
        cont = self.content_q()
        ints = [int(Fraction(x) / cont) for x in self.c]
        if ints and ints[-1] < 0:
            ints = [-x for x in ints]
        return ints

    def squarefree_part(self) -> "UniPoly":
        g = self.gcd(self.derivative())
        if g.degree() <= 0:
            return self
        return self.divmod(g)[0]

    # printing ---------------------------------------------------------------
    def terms_desc(self):
        for i in range(len(self.c) - 1, -1, -1):
            if not _is_zero(self.c[i]):
                yield i, self.c[i]

    def __str__(self):
        from .textform import format_terms

        return format_terms(
            [(c, {self.var: i} if i else {}) for i, c in self.terms_desc()]
        )

    def __repr__(self):
        return f"UniPoly({self})"


def _domain_quo(a, b):
    if isinstance(a, UniPoly) or isinstance(b, UniPoly):
        return exact_quo(a, b)
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        if r:
            return Fraction(a, b)
        return q
    return a / b


def poly_in(var: str, coeffs) -> UniPoly:
    return UniPoly(coeffs, var)
