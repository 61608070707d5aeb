"""Binary forms as fixed-degree coefficient lists.

A form of degree d is a list ``c`` of length d + 1 with ``c[i]`` the
coefficient of X^i Y^(d-i).  Top entries may be zero: a zero X^d coefficient
means the form vanishes at infinity.  Coefficients may be ints, Fractions or
UniPolys in a parameter.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd

from .poly import UniPoly
from .resultant import bareiss_det, rational_roots_int


def degree(f) -> int:
    return len(f) - 1


def add(f, g):
    if len(f) != len(g):
        raise ValueError("adding forms of different degree")
    return [x + y for x, y in zip(f, g)]


def sub(f, g):
    if len(f) != len(g):
        raise ValueError("subtracting forms of different degree")
    return [x - y for x, y in zip(f, g)]


def scale(f, s):
    return [x * s for x in f]


def mul(f, g):
    out = [0] * (len(f) + len(g) - 1)
    for i, x in enumerate(f):
        if x == 0:
            continue
        for j, y in enumerate(g):
            out[i + j] = out[i + j] + x * y
    return out


def power(f, k: int):
    out = [1]
    for _ in range(k):
        out = mul(out, f)
    return out


def times_x(f):
    return [0] + list(f)


def times_y(f):
    return list(f) + [0]


def compose(f, p, q):
    """f(P, Q) for forms P, Q of a common degree."""
    d = degree(f)
    if len(p) != len(q):
        raise ValueError("substituted forms must share a degree")
    ppow = [[1]]
    qpow = [[1]]
    for _ in range(d):
        ppow.append(mul(ppow[-1], p))
        qpow.append(mul(qpow[-1], q))
    out = [0] * (d * degree(p) + 1)
    for i, c in enumerate(f):
        if c == 0:
            continue
        term = mul(ppow[i], qpow[d - i])
        for j, t in enumerate(term):
            out[j] = out[j] + c * t
    return out


def evaluate(f, x, y):
    d = degree(f)
    total = 0
    xp = 1
    ypows = [1] * (d + 1)
    for k in range(1, d + 1):
        ypows[k] = ypows[k - 1] * y
    for i, c in enumerate(f):
        total = total + c * xp * ypows[d - i]
        xp = xp * x
    return total


def is_zero(f) -> bool:
    return all(c == 0 for c in f)


def dehomogenize(f, var: str = "z") -> UniPoly:
    return UniPoly(list(f), var)


def exact_div(f, g):
    """Quotient form f / g, or None when g does not divide f exactly."""
    m, n = degree(f), degree(g)
    if m < n:
        return None
    if is_zero(f):
        return [0] * (m - n + 1)
    gy = dehomogenize(g)
    if gy.is_zero():
        raise ZeroDivisionError("division by the zero form")
    q = dehomogenize(f).divexact(gy)
    if q is None or q.degree() > m - n:
        return None
    return list(q.c) + [0] * (m - n + 1 - len(q.c))


def resultant(f, g):
    """Homogeneous resultant of two forms (Sylvester matrix in X-descending order, f first)."""
    m, n = degree(f), degree(g)
    size = m + n
    fc = list(reversed(f))
    gc = list(reversed(g))
    rows = [[0] * i + fc + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + gc + [0] * (size - n - 1 - i) for i in range(m)]
    return bareiss_det(rows)


def primitive_int(f):
    """Integer primitive multiple of a rational form (first nonzero entry positive)."""
    fr = [Fraction(c) for c in f]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    if g == 0:
        return ints
    ints = [c // g for c in ints]
    first = next(c for c in ints if c)
    return [-c for c in ints] if first < 0 else ints


def rational_roots(f):
    """Distinct rational roots of a nonzero rational form as (x, y) pairs, y in {0, >0}.

    A vanishing X^d coefficient contributes the root (1, 0).
    """
    if is_zero(f):
        raise ValueError("form is identically zero")
    ints = primitive_int(f)
    roots = []
    if ints[-1] == 0:
        roots.append((1, 0))
    top = len(ints)
    while top and ints[top - 1] == 0:
        top -= 1
    affine = ints[:top]
    if len(affine) > 1:
        for r in rational_roots_int(affine):
            roots.append((r.numerator, r.denominator))
    return roots
