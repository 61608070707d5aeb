"""Resultants, discriminants, rational roots and exact division.

Sign convention: ``resultant(p, q)`` is the determinant of the Sylvester matrix
whose first deg(q) rows carry the coefficients of p (highest degree first) and
whose remaining deg(p) rows carry those of q.  With this choice
Res(z - 3, z - 5) = -2, i.e. Res(p, q) = lc(p)^n * prod q(alpha_i).
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .ffield import is_prime
from .mpoly import MPoly
from .poly import UniPoly, exact_quo


def _zero(x) -> bool:
    return x == 0


def bareiss_det(rows):
    """Fraction-free determinant; entries may be ints, Fractions or UniPolys."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _zero(m[k][k]):
            for i in range(k + 1, n):
                if not _zero(m[i][k]):
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mik = m[i][k]
            row_i, row_k = m[i], m[k]
            for j in range(k + 1, n):
                num = row_i[j] * pivot - mik * row_k[j]
                row_i[j] = exact_quo(num, prev) if prev != 1 else num
            row_i[k] = 0
        prev = pivot
    det = m[n - 1][n - 1]
    return -det if sign < 0 else det


def sylvester_matrix(p: UniPoly, q: UniPoly):
    m, n = p.degree(), q.degree()
    size = m + n
    pc = list(reversed(p.c))
    qc = list(reversed(q.c))
    rows = []
    for i in range(n):
        rows.append([0] * i + pc + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + qc + [0] * (size - n - 1 - i))
    return rows


def resultant(p, q, var: str | None = None):
    """Res_var(p, q) by the Sylvester determinant (p-block first).

    Accepts UniPolys directly, or MPolys together with the eliminated variable;
    in the latter case the result is an MPoly in the remaining variables.
    """
    if isinstance(p, MPoly) or isinstance(q, MPoly):
        if var is None:
            raise ValueError("the variable to eliminate is required for multivariate input")
        p = p if isinstance(p, MPoly) else MPoly.const(p)
        q = q if isinstance(q, MPoly) else MPoly.const(q)
        a, b = p._align(q)
        rest = tuple(v for v in a.vars if v != var)
        order = (var,) + rest
        up = _nested(a, order)
        uq = _nested(b, order)
        r = resultant(up, uq)
        if isinstance(r, UniPoly):
            return MPoly.from_unipoly(r, rest)
        return MPoly.const(r, rest)
    if var is not None and (p.var != var or q.var != var):
        raise ValueError(f"polynomials are not in {var}")
    if p.is_zero() or q.is_zero():
        raise ValueError("resultant with the zero polynomial")
    if p.degree() + q.degree() == 0:
        raise ValueError("resultant of two constants is undefined")
    return bareiss_det(sylvester_matrix(p, q))


def _nested(f: MPoly, order):
    """Nested UniPoly with ``order[0]`` outermost, keeping every listed variable."""
    g = f.with_vars(order)
    outer, inner = order[0], order[1:]
    buckets: dict[int, dict] = {}
    for e, c in g.terms.items():
        buckets.setdefault(e[0], {})[e[1:]] = c
    deg = max(buckets, default=-1)
    coeffs = []
    for k in range(deg + 1):
        sub = MPoly(inner, buckets.get(k, {}))
        coeffs.append(_nested(sub, inner) if inner else sub.terms.get((), 0))
    return UniPoly(coeffs, outer)


def discriminant(p, var: str | None = None):
    """(-1)^(n(n-1)/2) * Res(p, p') / lc(p); for a quadratic this is b^2 - 4ac."""
    if isinstance(p, MPoly):
        if var is None:
            raise ValueError("the variable is required for multivariate input")
        rest = tuple(v for v in p.vars if v != var)
        u = _nested(p, (var,) + rest)
        d = discriminant(u)
        return MPoly.from_unipoly(d, rest) if isinstance(d, UniPoly) else MPoly.const(d, rest)
    n = p.degree()
    if n < 2:
        raise ValueError("discriminant needs degree >= 2")
    r = resultant(p, p.derivative())
    d = exact_quo(r, p.lc())
    return -d if (n * (n - 1) // 2) % 2 else d


# --- rational roots -------------------------------------------------------

def _int_primitive(coeffs):
    """Primitive integer coefficient list (constant first) of a rational polynomial."""
    fr = [Fraction(c) for c in coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g else ints


def _eval_mod(coeffs, x, m):
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % m
    return acc


def _squarefree_mod_p(coeffs, p) -> bool:
    from .ffield import _pgcd

    d = [(i * c) % p for i, c in enumerate(coeffs)][1:]
    f = [c % p for c in coeffs]
    g = _pgcd(f, d, p)
    return len(g) <= 1


def _squarefree_part_int(ints):
    f = UniPoly([Fraction(c) for c in ints])
    g = f.gcd(f.derivative())
    if g.degree() > 0:
        f = f.divmod(g)[0]
    return _int_primitive(f.c)


def rational_roots_int(ints):
    """Distinct rational roots of an integer polynomial (constant term first).

    Roots are found p-adically: pick a prime p not dividing the leading
    coefficient at which the squarefree part stays squarefree, brute-force the
    roots mod p, Hensel-lift them past twice a root-size bound, and read each
    candidate off as a balanced residue over the leading coefficient.  Every
    candidate is confirmed exactly, and every rational root is found, since it
    reduces to one of the lifted simple roots.
    """
    f = list(ints)
    while f and f[-1] == 0:
        f.pop()
    if not f:
        raise ValueError("polynomial is identically zero")
    roots = set()
    if f[0] == 0:
        roots.add(Fraction(0))
        k = 0
        while f[k] == 0:
            k += 1
        f = f[k:]
    if len(f) <= 1:
        return roots
    if len(f) == 2:
        roots.add(Fraction(-f[0], f[1]))
        return roots
    f = _squarefree_part_int(f)
    if len(f) == 2:
        roots.add(Fraction(-f[0], f[1]))
        return roots
    lc = f[-1]
    bound = min(abs(lc) + max(abs(c) for c in f), abs(lc) * abs(f[0]))
    df = [i * c for i, c in enumerate(f)][1:]
    p = 3
    while True:
        if lc % p and is_prime(p) and _squarefree_mod_p(f, p):
            break
        p += 2
    mod_roots = [r for r in range(p) if _eval_mod(f, r, p) == 0]
    target = 2 * bound + 1
    for r in mod_roots:
        m = p
        while m <= target:
            m = m * m
            fr = _eval_mod(f, r, m)
            dr = _eval_mod(df, r, m)
            r = (r - fr * pow(dr, -1, m)) % m
        cand = (lc * r) % m
        if cand > m // 2:
            cand -= m
        x = Fraction(cand, lc)
        if _homog_eval(f, x.numerator, x.denominator) == 0:
            roots.add(x)
    return roots


def _homog_eval(coeffs, u, v):
    n = len(coeffs) - 1
    total = 0
    upow = 1
    vpows = [1] * (n + 1)
    for i in range(1, n + 1):
        vpows[i] = vpows[i - 1] * v
    for i, c in enumerate(coeffs):
        total += c * upow * vpows[n - i]
        upow *= u
    return total


def rational_roots(p) -> set:
    """Exactly the rational roots of a nonzero polynomial over Q, as Fractions."""
    coeffs = p.c if isinstance(p, UniPoly) else list(p)
    if not coeffs or all(c == 0 for c in coeffs):
        raise ValueError("polynomial is identically zero")
    return rational_roots_int(_int_primitive(coeffs))


def square_root_rational(q):
    """Nonnegative rational square root of q, or None if q is not a square."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


# --- exact division ---------------------------------------------------------

def exact_divide(p, q):
    """p / q when the division is exact, else None (UniPoly or MPoly)."""
    if isinstance(p, MPoly) or isinstance(q, MPoly):
        return _exact_divide_multi(p if isinstance(p, MPoly) else MPoly.const(p),
                                   q if isinstance(q, MPoly) else MPoly.const(q))
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    return p.divexact(q)


def _exact_divide_multi(p: MPoly, q: MPoly):
    """Pseudo-divide in the variable of larger degree, then cancel the power of lc(q)."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if p.is_zero():
        return p
    a, b = p._align(q)
    cands = [v for v in a.vars if a.degree(v) > 0 or b.degree(v) > 0]
    if not cands:
        qc = exact_quo(a.terms[(0,) * len(a.vars)], b.terms[(0,) * len(b.vars)])
        return MPoly.const(qc, a.vars)
    main = max(cands, key=lambda v: (max(a.degree(v), b.degree(v)), -a.vars.index(v)))
    ua = a.as_univariate(main)
    ub = b.as_univariate(main)
    if ua.degree() < ub.degree():
        return None
    if ub.degree() == 0:
        quo, scale = ua, ub.c[0]
    else:
        quo, rem = ua.pseudo_divmod(ub)
        if not rem.is_zero():
            return None
        scale = ub.lc() ** (ua.degree() - ub.degree() + 1)
    x = MPoly.var(main, a.vars)
    out = MPoly(a.vars)
    for k, coeff in enumerate(quo.c):
        if coeff == 0:
            continue
        qk = _exact_divide_multi(coeff, scale)
        if qk is None:
            return None
        out = out + qk * x**k
    return out.with_vars(a.vars)


# --- resultants with two free parameters, by evaluation and interpolation ---

def _sylvester_rows(pc, qc):
    """Sylvester rows from descending coefficient lists of formal degree len - 1."""
    m, n = len(pc) - 1, len(qc) - 1
    size = m + n
    rows = [[0] * i + pc + [0] * (size - m - 1 - i) for i in range(n)]
    rows += [[0] * i + qc + [0] * (size - n - 1 - i) for i in range(m)]
    return rows


def _interpolate_consecutive(x0: int, values):
    """Coefficients (constant first) of the polynomial through (x0 + i, values[i])."""
    diffs = []
    row = list(values)
    while row:
        diffs.append(row[0])
        row = [row[i + 1] - row[i] for i in range(len(row) - 1)]
    coeffs = [Fraction(0)] * len(values)
    falling = [Fraction(1)]          # prod_{j<k} (x - x0 - j)
    fact = 1
    for k, d in enumerate(diffs):
        if k:
            fact *= k
        c = Fraction(d, fact)
        if c:
            for i, f in enumerate(falling):
                coeffs[i] += c * f
        shift = -(x0 + k)
        falling = [(falling[i - 1] if i else 0) + (shift * falling[i] if i < len(falling) else 0)
                   for i in range(len(falling) + 1)]
    return [int(c) if c.denominator == 1 else c for c in coeffs]


def resultant_interpolated(p: MPoly, q: MPoly, var: str, params):
    """Res_var(p, q) for p, q in Q[x, y][var] with two parameters (x, y).

    The determinant is evaluated on an integer grid sized by the degree bound
    deg_x Res <= deg_var(q) deg_x(p) + deg_var(p) deg_x(q), then interpolated;
    Sylvester matrices use the generic degrees in ``var`` so that specializing
    where a leading coefficient vanishes stays valid.
    """
    x, y = params
    a, b = p._align(q)
    allv = tuple(a.vars)
    extra = set(a.used_vars()) | set(b.used_vars())
    if not extra <= {var, x, y}:
        raise ValueError(f"unexpected variables {sorted(extra - {var, x, y})}")
    m, n = a.degree(var), b.degree(var)
    if m < 1 and n < 1:
        raise ValueError("resultant of two constants is undefined")

    def coeff_list(f, deg):
        u = f.as_univariate(var)
        return [u[k] for k in range(deg, -1, -1)]

    pc, qc = coeff_list(a, m), coeff_list(b, n)
    deg_x = n * max(a.degree(x), 0) + m * max(b.degree(x), 0)
    deg_y = n * max(a.degree(y), 0) + m * max(b.degree(y), 0)
    xs0, ys0 = -(deg_x // 2), -(deg_y // 2)
    rest = tuple(v for v in allv if v != var)

    def ev(c, xv, yv):
        if not isinstance(c, MPoly):
            return c
        vals = {v: 0 for v in c.vars}
        vals.update({x: xv, y: yv})
        return c.subs({k: vals[k] for k in c.vars})

    grid = []
    for j in range(deg_y + 1):
        yv = ys0 + j
        col = []
        for i in range(deg_x + 1):
            xv = xs0 + i
            rows = _sylvester_rows([ev(c, xv, yv) for c in pc], [ev(c, xv, yv) for c in qc])
            col.append(bareiss_det(rows))
        grid.append(col)
    # interpolate in x for each y-node, then in y for each x-power
    in_x = [_interpolate_consecutive(xs0, col) for col in grid]
    terms = {}
    xi, yi = rest.index(x), rest.index(y)
    for k in range(deg_x + 1):
        ycoeffs = _interpolate_consecutive(ys0, [row[k] for row in in_x])
        for l, c in enumerate(ycoeffs):
            if c:
                e = [0] * len(rest)
                e[xi], e[yi] = k, l
                terms[tuple(e)] = c
    return MPoly(rest, terms)
