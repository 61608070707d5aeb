"""Dynatomic polynomials, the parametrized families and the trace-map quotient."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .algebra import binform
from .algebra.poly import UniPoly
from .algebra.textform import format_grouped
from .p1dyn import QuadRatMap

MAX_ITERATE = 4


def mobius(n: int) -> int:
    result = 1
    k = 2
    while k * k <= n:
        if n % k == 0:
            n //= k
            if n % k == 0:
                return 0
            result = -result
        k += 1
    return -result if n > 1 else result


@dataclass
class HomIteratePair:
    n: int
    F: list
    G: list


def _forms_of(phi):
    if isinstance(phi, QuadRatMap):
        return list(phi.f), list(phi.g)
    if isinstance(phi, MapFamily):
        return phi.generic_forms()
    f, g = phi
    return list(f), list(g)


def iterate_forms(f, g, n: int):
    """[(F_1, G_1), ..., (F_n, G_n)] with F_{k+1} = F(F_k, G_k)."""
    out = [(list(f), list(g))]
    for _ in range(n - 1):
        fk, gk = out[-1]
        out.append((binform.compose(f, fk, gk), binform.compose(g, fk, gk)))
    return out


def iterate_pair(phi, n: int) -> HomIteratePair:
    if not 1 <= n <= MAX_ITERATE:
        raise ValueError(f"iterate index must lie in 1..{MAX_ITERATE}")
    f, g = _forms_of(phi)
    fn, gn = iterate_forms(f, g, n)[-1]
    assert binform.degree(fn) == binform.degree(gn) == 2**n
    return HomIteratePair(n, fn, gn)


def phi_form(f, g, n: int):
    """Phi_n = Y F_n - X G_n, a form of degree 2^n + 1."""
    fn, gn = iterate_forms(f, g, n)[-1]
    return binform.sub(binform.times_y(fn), binform.times_x(gn))


def dynatomic_form(f, g, n: int, factors: list | None = None):
    """Phi*_n = prod_{k | n} Phi_k^mu(n/k), with every division checked exact."""
    num = [1]
    den = [1]
    iters = iterate_forms(f, g, n)
    for k in range(1, n + 1):
        if n % k:
            continue
        mu = mobius(n // k)
        if mu == 0:
            continue
        fk, gk = iters[k - 1]
        pk = binform.sub(binform.times_y(fk), binform.times_x(gk))
        if factors is not None:
            factors.append((k, mu))
        if mu > 0:
            num = binform.mul(num, pk)
        else:
            den = binform.mul(den, pk)
    q = binform.exact_div(num, den)
    if q is None:
        raise ArithmeticError(f"Moebius quotient for n={n} is not exact")
    return q


@dataclass
class DynatomicPoly:
    n: int
    form: list
    factors: list = field(default_factory=list)
    var: str = "z"

    @property
    def poly(self) -> UniPoly:
        return binform.dehomogenize(self.form, self.var)

    def __str__(self):
        return format_grouped(self.poly)


def dynatomic_star(phi, n: int) -> DynatomicPoly:
    if not 1 <= n <= MAX_ITERATE:
        raise ValueError(f"n must lie in 1..{MAX_ITERATE}")
    f, g = _forms_of(phi)
    factors = []
    form = dynatomic_form(f, g, n, factors)
    return DynatomicPoly(n, form, factors)


# --- families --------------------------------------------------------------

@dataclass(frozen=True)
class MapFamily:
    """A one-parameter family z -> F(z)/G(z) with a known transform to phi_a."""

    id: str
    param: str
    forms: Callable
    excluded: tuple
    to_a: Callable
    excludes_infinity: bool = False

    def generic_forms(self):
        x = UniPoly.gen(self.param)
        return self.forms(x)

    def check(self, value):
        v = Fraction(value)
        if v in self.excluded:
            raise ValueError(f"parameter {self.param} = {v} is excluded for family {self.id} "
                             f"(excluded set {sorted(self.excluded)})")
        return v


def _a_forms(a):
    return [-1, -a, a + 1], [0, 0, a + 1]


def _b_forms(b):
    return [-b**3 + b**2 - b, b**3 - b**2 + 1, b - 1], [0, 0, b - 1]


def _c_forms(c):
    lead = c**2 + c - 1
    return [c**2 - c, -(2 * c**2 - 1), lead], [0, 0, lead]


def _d_forms(d):
    lead = 2 * d - 1
    return [d**2 - d, -(d**2 + d - 1), lead], [0, 0, lead]


def _t_forms(t):
    return [t**2 - 1, -(t**2 + 4 * t - 1), 4 * t], [0, 0, 4 * t]


def _frac(n, d):
    if d == 0:
        raise ZeroDivisionError("pole of the parameter transform")
    return Fraction(n) / Fraction(d)


FAMILIES = {
    "A": MapFamily("A", "a", _a_forms, (Fraction(0), Fraction(-1), Fraction(-2)), lambda a: Fraction(a)),
    "B": MapFamily("B", "b", _b_forms, (Fraction(0), Fraction(1)),
                   lambda b: -_frac(b**3 - b**2 + 1, b * (b**2 - b + 1))),
    "C": MapFamily("C", "c", _c_forms, (Fraction(0), Fraction(1), Fraction(1, 2)),
                   lambda c: -_frac(2 * c**2 - 1, c**2 - c)),
    "D": MapFamily("D", "d", _d_forms, (Fraction(0), Fraction(1), Fraction(1, 2)),
                   lambda d: -_frac(d**2 + d - 1, d**2 - d)),
    "T": MapFamily("T", "t", _t_forms, (Fraction(-1), Fraction(0), Fraction(1)),
                   lambda t: -_frac(4 * t, t**2 - 1) - 1, excludes_infinity=True),
}


def get_family(family) -> MapFamily:
    if isinstance(family, MapFamily):
        return family
    try:
        return FAMILIES[str(family).upper()]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; choose from {sorted(FAMILIES)}") from None


def family_specialize(family, value) -> QuadRatMap:
    fam = get_family(family)
    v = fam.check(value)
    f, g = fam.forms(v)
    try:
        return QuadRatMap.from_forms(f, g)
    except ValueError as exc:
        raise ValueError(f"{fam.param} = {v} gives a degenerate map in family {fam.id}: {exc}") from None


def parameter_to_a(family, value) -> Fraction:
    fam = get_family(family)
    v = fam.check(value)
    try:
        return fam.to_a(v)
    except ZeroDivisionError:
        raise ValueError(f"{fam.param} = {v} is a pole of the transform to a") from None


# --- trace map ---------------------------------------------------------------

@dataclass
class TraceMapData:
    P4: UniPoly
    A: UniPoly
    B: UniPoly
    factor: object = None
    resultant: object = None
    cofactor: object = None
    divides: bool = False
    notes: list = field(default_factory=list)


def _apoly(c, var="a") -> UniPoly:
    return c if isinstance(c, UniPoly) else UniPoly([c], var)


def trace_map_parts(n: int = 4):
    """P_n = Phi*_{a,n} / (a+1)^4 and tr_n(z) = A/B for the family A.

    B is the product of the (pairwise coprime) denominators of phi, phi^2, ...,
    phi^(n-1); the common Q[a]-content of A and B is then divided out.
    """
    if n != 4:
        raise ValueError("the trace-map quotient is implemented for n = 4 only")
    fam = FAMILIES["A"]
    f, g = fam.generic_forms()
    a = UniPoly.gen("a")
    star = dynatomic_star(fam, n).poly
    unit = (a + 1) ** 4
    coeffs = []
    for c in star.c:
        q = _apoly(c).divexact(unit)
        if q is None:
            raise ArithmeticError("Phi*_{a,4} is not divisible by (a+1)^4")
        coeffs.append(q)
    p4 = UniPoly(coeffs, "z")
    iters = iterate_forms(f, g, n - 1)
    nums = [binform.dehomogenize(fk) for fk, _ in iters]
    dens = [binform.dehomogenize(gk) for _, gk in iters]
    _certify_coprime(dens)
    z = UniPoly.gen("z")
    B = UniPoly([1], "z")
    for d in dens:
        B = B * d
    A = B * z
    for nk, dk in zip(nums, dens):
        A = A + nk * B.divexact(dk)
    g = None
    for c in A.c + B.c:
        if c != 0:
            g = _apoly(c) if g is None else g.gcd(_apoly(c))
    A = A.map_coeffs(lambda c: _apoly(c).divexact(g))
    B = B.map_coeffs(lambda c: _apoly(c).divexact(g))
    return p4, A, B


def _certify_coprime(polys, sample=5):
    """Pairwise coprimality over Q(a), witnessed by one specialization a = sample
    at which no leading coefficient vanishes and the specialized gcd is constant."""
    def spec(p):
        return UniPoly([_apoly(c)(Fraction(sample)) for c in p.c], p.var)

    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            pi, pj = spec(polys[i]), spec(polys[j])
            if pi.degree() != polys[i].degree() or pj.degree() != polys[j].degree():
                raise ArithmeticError("leading coefficient vanishes at the sample point")
            if pi.gcd(pj).degree() > 0:
                raise ArithmeticError("denominators are not coprime; lcm needed")


def trace_map_quotient(factor=None, n: int = 4) -> TraceMapData:
    """Res_z(P_4, B t - A), and whether ``factor`` (an MPoly in a, t) divides it."""
    from .algebra.mpoly import MPoly
    from .algebra.resultant import exact_divide, resultant_interpolated

    p4, A, B = trace_map_parts(n)
    P = MPoly.from_unipoly(p4, ("z", "a"))
    Am = MPoly.from_unipoly(A, ("z", "a"))
    Bm = MPoly.from_unipoly(B, ("z", "a"))
    t = MPoly.var("t", ("z", "a", "t"))
    Q = Bm * t - Am
    R = resultant_interpolated(P, Q, "z", ("a", "t"))
    data = TraceMapData(p4, A, B, factor=factor, resultant=R)
    if factor is not None:
        cof = exact_divide(R, factor)
        data.cofactor = cof
        data.divides = cof is not None
    return data
