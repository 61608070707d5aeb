"""Curve models with exact membership tests and finite-field enumeration.

Rational points are tuples of ints/Fractions.  Points over a finite field are
tuples of ints (prime field) in canonical projective normal form.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import gcd

from ..algebra.ffield import GF, is_prime
from ..algebra.mpoly import MPoly
from ..algebra.poly import UniPoly

ENUMERATION_BUDGET = 250_000


class EnumerationBudgetExceeded(RuntimeError):
    pass


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


def to_mod_p(x, p: int) -> int:
    x = _frac(x)
    if x.denominator % p == 0:
        raise ZeroDivisionError(f"denominator of {x} vanishes mod {p}")
    return x.numerator * pow(x.denominator, -1, p) % p


class ModPEvaluator:
    """An MPoly compiled for fast evaluation at integer points mod p."""

    def __init__(self, poly: MPoly, vars, p: int):
        poly = poly.with_vars(tuple(vars))
        self.p = p
        self.terms = []
        for e, c in poly.terms.items():
            cm = to_mod_p(c, p)
            if cm:
                self.terms.append((cm, e))

    def __call__(self, pt) -> int:
        p = self.p
        total = 0
        for c, e in self.terms:
            t = c
            for x, k in zip(pt, e):
                if k:
                    t = t * pow(x, k, p) % p
                    if not t:
                        break
            total += t
        return total % p


def normalize_projective(pt):
    """Scale a projective point over Q so that its last nonzero entry is 1."""
    pt = tuple(_frac(x) for x in pt)
    for x in reversed(pt):
        if x != 0:
            return tuple(y / x for y in pt)
    raise ValueError("the zero vector is not a projective point")


def normalize_projective_mod_p(pt, p: int):
    pt = tuple(int(x) % p for x in pt)
    for x in reversed(pt):
        if x:
            inv = pow(x, -1, p)
            return tuple(y * inv % p for y in pt)
    raise ValueError("the zero vector is not a projective point")


def projective_points(n: int, p: int):
    """All points of P^n(F_p), each with last nonzero coordinate equal to 1."""
    for lead in range(n, -1, -1):
        for head in product(range(p), repeat=lead):
            yield tuple(head) + (1,) + (0,) * (n - lead)


def projective_size(n: int, q: int) -> int:
    return (q ** (n + 1) - 1) // (q - 1)


def _check_prime(p):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


# --- models -----------------------------------------------------------------

@dataclass
class CurveModel:
    name: str
    genus: int | None = field(default=None, kw_only=True)
    points: list = field(default_factory=list, kw_only=True)
    complete: bool = field(default=False, kw_only=True)
    note: str = field(default="", kw_only=True)


@dataclass
class PlaneCurveModel(CurveModel):
    """Affine plane curve f(x, y) = 0 with its projective closure in P^2."""

    equation: MPoly = None
    vars: tuple = ("x", "y")
    proj_vars: tuple = ("X", "Y", "Z")

    def __post_init__(self):
        self.equation = self.equation.with_vars(self.vars)
        c = self.equation.content()
        if c != 1:
            raise ValueError(f"{self.name}: equation is not primitive (content {c})")

    @property
    def degree(self) -> int:
        return self.equation.total_degree()

    @property
    def projective_equation(self) -> MPoly:
        X, Y, Z = self.proj_vars
        d = self.degree
        terms = {(e[0], e[1], d - e[0] - e[1]): c for e, c in self.equation.terms.items()}
        return MPoly(self.proj_vars, terms)

    @property
    def equations(self):
        return [self.projective_equation]

    @property
    def ambient_vars(self):
        return self.proj_vars

    def normalize(self, pt):
        return normalize_projective(pt)

    def normalize_mod_p(self, pt, p):
        return normalize_projective_mod_p(pt, p)

    def contains(self, pt) -> bool:
        if len(pt) == 2:
            return self.equation(*[_frac(x) for x in pt]) == 0
        if len(pt) == 3:
            if all(x == 0 for x in pt):
                raise ValueError("the zero vector is not a projective point")
            return self.projective_equation(*[_frac(x) for x in pt]) == 0
        raise ValueError(f"{self.name}: expected 2 (affine) or 3 (projective) coordinates, got {len(pt)}")

    def points_mod_p(self, p: int):
        _check_prime(p)
        ev = ModPEvaluator(self.projective_equation, self.proj_vars, p)
        return [pt for pt in projective_points(2, p) if ev(pt) == 0]


@dataclass
class AffineCurveModel(CurveModel):
    """Affine curve in A^n cut out by several equations (no closure is taken)."""

    eqs: list = None
    vars: tuple = ()

    def __post_init__(self):
        self.eqs = [e.with_vars(self.vars) for e in self.eqs]

    @property
    def equations(self):
        return list(self.eqs)

    @property
    def ambient_vars(self):
        return self.vars

    def normalize(self, pt):
        return tuple(_frac(x) for x in pt)

    def normalize_mod_p(self, pt, p):
        return tuple(int(x) % p for x in pt)

    def contains(self, pt) -> bool:
        if len(pt) != len(self.vars):
            raise ValueError(f"{self.name}: expected {len(self.vars)} coordinates, got {len(pt)}")
        vals = [_frac(x) for x in pt]
        return all(e(*vals) == 0 for e in self.eqs)

    def points_mod_p(self, p: int):
        _check_prime(p)
        n = len(self.vars)
        if p**n > ENUMERATION_BUDGET:
            raise EnumerationBudgetExceeded(f"{self.name}: A^{n}(F_{p}) has {p**n} points")
        evs = [ModPEvaluator(e, self.vars, p) for e in self.eqs]
        return [pt for pt in product(range(p), repeat=n) if all(ev(pt) == 0 for ev in evs)]


@dataclass
class HyperellipticModel(CurveModel):
    """y^2 = f(x) in weighted coordinates [x : y : z], y of weight g + 1."""

    f: UniPoly = None

    def __post_init__(self):
        self.f = UniPoly(list(self.f.c), "x")
        if self.f.degree() not in (3, 4, 5, 6, 7, 8):
            raise ValueError(f"{self.name}: unsupported degree {self.f.degree()}")
        if self.f.gcd(self.f.derivative()).degree() > 0:
            raise ValueError(f"{self.name}: f is not squarefree")
        g = (self.f.degree() - 1) // 2
        if self.genus is None:
            self.genus = g
        elif self.genus != g:
            raise ValueError(f"{self.name}: genus metadata {self.genus} disagrees with degree")

    @property
    def weight(self) -> int:
        return self.genus + 1

    @property
    def form_degree(self) -> int:
        return 2 * self.genus + 2

    def form(self):
        """Coefficients of F(X, Z) = Z^(2g+2) f(X/Z), padded to length 2g+3."""
        c = [_frac(x) for x in self.f.c]
        return c + [Fraction(0)] * (self.form_degree + 1 - len(c))

    def F(self, x, z):
        d = self.form_degree
        return sum(c * x**i * z ** (d - i) for i, c in enumerate(self.form()) if c)

    @property
    def equations(self):
        X, Y, Z = MPoly.gens("X", "Y", "Z")
        rhs = MPoly(("X", "Y", "Z"))
        d = self.form_degree
        for i, c in enumerate(self.form()):
            if c:
                rhs = rhs + MPoly(("X", "Y", "Z"), {(i, 0, d - i): c})
        return [Y * Y - rhs]

    @property
    def ambient_vars(self):
        return ("X", "Y", "Z")

    def contains(self, pt) -> bool:
        if len(pt) == 2:
            x, y = (_frac(v) for v in pt)
            return y * y == self.f(x)
        if len(pt) != 3:
            raise ValueError(f"{self.name}: expected 2 or 3 coordinates, got {len(pt)}")
        x, y, z = (_frac(v) for v in pt)
        if x == 0 and z == 0:
            return False
        return y * y == self.F(x, z)

    def normalize(self, pt):
        x, y, z = (_frac(v) for v in pt)
        w = self.weight
        if z != 0:
            return (x / z, y / z**w, Fraction(1))
        if x == 0:
            raise ValueError("x and z cannot both vanish")
        return (Fraction(1), y / x**w, Fraction(0))

    def normalize_mod_p(self, pt, p):
        x, y, z = (int(v) % p for v in pt)
        w = self.weight
        if z:
            iz = pow(z, -1, p)
            return (x * iz % p, y * pow(iz, w, p) % p, 1)
        if not x:
            raise ValueError("x and z cannot both vanish")
        ix = pow(x, -1, p)
        return (1, y * pow(ix, w, p) % p, 0)

    def has_good_reduction(self, p: int) -> bool:
        if p == 2:
            return False
        ints = self.f.primitive_int()
        if ints[-1] % p == 0:
            return False
        from ..algebra.resultant import discriminant

        return to_mod_p(discriminant(UniPoly(ints, "x")), p) != 0

    def points_mod_p(self, p: int):
        _check_prime(p)
        coeffs = [to_mod_p(c, p) for c in self.form()]
        d = self.form_degree
        roots = {}
        for y in range(p):
            roots.setdefault(y * y % p, []).append(y)
        out = []
        for x in range(p):
            val = 0
            for c in reversed(coeffs):
                val = (val * x + c) % p
            for y in roots.get(val, []):
                out.append((x, y, 1))
        for y in roots.get(coeffs[d], []):
            out.append((1, y, 0))
        return out

    def count(self, field: GF) -> int:
        """#points over F_q: sum over x of (1 + chi(f(x))) plus the points at infinity."""
        coeffs = [field(c).code for c in self.form()]
        d = self.form_degree
        squares = field.square_codes()
        mul, add = field.mul_c, field.add_c
        total = 0
        for x in range(field.q):
            val = 0
            for c in reversed(coeffs[: d + 1]):
                val = add(mul(val, x), c)
            total += 1 if val == 0 else (2 if val in squares else 0)
        lead = coeffs[d]
        total += 1 if lead == 0 else (2 if lead in squares else 0)
        return total


@dataclass
class EllipticCurveW(CurveModel):
    """Long Weierstrass model y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6."""

    a1: Fraction = 0
    a2: Fraction = 0
    a3: Fraction = 0
    a4: Fraction = 0
    a6: Fraction = 0
    label: str = ""

    def __post_init__(self):
        for k in ("a1", "a2", "a3", "a4", "a6"):
            setattr(self, k, _frac(getattr(self, k)))
        if self.genus is None:
            self.genus = 1
        if self.discriminant() == 0:
            raise ValueError(f"{self.name}: singular Weierstrass model")

    @property
    def ainvs(self):
        return (self.a1, self.a2, self.a3, self.a4, self.a6)

    def discriminant(self) -> Fraction:
        a1, a2, a3, a4, a6 = self.ainvs
        b2 = a1 * a1 + 4 * a2
        b4 = 2 * a4 + a1 * a3
        b6 = a3 * a3 + 4 * a6
        b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4
        return -b2 * b2 * b8 - 8 * b4**3 - 27 * b6 * b6 + 9 * b2 * b4 * b6

    @property
    def equations(self):
        a1, a2, a3, a4, a6 = self.ainvs
        X, Y, Z = MPoly.gens("X", "Y", "Z")
        return [Y * Y * Z + a1 * X * Y * Z + a3 * Y * Z * Z
                - (X**3 + a2 * X * X * Z + a4 * X * Z * Z + a6 * Z**3)]

    @property
    def ambient_vars(self):
        return ("X", "Y", "Z")

    def normalize(self, pt):
        return normalize_projective(pt)

    def normalize_mod_p(self, pt, p):
        return normalize_projective_mod_p(pt, p)

    def contains(self, pt) -> bool:
        if len(pt) == 2:
            pt = (pt[0], pt[1], 1)
        if len(pt) != 3:
            raise ValueError(f"{self.name}: expected 2 or 3 coordinates, got {len(pt)}")
        if all(x == 0 for x in pt):
            raise ValueError("the zero vector is not a projective point")
        return self.equations[0](*[_frac(x) for x in pt]) == 0

    def has_good_reduction(self, p: int) -> bool:
        try:
            return to_mod_p(self.discriminant(), p) != 0 and all(
                _frac(a).denominator % p for a in self.ainvs)
        except ZeroDivisionError:
            return False

    def points_mod_p(self, p: int):
        _check_prime(p)
        ev = ModPEvaluator(self.equations[0], ("X", "Y", "Z"), p)
        return [pt for pt in projective_points(2, p) if ev(pt) == 0]


@dataclass
class SpaceCurveModel(CurveModel):
    """Projective curve in P^n cut out by homogeneous equations."""

    eqs: list = None
    vars: tuple = ()

    def __post_init__(self):
        self.eqs = [e.with_vars(self.vars) for e in self.eqs]
        for i, e in enumerate(self.eqs):
            if not e.is_homogeneous():
                raise ValueError(f"{self.name}: equation {i + 1} is not homogeneous")

    @property
    def equations(self):
        return list(self.eqs)

    @property
    def ambient_vars(self):
        return self.vars

    def normalize(self, pt):
        return normalize_projective(pt)

    def normalize_mod_p(self, pt, p):
        return normalize_projective_mod_p(pt, p)

    def contains(self, pt) -> bool:
        if len(pt) != len(self.vars):
            raise ValueError(f"{self.name}: expected {len(self.vars)} coordinates, got {len(pt)}")
        if all(x == 0 for x in pt):
            raise ValueError("the zero vector is not a projective point")
        vals = [_frac(x) for x in pt]
        return all(e(*vals) == 0 for e in self.eqs)

    def points_mod_p(self, p: int, budget: int = ENUMERATION_BUDGET):
        _check_prime(p)
        n = len(self.vars) - 1
        size = projective_size(n, p)
        if size > budget:
            raise EnumerationBudgetExceeded(f"{self.name}: P^{n}(F_{p}) has {size} points (budget {budget})")
        evs = [ModPEvaluator(e, self.vars, p) for e in self.eqs]
        return [pt for pt in projective_points(n, p) if all(ev(pt) == 0 for ev in evs)]


# --- operations ---------------------------------------------------------------

def on_curve(model, point, field=None) -> bool:
    """Exact membership over Q, or over F_p when ``field`` is a prime or a prime GF."""
    if field is None:
        return model.contains(point)
    p = field.p if isinstance(field, GF) else int(field)
    if isinstance(field, GF) and field.k != 1:
        raise ValueError("membership over extension fields is only available through count_points")
    eqs = model.equations
    vars = model.ambient_vars
    pt = tuple(point)
    if len(pt) == 2 and len(vars) == 3:
        pt = pt + (1,)
    if len(pt) != len(vars):
        raise ValueError(f"{model.name}: expected {len(vars)} coordinates, got {len(point)}")
    ints = [to_mod_p(x, p) for x in pt]
    return all(ModPEvaluator(e, vars, p)(ints) == 0 for e in eqs)


def _split_q(q: int):
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            r = q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1 or not is_prime(p):
                break
            return p, k
    raise ValueError(f"{q} is not a prime power")


def count_points(model, q: int) -> int:
    """Number of points over F_q under the model's point convention."""
    p, k = _split_q(q)
    if isinstance(model, HyperellipticModel):
        return model.count(GF(p, k))
    if k != 1:
        raise ValueError(f"{model.name}: extension-field counts are implemented for hyperelliptic models only")
    return len(model.points_mod_p(p))


def reduce_point(model, pt, p: int):
    """Reduction of a rational point mod p in the model's normal form.

    Denominators are cleared first (with the weighted scaling for
    hyperelliptic models), so points with p in a denominator reduce properly.
    """
    pt = [_frac(x) for x in pt]
    if isinstance(model, HyperellipticModel):
        if len(pt) == 2:
            pt.append(Fraction(1))
        x, y, z = pt
        w = model.weight
        den = 1
        for v in (x, z):
            den = den * v.denominator // gcd(den, v.denominator)
        # scale x, z to coprime integers; y follows with weight w
        x, z = x * den, z * den
        y = y * den**w
        g = gcd(int(x), int(z))
        x, z, y = x / g, z / g, y / Fraction(g) ** w
        if y.denominator % p == 0:
            raise ZeroDivisionError(f"point {tuple(pt)} has no integral weighted model at {p}")
        return model.normalize_mod_p((int(x), to_mod_p(y, p), int(z)), p)
    if isinstance(model, AffineCurveModel):
        return tuple(to_mod_p(x, p) for x in pt)
    if len(pt) == 2:
        pt.append(Fraction(1))
    den = 1
    for v in pt:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in pt]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return model.normalize_mod_p([v // g for v in ints], p)


def mumford_consistency(u: UniPoly, v: UniPoly, f: UniPoly) -> bool:
    """True when v^2 - f vanishes modulo u (the identity divisor (1, 0) always passes)."""
    if u.is_zero():
        raise ValueError("u must be nonzero")
    if u.degree() == 0:
        return True
    var = u.var
    v = UniPoly(list(v.c), var)
    f = UniPoly(list(f.c), var)
    return ((v * v - f) % u).is_zero()
