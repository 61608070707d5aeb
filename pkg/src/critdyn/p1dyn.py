"""Exact dynamics of quadratic rational maps on P^1(Q).

Maps are pairs of binary quadratic forms [F(X, Y), G(X, Y)] acting on
homogeneous coordinates; infinity is the point (1, 0) and is never special-cased.
Coefficient tuples follow ``algebra.binform``: index i holds the coefficient
of X^i Y^(2-i).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .algebra import binform
from .algebra.poly import UniPoly

GRAPH_VERTEX_CAP = 64


@dataclass(frozen=True, order=True)
class ProjPoint:
    """A point of P^1(Q) in normalized integer coordinates."""

    x: int
    y: int

    def __post_init__(self):
        if self.x == 0 and self.y == 0:
            raise ValueError("(0, 0) is not a projective point")

    @staticmethod
    def make(x, y) -> "ProjPoint":
        x, y = Fraction(x), Fraction(y)
        if x == 0 and y == 0:
            raise ValueError("(0, 0) is not a projective point")
        if y == 0:
            return INF
        q = x / y
        return ProjPoint(q.numerator, q.denominator)

    @staticmethod
    def of(value) -> "ProjPoint":
        if isinstance(value, ProjPoint):
            return value
        if isinstance(value, str):
            s = value.strip()
            if s in ("inf", "oo", "∞", "infinity"):
                return INF
            value = Fraction(s)
        q = Fraction(value)
        return ProjPoint(q.numerator, q.denominator)

    def is_inf(self) -> bool:
        return self.y == 0

    def value(self):
        """The affine coordinate as a Fraction, or None at infinity."""
        return None if self.y == 0 else Fraction(self.x, self.y)

    def sort_key(self):
        return (1, Fraction(0)) if self.y == 0 else (0, Fraction(self.x, self.y))

    def __str__(self):
        if self.y == 0:
            return "∞"
        return str(self.x) if self.y == 1 else f"{self.x}/{self.y}"


INF = ProjPoint(1, 0)


def _normalize_ints(values):
    fr = [Fraction(v) for v in values]
    den = 1
    for c in fr:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = gcd(g, c)
    ints = [c // g for c in ints]
    first = next(c for c in ints if c)
    return tuple(-c for c in ints) if first < 0 else tuple(ints)


@dataclass(frozen=True)
class QuadRatMap:
    """phi = [F, G] with F, G binary quadratics over Z, jointly primitive."""

    f: tuple
    g: tuple

    @staticmethod
    def from_forms(f, g) -> "QuadRatMap":
        f, g = list(f), list(g)
        if len(f) != 3 or len(g) != 3:
            raise ValueError("a quadratic map needs two forms of degree 2")
        if all(c == 0 for c in f + g):
            raise ValueError("both forms vanish")
        # sign rule: leading coefficient of G (then of F) positive
        six = _normalize_ints(g[::-1] + f[::-1])
        m = QuadRatMap(tuple(six[3:][::-1]), tuple(six[:3][::-1]))
        if binform.resultant(list(m.f), list(m.g)) == 0:
            raise ValueError("degenerate map: Res(F, G) = 0, so the degree drops below 2")
        return m

    @staticmethod
    def from_rational_function(num: UniPoly, den: UniPoly) -> "QuadRatMap":
        if num.degree() > 2 or den.degree() > 2:
            raise ValueError("degree > 2")
        f = [num[i] for i in range(3)]
        g = [den[i] for i in range(3)]
        return QuadRatMap.from_forms(f, g)

    def coefficients(self):
        return self.f + self.g

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return apply(self, p)

    def to_text(self, var: str = "z") -> str:
        num = UniPoly(list(self.f), var)
        den = UniPoly(list(self.g), var)
        if den.degree() == 0 and den[0] == 1:
            return str(num)
        return f"({num})/({den})"

    def __str__(self):
        return self.to_text()


@dataclass(frozen=True)
class MoebiusTransform:
    """z -> (a z + b) / (c z + d), acting on columns (X, Y)."""

    a: int
    b: int
    c: int
    d: int

    @staticmethod
    def make(a, b, c, d) -> "MoebiusTransform":
        a, b, c, d = _normalize_ints([a, b, c, d])
        if a * d - b * c == 0:
            raise ValueError("singular matrix")
        return MoebiusTransform(a, b, c, d)

    @staticmethod
    def identity() -> "MoebiusTransform":
        return MoebiusTransform(1, 0, 0, 1)

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self) -> "MoebiusTransform":
        return MoebiusTransform.make(self.d, -self.b, -self.c, self.a)

    def compose(self, other: "MoebiusTransform") -> "MoebiusTransform":
        """self o other."""
        return MoebiusTransform.make(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __call__(self, p: ProjPoint) -> ProjPoint:
        return ProjPoint.make(self.a * p.x + self.b * p.y, self.c * p.x + self.d * p.y)


@dataclass
class OrbitInfo:
    tail: list
    cycle: list

    @property
    def period(self) -> int:
        return len(self.cycle)

    @property
    def preperiod(self) -> int:
        return len(self.tail)


@dataclass
class NonRecurrent:
    """Orbit did not repeat within ``steps`` iterations."""

    steps: int


def apply(phi: QuadRatMap, p: ProjPoint) -> ProjPoint:
    x = binform.evaluate(phi.f, p.x, p.y)
    y = binform.evaluate(phi.g, p.x, p.y)
    assert x != 0 or y != 0, "F and G share a zero: degenerate map"
    return ProjPoint.make(x, y)


def iterate(phi: QuadRatMap, p: ProjPoint, n: int) -> ProjPoint:
    for _ in range(n):
        p = apply(phi, p)
    return p


def orbit(phi: QuadRatMap, p: ProjPoint, max_steps: int = 64):
    """OrbitInfo for p, or NonRecurrent when no repetition occurs in max_steps."""
    if max_steps < 1:
        raise ValueError("max_steps must be >= 1")
    seen = {}
    path = []
    cur = p
    for step in range(max_steps + 1):
        if cur in seen:
            start = seen[cur]
            return OrbitInfo(tail=path[:start], cycle=path[start:])
        seen[cur] = step
        path.append(cur)
        cur = apply(phi, cur)
    return NonRecurrent(max_steps)


@dataclass
class CriticalPoints:
    points: list
    irrational: UniPoly | None = None

    @property
    def all_rational(self) -> bool:
        return self.irrational is None


def critical_form(phi: QuadRatMap):
    """The binary quadratic F_X G_Y - F_Y G_X (up to the constant factor it carries)."""
    f0, f1, f2 = phi.f
    g0, g1, g2 = phi.g
    # F = f2 X^2 + f1 XY + f0 Y^2, same for G
    fx = [f1, 2 * f2]          # coefficients of Y, X
    fy = [2 * f0, f1]
    gx = [g1, 2 * g2]
    gy = [2 * g0, g1]
    return binform.sub(binform.mul(fx, gy), binform.mul(fy, gx))


def critical_points(phi: QuadRatMap) -> CriticalPoints:
    w = critical_form(phi)
    roots = binform.rational_roots(w)
    pts = sorted((ProjPoint.make(x, y) for x, y in roots), key=ProjPoint.sort_key)
    if pts:
        return CriticalPoints(pts)
    return CriticalPoints([], UniPoly(binform.primitive_int(w)))


def conjugate(phi: QuadRatMap, m: MoebiusTransform) -> QuadRatMap:
    """phi^m = m^-1 o phi o m."""
    lx = [m.b, m.a]    # a X + b Y
    ly = [m.d, m.c]    # c X + d Y
    fm = binform.compose(list(phi.f), lx, ly)
    gm = binform.compose(list(phi.g), lx, ly)
    # apply the adjugate of m, which represents m^-1 projectively
    f = binform.sub(binform.scale(fm, m.d), binform.scale(gm, m.b))
    g = binform.sub(binform.scale(gm, m.a), binform.scale(fm, m.c))
    return QuadRatMap.from_forms(f, g)


def moebius_from_points(p0: ProjPoint, p_inf: ProjPoint, p1: ProjPoint) -> MoebiusTransform:
    """The transform sending 0, infinity, 1 to p0, p_inf, p1 (distinct points)."""
    # columns lam * p_inf and mu * p0 with lam * p_inf + mu * p0 = p1
    det = p_inf.x * p0.y - p0.x * p_inf.y
    if det == 0:
        raise ValueError("points must be distinct")
    lam = Fraction(p1.x * p0.y - p0.x * p1.y, det)
    mu = Fraction(p_inf.x * p1.y - p1.x * p_inf.y, det)
    if lam == 0 or mu == 0:
        raise ValueError("points must be distinct")
    return MoebiusTransform.make(lam * p_inf.x, mu * p0.x, lam * p_inf.y, mu * p0.y)


def phi_a_forms(a):
    """Forms of ((a+1) z^2 - a z - 1) / ((a+1) z^2)."""
    return [-1, -a, a + 1], [0, 0, a + 1]


@dataclass
class Normalization:
    status: str                      # "phi_a", "pcf" or "none"
    a: Fraction | None = None
    conjugator: MoebiusTransform | None = None
    critical_cycle: list = field(default_factory=list)


def normalize_to_phi_a(phi: QuadRatMap) -> Normalization:
    """Conjugate a critical 3-cycle to 0 -> infinity -> 1 -> 0 and read off a."""
    crit = critical_points(phi)
    for c in crit.points:
        p1 = apply(phi, c)
        p2 = apply(phi, p1)
        if apply(phi, p2) != c or len({c, p1, p2}) < 3:
            continue
        m = moebius_from_points(c, p1, p2)
        psi = conjugate(phi, m)
        cycle = [c, p1, p2]
        others = [q for q in crit.points if q != c]
        if others and others[0] in cycle:
            return Normalization("pcf", None, m, cycle)
        a = Fraction(psi.f[1], psi.f[0])
        expect = QuadRatMap.from_forms(*phi_a_forms(a))
        if expect != psi:
            raise ArithmeticError(f"normal form mismatch: {psi} vs {expect}")
        return Normalization("phi_a", a, m, cycle)
    return Normalization("none")


def rational_preimages(phi: QuadRatMap, p: ProjPoint) -> list:
    """Distinct rational Q with phi(Q) = p, sorted."""
    form = binform.sub(binform.scale(list(phi.f), p.y), binform.scale(list(phi.g), p.x))
    pts = [ProjPoint.make(x, y) for x, y in binform.rational_roots(form)]
    return sorted(set(pts), key=ProjPoint.sort_key)


def periodic_points(phi: QuadRatMap, max_period: int = 4) -> list:
    """(point, exact period) for rational periodic points of period <= max_period."""
    from .dynatomic import dynatomic_form

    if max_period < 1:
        raise ValueError("max_period must be >= 1")
    found = {}
    for n in range(1, max_period + 1):
        form = dynatomic_form(list(phi.f), list(phi.g), n)
        for x, y in binform.rational_roots(form):
            pt = ProjPoint.make(x, y)
            if pt in found:
                continue
            info = orbit(phi, pt, n)
            if isinstance(info, OrbitInfo) and info.preperiod == 0:
                for q in info.cycle:
                    found.setdefault(q, info.period)
    return sorted(found.items(), key=lambda kv: (kv[1], kv[0].sort_key()))


def preperiodic_points(phi: QuadRatMap, max_period: int = 4) -> list:
    """Rational preperiodic points reachable backwards from the periodic ones."""
    per = [p for p, _ in periodic_points(phi, max_period)]
    seen = set(per)
    queue = deque(per)
    while queue:
        v = queue.popleft()
        for u in rational_preimages(phi, v):
            if u not in seen:
                seen.add(u)
                if len(seen) > GRAPH_VERTEX_CAP:
                    raise RuntimeError(
                        f"preimage closure exceeded {GRAPH_VERTEX_CAP} vertices for {phi}"
                    )
                queue.append(u)
    return sorted(seen, key=ProjPoint.sort_key)


def preperiodic_graph(phi: QuadRatMap, max_period: int = 4):
    from .graphcat.graph import FunctionalGraph

    pts = preperiodic_points(phi, max_period)
    index = {p: i for i, p in enumerate(pts)}
    succ = [index[apply(phi, p)] for p in pts]
    return FunctionalGraph(succ, [str(p) for p in pts])
