"""Group law on long Weierstrass models, over Q or a prime field."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .models import EllipticCurveW, to_mod_p

TORSION_BOUND = 12
O = None  # the point at infinity


@dataclass(frozen=True)
class InfiniteOrder:
    """nP != O for 1 <= n <= bound; with the uniform torsion bound this means infinite order."""

    bound: int = TORSION_BOUND

    def __str__(self):
        return f"infinite (certified by torsion bound {self.bound})"


class ECGroup:
    """Chord-and-tangent arithmetic; ``p=None`` means exact rational arithmetic."""

    def __init__(self, E: EllipticCurveW, p: int | None = None):
        self.E = E
        self.p = p
        if p is None:
            self.a = E.ainvs
        else:
            self.a = tuple(to_mod_p(x, p) for x in E.ainvs)

    def _c(self, x):
        if self.p is None:
            return Fraction(x)
        return to_mod_p(x, self.p)

    def _div(self, n, d):
        if self.p is None:
            return n / d
        return n * pow(d, -1, self.p) % self.p

    def _red(self, x):
        return x if self.p is None else x % self.p

    def point(self, pt):
        """Affine (x, y) or projective [X : Y : Z] input; returns (x, y) or O."""
        if pt is O:
            return O
        if len(pt) == 3:
            X, Y, Z = (self._c(v) for v in pt)
            if Z == 0:
                if X != 0 or Y == 0:
                    raise ValueError(f"{pt} is not a point of {self.E.name}")
                return O
            pt = (self._div(X, Z), self._div(Y, Z))
        x, y = (self._c(v) for v in pt)
        if not self.on_curve((x, y)):
            raise ValueError(f"{pt} is not on {self.E.name}")
        return (x, y)

    def on_curve(self, P) -> bool:
        if P is O:
            return True
        a1, a2, a3, a4, a6 = self.a
        x, y = P
        return self._red(y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)) == 0

    def neg(self, P):
        if P is O:
            return O
        a1, _, a3, _, _ = self.a
        x, y = P
        return (x, self._red(-y - a1 * x - a3))

    def add(self, P, Q):
        if P is O:
            return Q
        if Q is O:
            return P
        a1, a2, a3, a4, a6 = self.a
        x1, y1 = P
        x2, y2 = Q
        if x1 == x2:
            if self._red(y1 + y2 + a1 * x2 + a3) == 0:
                return O
            lam = self._div(3 * x1 * x1 + 2 * a2 * x1 + a4 - a1 * y1, 2 * y1 + a1 * x1 + a3)
        else:
            lam = self._div(y2 - y1, x2 - x1)
        nu = self._red(y1 - lam * x1)
        x3 = self._red(lam * lam + a1 * lam - a2 - x1 - x2)
        y3 = self._red(-(lam + a1) * x3 - nu - a3)
        return (x3, y3)

    def mul(self, n: int, P):
        if n < 0:
            return self.mul(-n, self.neg(P))
        R = O
        while n:
            if n & 1:
                R = self.add(R, P)
            n >>= 1
            if n:
                P = self.add(P, P)
        return R


def ec_order_of_point(E: EllipticCurveW, P, bound: int = TORSION_BOUND, p: int | None = None):
    """Order of P, or InfiniteOrder when no multiple up to ``bound`` vanishes.

    Over F_p the search continues up to the Hasse bound, so an int is always returned.
    """
    G = ECGroup(E, p)
    P = G.point(P)
    limit = bound if p is None else p + 1 + 2 * int(p**0.5) + 2
    Q = P
    for n in range(1, limit + 1):
        if Q is O:
            return n
        Q = G.add(Q, P)
    if p is not None:
        raise ArithmeticError("order exceeds the Hasse bound")
    return InfiniteOrder(bound)
