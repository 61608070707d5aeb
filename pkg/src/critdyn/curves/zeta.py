"""L-polynomials of hyperelliptic curves from point counts, and Jacobian orders.

With s_k = q^k + 1 - N_k (q = p), the numerator L(T) = sum a_i T^i of the zeta
function satisfies Newton's identities k a_k = -sum_{i=1..k} s_i a_{k-i}; the
top half comes from a_{2g-i} = p^(g-i) a_i.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.ffield import GF
from .models import EllipticCurveW, HyperellipticModel, count_points


class BadReduction(ValueError):
    pass


@dataclass
class ZetaData:
    p: int
    genus: int
    counts: list
    L: list

    @property
    def jacobian_order(self) -> int:
        return sum(self.L)

    def power_sums(self, upto: int):
        """s_1..s_upto from the L coefficients (Newton's identities run forwards)."""
        a = list(self.L) + [0] * max(0, upto + 1 - len(self.L))
        s = []
        for k in range(1, upto + 1):
            acc = -k * a[k]
            for i in range(1, k):
                acc -= s[i - 1] * a[k - i]
            s.append(acc)
        return s

    def predicted_count(self, k: int) -> int:
        s_k = self.power_sums(k)[-1]
        return self.p**k + 1 - s_k


def _model_genus(model) -> int:
    if isinstance(model, EllipticCurveW):
        return 1
    return model.genus


def l_polynomial(model, p: int) -> ZetaData:
    if isinstance(model, HyperellipticModel):
        if not model.has_good_reduction(p):
            raise BadReduction(f"{model.name} has bad reduction at p = {p}")
    elif isinstance(model, EllipticCurveW):
        if p == 2 or not model.has_good_reduction(p):
            raise BadReduction(f"{model.name} has bad reduction at p = {p}")
    else:
        raise TypeError("jacobian orders are implemented for hyperelliptic and Weierstrass models")
    g = _model_genus(model)
    if g > 3:
        raise ValueError("genus above 3 is out of scope")
    counts = [count_points(model, p**k) for k in range(1, g + 1)]
    s = [p**k + 1 - n for k, n in enumerate(counts, start=1)]
    a = [1]
    for k in range(1, g + 1):
        acc = 0
        for i in range(1, k + 1):
            acc -= s[i - 1] * a[k - i]
        a.append(Fraction(acc, k))
    if any(Fraction(x).denominator != 1 for x in a):
        raise ArithmeticError("non-integral L-polynomial coefficient")
    a = [int(x) for x in a]
    for i in range(g - 1, -1, -1):
        a.append(p ** (g - i) * a[i])
    return ZetaData(p, g, counts, a)


def jacobian_order(model, p: int) -> int:
    """#J(F_p) = L(1)."""
    return l_polynomial(model, p).jacobian_order


def check_next_count(model, p: int):
    """(predicted, counted) number of points over F_{p^(g+1)}."""
    if not isinstance(model, HyperellipticModel):
        raise TypeError("extension-field counts need a hyperelliptic model")
    z = l_polynomial(model, p)
    k = z.genus + 1
    return z.predicted_count(k), model.count(GF(p, k))
