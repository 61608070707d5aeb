"""Transcribed curves, listed rational points and birational maps.

Genus values are metadata, not computed.  Points are written as projective
triples for plane closures, weighted triples for hyperelliptic models and
affine tuples for affine models.
"""
from __future__ import annotations

from fractions import Fraction as Fr
from functools import lru_cache

from ..algebra.mpoly import MPoly
from ..algebra.poly import UniPoly
from .maps import INDETERMINATE, LISTED, POLE, CurveMap
from .models import (
    AffineCurveModel,
    EllipticCurveW,
    HyperellipticModel,
    PlaneCurveModel,
    SpaceCurveModel,
)


def P(text, vars):
    return MPoly.parse(text).with_vars(vars)


def hyper(name, coeffs_desc, **kw):
    return HyperellipticModel(name, f=UniPoly(list(reversed(coeffs_desc)), "x"), **kw)


def plane(name, text, vars, **kw):
    return PlaneCurveModel(name, equation=P(text, vars), vars=vars, **kw)


XYZ = ("X", "Y", "Z")
W6 = ("w1", "w2", "w3", "w4", "w5", "w6")

# canonical-map coefficient polynomials g_i with omega_i = g_i(u, v) omega_0
CANONICAL_G = (
    "u^3*v + u^2*v^2 - 2*u^2*v - u*v^2 + v",
    "u^2*v + u*v^2 - u*v - v",
    "u*v",
    "u^2 - u",
    "u - 1",
    "1",
)

D_QUADRICS = (
    "-w2*w5 + w1*w6",
    "-w2*w4 + w1*w5 + w2*w5",
    "-w5^2 + w4*w6 - w5*w6",
    "-w3^2 - w3*w4 + w1*w6 + w2*w6 + w3*w6",
    "w1^2 + 2*w1*w2 - w1*w4 - w2*w4 + w4^2 - w1*w5 + w4*w5",
    "w1*w2 + 2*w2^2 - w2*w4 - w2*w5 + w4*w5 + w5^2 - w1*w6 - w2*w6 + w4*w6 + w5*w6",
)

F_UV = ("u^5*v^2 + 2*u^4*v^3 - u^4*v^2 - u^4*v + u^3*v^4 - 4*u^3*v^2 + u^3"
        " + u^2*v^4 - 4*u^2*v^3 + 3*u^2*v - 2*u*v^3 + 4*u*v^2 - u + v^2 - v")

D_POINTS = (
    (0, 0, 0, 2, -2, 1),
    (0, 0, 1, 0, 0, 1),
    (0, 0, -1, 2, -2, 1),
    (0, 0, 0, 0, -1, 1),
    (1, -1, 0, 0, -1, 1),
    (-2, 1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 1, 0, -1, 1),
    (1, -1, 1, 0, -1, 1),
)

# images on C of P_1..P_9 under the coordinate formula; POLE marks points sent to
# infinity.  The formula is 0/0 at P_4, P_5, P_6; the canonical map sends (0, 0)
# and (0, 1) to P_4 and P_5, which pins down those two images.
D_TO_C_IMAGES = ((-1, 0), (1, 1), (-1, 1), INDETERMINATE, INDETERMINATE, INDETERMINATE, (1, 0), POLE, POLE)
D_TO_C_EXTENDED = {3: (0, 0), 4: (0, 1)}

C_POINTS = ((-1, 0), (1, 1), (-1, 1), (0, 0), (0, 1), (1, 0))


@lru_cache(maxsize=None)
def curves() -> dict:
    c = {}
    # R3P5: the (d, w) curve, its quartic model and 53a1
    c["R3P5_C"] = plane("R3P5_C", "(4*d^2 - 4*d + 1)*w^2 - (d^3 - 2*d + 1)*w + d^3 - 2*d^2 + d", ("d", "w"),
                        genus=1, points=[(0, 0), (0, 1), (1, 0), (Fr(1, 2), 1)],
                        note="the four listed points give degenerate maps")
    c["R3P5_Q"] = plane("R3P5_Q", "y^2 - (x^4 - 14*x^3 + 15*x^2 - 6*x + 1)", ("x", "y"), genus=1)
    c["53a1"] = EllipticCurveW("53a1", a1=1, a2=-1, a3=1, label="53a1", points=[(0, 0, 1), (0, 1, 0)])

    # N3E1
    c["N3E1_C"] = plane("N3E1_C", "v^2 - (b - 1)*(b^3 + b^2 - b + 3)", ("b", "v"), genus=1,
                        points=[(0, 1, 0), (1, 0, 1)], complete=True)
    c["19a3"] = EllipticCurveW("19a3", a2=1, a3=1, a4=1, label="19a3",
                               points=[(0, 0, 1), (0, 1, 0), (0, -1, 1)], complete=True)
    c["N3E1_C1"] = plane("N3E1_C1", "u^2 - (-3*a^4 - 16*a^3 - 50*a^2 - 60*a - 23)", ("a", "u"), genus=1,
                         points=[(Fr(-6, 7), Fr(-19, 49), 1), (Fr(-6, 7), Fr(19, 49), 1), (0, 1, 0), (-1, 0, 1)],
                         complete=True)
    c["19a1"] = EllipticCurveW("19a1", a2=1, a3=1, a4=-9, a6=-15, label="19a1",
                               points=[(0, 1, 0), (5, 9, 1), (5, -10, 1)], complete=True)

    # N3E2
    c["N3E2_C"] = plane("N3E2_C", "a^2*t^2 - a^2*t + 2*a*t^2 + t^2 - a", ("a", "t"), genus=1,
                        points=[(0, 1, 0), (0, 0, 1), (1, 0, 0), (-1, 1, 1)], complete=True)
    c["11a3"] = EllipticCurveW("11a3", a2=-1, a3=1, label="11a3",
                               points=[(0, 1, 0), (0, 0, 1), (0, -1, 1), (1, 0, 1), (1, -1, 1)], complete=True)

    # N3E3
    c["N3E3_C"] = plane("N3E3_C", "c^2*z^2 - 3*c^2*z + c^2 + c*z^2 + c*z - c - z^2 + z", ("c", "z"), genus=1,
                        points=[(1, 1, 1), (0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 0, 1)], complete=True)
    c["17a4"] = EllipticCurveW("17a4", a1=1, a2=-1, a3=1, a4=-1, label="17a4",
                               points=[(0, 0, 1), (0, 1, 0), (0, -1, 1), (1, -1, 1)], complete=True)

    # N3M1
    c["N3M1_C"] = plane("N3M1_C", "-c^3*w^2 - 2*c^2*w + 2*c*w^2 + c^2 - w^2 - c + w", ("c", "w"), genus=2,
                        points=[(0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0, 0), (1, 0, 1)], complete=True)
    c["N3M1_H"] = hyper("N3M1_H", [1, -2, 3, -4, -1, 2, 1], genus=2,
                        points=[(1, -1, 0), (1, 1, 0), (0, -1, 1), (0, 1, 1), (1, 0, 1)], complete=True)

    # N3M2
    c["N3M2_C"] = plane("N3M2_C", "(-c^2 - c + 1)*w^3 + (c^2 + c - 1)*w^2 + (-2*c^2 + 1)*w + c^2 - c", ("c", "w"),
                        genus=2, points=[(0, 1, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)], complete=True)
    c["N3M2_H5"] = hyper("N3M2_H5", [1, -2, 5, -6, 10, -8, 5], genus=2,
                         points=[(1, -1, 0), (1, 1, 0)], complete=True)

    # N3M3
    c["N3M3_C"] = plane("N3M3_C", "(-2*d + 1)*w^3 + (2*d - 1)*w^2 + (-d^2 - d + 1)*w + d^2 - d", ("d", "w"),
                        genus=2, points=[(0, 1, 0), (0, 0, 1), (1, 2, 2), (1, 0, 0), (1, 0, 1)], complete=True)
    c["N3M3_H"] = hyper("N3M3_H", [1, 2, 5, 8, 12, 8, 4], genus=2,
                        points=[(1, -1, 0), (1, 1, 0), (-1, -2, 1), (-1, 2, 1), (0, -2, 1), (0, 2, 1)],
                        complete=True)

    # N3H1
    c["N3H1_C"] = plane("N3H1_C", "b*w^2 - (b^4 - 2*b^3 + b^2 + b - 1)*w + b^4 - 2*b^3 + 2*b^2 - b", ("b", "w"),
                        genus=3, points=[(0, 1, 0), (0, 0, 1), (1, 0, 0), (1, 0, 1)], complete=True)
    c["N3H1_H"] = hyper("N3H1_H", [4, -11, 14, -7, -2, 6, -4, 1], genus=3,
                        points=[(1, 0, 0), (0, -1, 1), (0, 1, 1), (1, -1, 1), (1, 1, 1)], complete=True)

    # N3H3 chain; listed triples are read as (d, u, w)
    c["N3H3_C1"] = AffineCurveModel(
        "N3H3_C1", eqs=[P("(4*d^2 - 4*d + 1)*w^2 - (d^3 - 2*d + 1)*w + d^3 - 2*d^2 + d", ("d", "u", "w")),
                        P("(2*d - 1)*u^2 - (d^3 + d^2 - d)*u + d^3 - d^2", ("d", "u", "w"))],
        vars=("d", "u", "w"), genus=5,
        points=[(Fr(1, 2), 1, 1), (1, 0, 0), (0, 0, 0), (1, 1, 0), (0, 0, 1)], complete=True,
        note="complete up to the four points at infinity")
    c["N3H3_C2"] = AffineCurveModel(
        "N3H3_C2", eqs=[P("y^2 - (d^4 - 14*d^3 + 15*d^2 - 6*d + 1)", ("d", "y", "v")),
                        P("v^2 - (d^4 + 2*d^3 - 9*d^2 + 10*d - 3)", ("d", "y", "v"))],
        vars=("d", "y", "v"), genus=5)
    f1 = UniPoly([1, -6, 15, -14, 1], "x")
    f2 = UniPoly([-3, 10, -9, 2, 1], "x")
    c["N3H3_H1"] = HyperellipticModel("N3H3_H1", f=f1 * f2, genus=3)
    c["N3H3_H2"] = hyper("N3H3_H2", [-3, 4, -2, -16, 11, 16, -2, -4, -3], genus=3)
    c["N3H3_H3"] = hyper("N3H3_H3", [-3, 4, -26, 12, -55, -16, 4], genus=2,
                         points=[(0, -2, 1), (0, 2, 1)], complete=True)

    # extra 3-cycle
    c["CYC3_C"] = plane("CYC3_C", "a^3*z^3 - a^3*z^2 + 3*a^2*z^3 - 2*a^2*z + 3*a*z^3 + 2*a*z^2 - 2*a*z - a"
                                  " + z^3 + 2*z^2 - z - 1", ("a", "z"), genus=2,
                        points=[(0, 1, 0), (-1, 0, 1), (1, 0, 0), (-1, 1, 1)], complete=True)
    c["CYC3_H3"] = hyper("CYC3_H3", [1, -4, 6, -2, 1, -2, 1], genus=2,
                         points=[(1, -1, 0), (1, 1, 0), (0, -1, 1), (0, 1, 1), (1, -1, 1), (1, 1, 1)],
                         complete=True)

    # extra 4-cycle: the trace-map quotient
    c["CYC4_Q"] = plane("CYC4_Q", P4_TILDE, ("a", "t"), genus=1,
                        points=[(0, 1, 0), (1, 0, 0), (1, 1, 0)], complete=True)

    # appendix
    c["C"] = plane("C", F_UV, ("u", "v"), genus=6, points=list(C_POINTS),
                   note="conjecturally complete affine point list")
    c["D"] = SpaceCurveModel("D", eqs=[P(q, W6) for q in D_QUADRICS], vars=W6, genus=6,
                             points=list(D_POINTS))
    return c


P4_TILDE = ("a^7*t - 2*a^6*t^2 + a^5*t^3 - a^7 + 13*a^6*t - 17*a^5*t^2 + 5*a^4*t^3 - 7*a^6 + 53*a^5*t"
            " - 47*a^4*t^2 + 10*a^3*t^3 - 6*a^5 + 80*a^4*t - 60*a^3*t^2 + 10*a^2*t^3 + 43*a^4 + 42*a^3*t"
            " - 38*a^2*t^2 + 5*a*t^3 + 95*a^3 - 10*a^2*t - 11*a*t^2 + t^3 + 89*a^2 - 19*a*t - t^2 + 42*a"
            " - 6*t + 9")


def curve(name: str):
    try:
        return curves()[name]
    except KeyError:
        raise KeyError(f"unknown curve {name!r}; known: {sorted(curves())}") from None


@lru_cache(maxsize=None)
def curve_maps() -> dict:
    c = curves()
    m = {}

    def proj(name, src, tgt, texts, indet, vars=XYZ, note=""):
        coords = [P(t, vars) for t in texts]
        src_m, tgt_m = c[src], c[tgt]
        indet = [tuple(x) for x in indet]
        pairs = [(pt, INDETERMINATE if tuple(pt) in indet else LISTED) for pt in src_m.points]
        m[name] = CurveMap(name, src_m, tgt_m, coords, indeterminacy=indet, correspondences=pairs, note=note)

    proj("N3E1_psi", "N3E1_C", "19a3",
         ["2*Z^2 - 2*X*Z", "X^2 - 2*X*Z + Y*Z + Z^2", "-2*X^2 + 4*X*Z - 2*Z^2"],
         [(0, 1, 0), (1, 0, 1)])
    proj("N3E1_prop_psi", "N3E1_C1", "19a1",
         ["1491*X^3 + 4176*X^2*Z - 133*X*Y*Z + 3821*X*Z^2 - 114*Y*Z^2 + 1146*Z^3",
          "533*X^3 + 2839*X^2*Z + 171*X*Y*Z + 3891*X*Z^2 + 95*Y*Z^2 + 1565*Z^3",
          "-686*X^3 - 1764*X^2*Z - 1512*X*Z^2 - 432*Z^3"],
         [(Fr(-6, 7), Fr(-19, 49), 1), (0, 1, 0)])
    proj("N3E2_psi", "N3E2_C", "11a3",
         ["X*Y^3 - X*Y^2*Z + Y^3*Z - Y*Z^3",
          "-X*Y^2*Z + Y^3*Z + X*Y*Z^2 - 2*Y^2*Z^2 + Z^4",
          "-Y^3*Z"],
         [(1, 0, 0), (0, 1, 0)])
    proj("N3E3_psi", "N3E3_C", "17a4",
         ["X*Y^3 - 4*X*Y^2*Z + 4*X*Y*Z^2 + Y^2*Z^2 - X*Z^3 - 2*Y*Z^3 + Z^4",
          "X*Y^2*Z - 3*X*Y*Z^2 + X*Z^3 + Y*Z^3 - Z^4",
          "-Y^3*Z + 3*Y^2*Z^2 - 3*Y*Z^3 + Z^4"],
         [(0, 1, 1), (0, 1, 0), (1, 0, 0)])
    proj("N3M1_psi", "N3M1_C", "N3M1_H",
         ["-X*Z + Z^2", "2*X^3*Y*Z^2 + 2*X^2*Z^4 - 4*X*Y*Z^4 + 2*Y*Z^5 - Z^6", "-X*Z"],
         [(0, 1, 0), (1, 0, 0)])
    proj("N3M2_psi", "N3M2_C", "N3M2_H5",
         ["-Y*Z + Z^2",
          "2*X*Y^3*Z^2 - 2*X*Y^2*Z^3 + Y^3*Z^3 + 4*X*Y*Z^4 - Y^2*Z^4 - 2*X*Z^5 + Z^6",
          "-Y*Z"],
         N3M2_INDETERMINACY)
    proj("N3M3_psi", "N3M3_C", "N3M3_H",
         ["Z", "2*Y^3 + 2*X*Y*Z - 2*Y^2*Z - 2*X*Z^2 + Y*Z^2 + Z^3", "-Y"],
         [(1, 0, 0)])
    proj("N3H1_psi", "N3H1_C", "N3H1_H",
         ["-Z", "X^4 - 2*X^3*Z + X^2*Z^2 - 2*X*Y*Z^2 + X*Z^3 - Z^4", "X - Z"],
         N3H1_INDETERMINACY)

    # R3P5: (d, w) -> (x, y) = (d, (2(4d^2-4d+1)w - (d^3-2d+1)) / (d - 1))
    dw = ("d", "w")
    num_x, num_y, den = _homogenize([P("d^2 - d", dw), P("2*(4*d^2 - 4*d + 1)*w - (d^3 - 2*d + 1)", dw),
                                     P("d - 1", dw)], dw)
    m["R3P5_to_quartic"] = CurveMap(
        "R3P5_to_quartic", c["R3P5_C"], c["R3P5_Q"], [num_x, num_y], denominator=den,
        indeterminacy=[(1, 0, 1)],
        correspondences=[((0, 0, 1), (0, 1)), ((0, 1, 1), (0, -1)), ((1, 0, 1), INDETERMINATE),
                         ((Fr(1, 2), 1, 1), (Fr(1, 2), Fr(1, 4)))])

    # N3H3 chain
    dwu = ("d", "u", "w")
    m["N3H3_C1_to_C2"] = CurveMap(
        "N3H3_C1_to_C2", c["N3H3_C1"], c["N3H3_C2"],
        [P("d^2*(d - 1)", dwu),
         P("d*(2*(4*d^2 - 4*d + 1)*w - (d^3 - 2*d + 1))", dwu),
         P("(d - 1)*((4*d - 2)*u - (d^3 + d^2 - d))", dwu)],
        denominator=P("d*(d - 1)", dwu),
        indeterminacy=[(1, 0, 0), (0, 0, 0), (1, 1, 0), (0, 0, 1)],
        correspondences=[((Fr(1, 2), 1, 1), (Fr(1, 2), Fr(1, 4), Fr(1, 4))), ((1, 0, 0), INDETERMINATE),
                         ((0, 0, 0), INDETERMINATE), ((1, 1, 0), INDETERMINATE), ((0, 0, 1), INDETERMINATE)])
    dyv = ("d", "y", "v")
    m["N3H3_C2_to_H1"] = CurveMap(
        "N3H3_C2_to_H1", c["N3H3_C2"], c["N3H3_H1"],
        [P("d", dyv), P("y*v", dyv), P("1", dyv)])
    m["N3H3_H1_to_H2"] = CurveMap(
        "N3H3_H1_to_H2", c["N3H3_H1"], c["N3H3_H2"],
        [P("X", XYZ), P("Y", XYZ), P("X - Z", XYZ)],
        note="d = x/(x - 1); the substitution is an involution and the octics match with scalar 1")
    m["N3H3_H2_to_H3"] = CurveMap(
        "N3H3_H2_to_H3", c["N3H3_H2"], c["N3H3_H3"],
        [P("X^2 - Z^2", XYZ), P("Y*(X^2 + Z^2)", XYZ), P("X*Z", XYZ)],
        note="quotient by [X : Y : Z] -> [Z : -Y : -X]")

    # appendix: D -> C
    m["D_to_C"] = CurveMap(
        "D_to_C", c["D"], c["C"],
        [P("w4 + w5 + w6", W6), P("w3", W6)], denominator=P("w5 + w6", W6),
        indeterminacy=[D_POINTS[3], D_POINTS[4], D_POINTS[5]],
        note="the formula is 0/0 at P_4, P_5, P_6", primes=(5, 7),
        correspondences=list(zip(D_POINTS, D_TO_C_IMAGES)))
    return m


# common zeros of psi among the listed source points (computed, cross-checked in tests)
N3M2_INDETERMINACY = [(0, 1, 0), (1, 0, 0)]
N3H1_INDETERMINACY = [(0, 1, 0)]


def _homogenize(polys, vars):
    """Common-degree homogenization of affine polynomials in ``vars`` into X, Y, Z."""
    a, b = vars
    deg = max(p.total_degree() for p in polys)
    return [MPoly(XYZ, {(e[0], e[1], deg - e[0] - e[1]): c for e, c in p.with_vars((a, b)).terms.items()})
            for p in polys]


def curve_map(name: str) -> CurveMap:
    try:
        return curve_maps()[name]
    except KeyError:
        raise KeyError(f"unknown map {name!r}; known: {sorted(curve_maps())}") from None
