"""The genus-6 curve C, its canonical model D in P^5 and the F_p checks around them."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra import binform
from ..algebra.mpoly import MPoly
from ..algebra.poly import UniPoly
from .data import C_POINTS, CANONICAL_G, D_POINTS, D_QUADRICS, F_UV, W6, curve
from .models import (
    ENUMERATION_BUDGET,
    EnumerationBudgetExceeded,
    ModPEvaluator,
    SpaceCurveModel,
    normalize_projective,
    normalize_projective_mod_p,
    projective_points,
    projective_size,
)

UV = ("u", "v")

DISPLAYED_QUARTIC = (
    "16*t^2*(t + 1)*z^4 + (t^2 + 4*t - 1)*(t^3 - 13*t^2 - 5*t + 1)*z^3"
    " + (t^5 + 29*t^4 + 34*t^3 - 30*t^2 - 3*t + 1)*z^2"
    " - 4*(t - 1)*t*(t + 1)*(t^2 + 4*t - 1)*z + 2*(t - 1)^2*t*(t + 1)^2"
)

# factors that only cut out degenerate parameters (t = -1, 0, 1, infinity or z = 0, infinity)
SPURIOUS = ("u", "u - 1", "u + 1", "v", "v - 1")


def F_poly() -> MPoly:
    return MPoly.parse(F_UV).with_vars(UV)


def clear_substitute(poly: MPoly, subs: dict, target_vars) -> MPoly:
    """Numerator of poly after var -> num/den, each fraction cleared to its own degree."""
    out = MPoly(target_vars)
    degs = {v: poly.degree(v) for v in subs}
    for e, c in poly.terms.items():
        term = MPoly.const(c, target_vars)
        for v, k in zip(poly.vars, e):
            if v in subs:
                num, den = subs[v]
                term = term * num**k * den ** (degs[v] - k)
            elif k:
                term = term * MPoly.var(v, target_vars) ** k
        out = out + term
    return out


@dataclass
class AppendixDerivation:
    quartic: MPoly
    composed: MPoly
    multiplier: MPoly
    uv_raw: MPoly
    removed: list
    uv_curve: MPoly
    sign: int
    involution_ok: bool
    involution_corrected_ok: bool
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def _phi_t_second_iterate_equation() -> MPoly:
    """(t - 1) F_2(z, 1) + (t + 1) G_2(z, 1): the condition phi_t^2(z) = -(t+1)/(t-1)."""
    t = UniPoly.gen("t")
    f = [t**2 - 1, -(t**2 + 4 * t - 1), 4 * t]
    g = [0, 0, 4 * t]
    F2 = binform.compose(f, f, g)
    G2 = binform.compose(g, f, g)
    eq = [(t - 1) * a + (t + 1) * b for a, b in zip(F2, G2)]
    return MPoly.from_unipoly(UniPoly(eq, "z"), ("z", "t")).with_vars(("t", "z"))


def derive_appendix_curve() -> AppendixDerivation:
    failures = []
    quartic = MPoly.parse(DISPLAYED_QUARTIC).with_vars(("t", "z"))
    composed = _phi_t_second_iterate_equation()
    mult = composed.divexact(quartic)
    if mult is None or mult.degree("z") != 0:
        failures.append(f"composed equation is not a Q[t]-multiple of the displayed quartic: {composed}")

    u, v = MPoly.gens(*UV)
    raw = clear_substitute(quartic, {"t": (u + 1, u - 1), "z": (MPoly.const(1, UV), 1 - v)}, UV)
    p = raw.primitive()
    removed = []
    for text in SPURIOUS:
        fac = MPoly.parse(text).with_vars(UV)
        while True:
            q = p.divexact(fac)
            if q is None:
                break
            removed.append(text)
            p = q
    p = p.primitive()
    F = F_poly()
    if p == F:
        sign = 1
    elif p == -F:
        sign = -1
    else:
        sign = 0
        failures.append(f"reduced polynomial differs from F: difference {p - F}")

    involution_ok = F.divides(involution_image(F, STATED_INVOLUTION_SHIFT))
    if not involution_ok:
        failures.append("F does not divide the numerator of F(u, 1/u - 1 - u - v)")
    corrected_ok = F.divides(involution_image(F, DECK_INVOLUTION_SHIFT))
    return AppendixDerivation(quartic, composed, mult, raw, removed, p, sign, involution_ok,
                              corrected_ok, failures)


# v -> 1/u + c - u - v; c = -1 as written next to F, c = +1 from the sum of the
# two z-preimages of one value (1/z1 + 1/z2 = (t^2 + 4t - 1)/(t^2 - 1))
STATED_INVOLUTION_SHIFT = -1
DECK_INVOLUTION_SHIFT = 1


def involution_image(F: MPoly, shift: int = STATED_INVOLUTION_SHIFT) -> MPoly:
    """Numerator u^deg_v * F(u, 1/u + shift - u - v)."""
    u, v = MPoly.gens(*UV)
    return clear_substitute(F, {"v": (1 + shift * u - u * u - u * v, u)}, UV)


# --- canonical model ------------------------------------------------------------

def canonical_g():
    return [MPoly.parse(t).with_vars(UV) for t in CANONICAL_G]


def quadrics():
    return [MPoly.parse(q).with_vars(W6) for q in D_QUADRICS]


@dataclass
class EmbeddingReport:
    divisible: list
    point_images: list
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def canonical_image(pt):
    """Image of an affine point of C under (g_1 : ... : g_6), or None where all vanish."""
    vals = [g(*[Fraction(x) for x in pt]) for g in canonical_g()]
    if all(x == 0 for x in vals):
        return None
    return normalize_projective(vals)


def verify_canonical_embedding() -> EmbeddingReport:
    F = F_poly()
    g = canonical_g()
    failures = []
    divisible = []
    for j, Q in enumerate(quadrics(), start=1):
        pulled = Q.subs(dict(zip(W6, g)))
        ok = pulled.is_zero() or F.divides(pulled)
        divisible.append(ok)
        if not ok:
            failures.append(f"quadric {j} pulled back is not divisible by F")
    listed = [normalize_projective(p) for p in D_POINTS]
    images = []
    for pt in C_POINTS:
        img = canonical_image(pt)
        idx = listed.index(img) + 1 if img in listed else None
        images.append((pt, img, idx))
        if img is not None and idx is None:
            failures.append(f"{pt} maps to {img}, which is not a listed point of D")
    return EmbeddingReport(divisible, images, failures)


# --- finite-field checks on D ---------------------------------------------------

def _rank_mod_p(rows, p: int) -> int:
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(m)) if m[i][c] % p), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][c] % p:
                f = m[i][c]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


@dataclass
class SingularReport:
    p: int
    method: str
    examined: int
    singular: list
    partial: bool = False
    note: str = ""


def singular_locus_fp(model: SpaceCurveModel | None = None, p: int = 3) -> SingularReport:
    """Points of D(F_p) where the Jacobian of the equations has rank below n - 2 (= 4 in P^5)."""
    model = model or curve("D")
    n = len(model.vars)
    if projective_size(n - 1, p) > ENUMERATION_BUDGET and p * p > ENUMERATION_BUDGET:
        return SingularReport(p, "not attempted (budget)", 0, [], partial=True,
                              note="neither P^5(F_p) nor A^2(F_p) fits the enumeration budget")
    evs = [ModPEvaluator(e, model.vars, p) for e in model.eqs]
    jac = [[ModPEvaluator(e.diff(v), model.vars, p) for v in model.vars] for e in model.eqs]
    try:
        pts = model.points_mod_p(p)
        method, partial, note = "full enumeration of P^%d(F_%d)" % (n - 1, p), False, ""
    except EnumerationBudgetExceeded:
        pts = _canonical_images_mod_p(p)
        pts = [q for q in pts if all(ev(q) == 0 for ev in evs)]
        method, partial = "images of C(F_p) under the canonical map", True
        note = "points of D(F_p) not hit by affine points of C are not examined"
    sing = []
    for q in pts:
        rows = [[d(q) for d in row] for row in jac]
        if _rank_mod_p(rows, p) < n - 2:
            sing.append(q)
    return SingularReport(p, method, len(pts), sing, partial, note)


def _canonical_images_mod_p(p: int):
    F = ModPEvaluator(F_poly(), UV, p)
    gs = [ModPEvaluator(g, UV, p) for g in canonical_g()]
    out = set()
    for a in range(p):
        for b in range(p):
            if F((a, b)) == 0:
                vals = [g((a, b)) for g in gs]
                if any(vals):
                    out.add(normalize_projective_mod_p(vals, p))
    return sorted(out)


def line_points(p: int = 5):
    """The line w1 + w4 = w2 - w4 = w5 = w6 = 0, parametrized by (w3 : w4)."""
    return [(-b % p, b, a, b, 0, 0) for a, b in projective_points(1, p)]


def line_intersection_empty_check(quadric_set=None, p: int = 5) -> bool:
    qs = quadrics() if quadric_set is None else quadric_set
    evs = [ModPEvaluator(q, W6, p) for q in qs]
    return not any(all(ev(pt) == 0 for ev in evs) for pt in line_points(p))
