"""Rational maps between curve models and their verification."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.mpoly import MPoly
from .models import (
    AffineCurveModel,
    EllipticCurveW,
    HyperellipticModel,
    ModPEvaluator,
    PlaneCurveModel,
)

INDETERMINATE = "indeterminate"
POLE = "pole"
LISTED = "listed"


def affine_equations(model):
    """(vars, equations) of the affine chart used when a map lands in affine coordinates."""
    if isinstance(model, PlaneCurveModel):
        return model.vars, [model.equation]
    if isinstance(model, AffineCurveModel):
        return model.vars, model.eqs
    if isinstance(model, HyperellipticModel):
        x, y = MPoly.gens("x", "y")
        rhs = MPoly(("x", "y"))
        for i, c in enumerate(model.f.c):
            if c:
                rhs = rhs + MPoly(("x", "y"), {(i, 0): c})
        return ("x", "y"), [y * y - rhs]
    if isinstance(model, EllipticCurveW):
        a1, a2, a3, a4, a6 = model.ainvs
        x, y = MPoly.gens("x", "y")
        return ("x", "y"), [y * y + a1 * x * y + a3 * y - (x**3 + a2 * x * x + a4 * x + a6)]
    raise TypeError(f"{type(model).__name__} has no affine chart")


def source_frame(model):
    """(vars, equations) in which source points and map coordinates are written."""
    if isinstance(model, AffineCurveModel):
        return model.vars, model.eqs
    return model.ambient_vars, model.equations


def lift_source_point(model, pt):
    pt = tuple(Fraction(x) for x in pt)
    if isinstance(model, (PlaneCurveModel, HyperellipticModel, EllipticCurveW)) and len(pt) == 2:
        return pt + (Fraction(1),)
    return pt


@dataclass
class CurveMap:
    """Coordinates of a map source -> target.

    ``coords`` are polynomials in the source frame.  With ``denominator`` set
    the image is the affine point coords / denominator in the target's affine
    chart; otherwise it is the (weighted) projective point [coords].
    """

    name: str
    source: object
    target: object
    coords: list
    denominator: MPoly | None = None
    indeterminacy: list = field(default_factory=list)
    correspondences: list = field(default_factory=list)
    note: str = ""
    primes: tuple = (7, 11, 13)

    def __post_init__(self):
        vars, _ = source_frame(self.source)
        self.coords = [c.with_vars(vars) for c in self.coords]
        if self.denominator is not None:
            self.denominator = self.denominator.with_vars(vars)
        projective_source = not isinstance(self.source, AffineCurveModel)
        if projective_source:
            degs = self._weighted_degrees()
            if any(d is None for d in degs):
                raise ValueError(f"{self.name}: coordinates are not homogeneous")
            if self.denominator is None:
                self._check_target_weights(degs)

    @property
    def affine_target(self) -> bool:
        return self.denominator is not None

    def _weights(self):
        vars, _ = source_frame(self.source)
        if isinstance(self.source, HyperellipticModel):
            return (1, self.source.weight, 1)
        return (1,) * len(vars)

    def _weighted_degree(self, poly):
        w = self._weights()
        degs = {sum(a * b for a, b in zip(e, w)) for e in poly.terms}
        return degs.pop() if len(degs) == 1 else (0 if not degs else None)

    def _weighted_degrees(self):
        polys = list(self.coords) + ([self.denominator] if self.denominator is not None else [])
        return [self._weighted_degree(c) for c in polys]

    def _check_target_weights(self, degs):
        if isinstance(self.target, HyperellipticModel):
            d = degs[0]
            expected = [d, self.target.weight * d, d]
        else:
            d = max(degs)
            expected = [d] * len(self.coords)
        for got, want, c in zip(degs, expected, self.coords):
            if not c.is_zero() and got != want:
                raise ValueError(f"{self.name}: coordinate degrees {degs} do not match {expected}")

    # evaluation ---------------------------------------------------------
    def image(self, pt):
        """Image of a rational source point: a normalized target point, INDETERMINATE or POLE."""
        pt = lift_source_point(self.source, pt)
        vals = [c(*pt) if c.terms else Fraction(0) for c in self.coords]
        if self.affine_target:
            den = self.denominator(*pt)
            if den == 0:
                return INDETERMINATE if all(v == 0 for v in vals) else POLE
            return tuple(Fraction(v) / den for v in vals)
        if all(v == 0 for v in vals):
            return INDETERMINATE
        return self.target.normalize(vals)

    def composite(self):
        """Target equations pulled back along the map (denominators cleared)."""
        out = []
        if self.affine_target:
            tvars, teqs = affine_equations(self.target)
            svars, _ = source_frame(self.source)
            for eq in teqs:
                e = eq.with_vars(tvars)
                deg = e.total_degree()
                acc = MPoly(svars)
                for mono, c in e.terms.items():
                    term = MPoly.const(c, svars) * self.denominator ** (deg - sum(mono))
                    for k, n in zip(mono, self.coords):
                        if k:
                            term = term * n**k
                    acc = acc + term
                out.append(acc)
            return out
        tvars = self.target.ambient_vars
        for eq in self.target.equations:
            out.append(eq.with_vars(tvars).subs(dict(zip(tvars, self.coords))))
        return out


def ideal_member(poly: MPoly, eqs) -> bool:
    """Sufficient test: a zero remainder under division by ``eqs`` in some lex order."""
    if poly.is_zero():
        return True
    vars = list(eqs[0].vars)
    orders = [vars] + [vars[i:] + vars[:i] for i in range(1, len(vars))] + [vars[::-1]]
    groups = [list(eqs)] + ([[e] for e in eqs] if len(eqs) > 1 else [])
    for order in orders:
        q = poly.with_vars(order)
        for group in groups:
            _, r = q.reduce([e.with_vars(order) for e in group])
            if r.is_zero():
                return True
    return False


@dataclass
class PrimeCheck:
    p: int
    checked: int = 0
    indeterminate: int = 0
    poles: int = 0
    failures: list = field(default_factory=list)


@dataclass
class MapReport:
    name: str
    exact: bool | None = None
    rational: list = field(default_factory=list)
    primes: list = field(default_factory=list)
    indeterminacy_found: list = field(default_factory=list)
    indeterminacy_expected: list = field(default_factory=list)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    @property
    def status(self) -> str:
        if self.failures:
            return "failed"
        passed = [c for c in self.primes if not c.failures]
        return "consistent" if len(passed) >= 2 else "passed"

    def to_json(self):
        return {
            "map": self.name,
            "status": self.status,
            "exact_pullback": self.exact,
            "primes": {c.p: {"checked": c.checked, "indeterminate": c.indeterminate, "poles": c.poles}
                       for c in self.primes},
            "indeterminacy": [_fmt(p) for p in self.indeterminacy_found],
            "rational": [(_fmt(s), img if isinstance(img, str) else _fmt(img)) for s, img in self.rational],
            "failures": list(self.failures),
        }


def _fmt(pt):
    return "(" + " : ".join(str(Fraction(x)) for x in pt) + ")"


def _same_source_point(model, a, b):
    return model.normalize(lift_source_point(model, a)) == model.normalize(lift_source_point(model, b))


def verify_curve_map(m: CurveMap, primes=None, pairs=None, exact: bool = True) -> MapReport:
    """Check ``m`` on listed rational points, over F_p for each prime, and exactly if asked."""
    rep = MapReport(m.name, indeterminacy_expected=list(m.indeterminacy))
    primes = m.primes if primes is None else primes
    pairs = list(m.correspondences if pairs is None else pairs)
    tgt_listed = [m.target.normalize(lift_source_point(m.target, t)) for t in m.target.points] \
        if not m.affine_target else [tuple(Fraction(x) for x in t) for t in m.target.points]

    # (i) and (iii): listed rational points
    for src, expected in pairs:
        if not m.source.contains(src):
            rep.failures.append(f"source point {_fmt(src)} is not on {m.source.name}")
            continue
        img = m.image(src)
        rep.rational.append((src, img))
        if img == INDETERMINATE:
            rep.indeterminacy_found.append(src)
        if expected == INDETERMINATE or expected == POLE:
            if img != expected:
                rep.failures.append(f"{_fmt(src)}: expected {expected}, got {img if isinstance(img, str) else _fmt(img)}")
            continue
        if isinstance(img, str):
            rep.failures.append(f"{_fmt(src)}: unexpected {img}")
            continue
        if not m.target.contains(img):
            rep.failures.append(f"{_fmt(src)} maps to {_fmt(img)}, which is not on {m.target.name}")
            continue
        if expected == LISTED:
            if img not in tgt_listed:
                rep.failures.append(f"{_fmt(src)} maps to {_fmt(img)}, not among the listed points of {m.target.name}")
        elif expected is not None:
            want = (tuple(Fraction(x) for x in expected) if m.affine_target
                    else m.target.normalize(lift_source_point(m.target, expected)))
            if img != want:
                rep.failures.append(f"{_fmt(src)} maps to {_fmt(img)}, expected {_fmt(want)}")
    for pt in m.indeterminacy:
        if not any(_same_source_point(m.source, pt, q) for q in rep.indeterminacy_found):
            if m.image(pt) != INDETERMINATE:
                rep.failures.append(f"recorded indeterminacy point {_fmt(pt)} is not a common zero")
    for pt in rep.indeterminacy_found:
        if not any(_same_source_point(m.source, pt, q) for q in m.indeterminacy):
            rep.failures.append(f"{_fmt(pt)} is a common zero missing from the recorded locus")

    # (ii): finite fields
    svars, _ = source_frame(m.source)
    for p in primes:
        chk = PrimeCheck(p)
        evs = [ModPEvaluator(c, svars, p) for c in m.coords]
        den = ModPEvaluator(m.denominator, svars, p) if m.affine_target else None
        if m.affine_target:
            tvars, teqs = affine_equations(m.target)
        else:
            tvars, teqs = m.target.ambient_vars, m.target.equations
        tevs = [ModPEvaluator(e, tvars, p) for e in teqs]
        for pt in m.source.points_mod_p(p):
            vals = [ev(pt) for ev in evs]
            if m.affine_target:
                dv = den(pt)
                if dv == 0:
                    if all(v == 0 for v in vals):
                        chk.indeterminate += 1
                    else:
                        chk.poles += 1
                    continue
                inv = pow(dv, -1, p)
                vals = [v * inv % p for v in vals]
            elif all(v == 0 for v in vals):
                chk.indeterminate += 1
                continue
            chk.checked += 1
            if any(tev(vals) for tev in tevs):
                chk.failures.append(f"p={p}: {pt} maps to {tuple(vals)}, off {m.target.name}")
        rep.primes.append(chk)
        rep.failures.extend(chk.failures)

    if exact:
        _, seqs = source_frame(m.source)
        proven = all(ideal_member(c, seqs) for c in m.composite())
        # with one source equation the division test is conclusive; otherwise "not certified"
        rep.exact = True if proven else (False if len(seqs) == 1 else None)
        if rep.exact is False:
            # a single equation is its own Groebner basis: the test is conclusive
            rep.failures.append(f"{m.name}: pulled-back target equation is not divisible by the source equation")
    return rep


def identity_map(model) -> CurveMap:
    vars, _ = source_frame(model)
    gens = [MPoly.var(v, vars) for v in vars]
    pairs = [(pt, pt) for pt in model.points]
    return CurveMap(f"id_{model.name}", model, model, gens, correspondences=pairs)
