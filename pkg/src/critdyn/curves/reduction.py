"""Reduction of known rational points modulo a prime of good reduction."""
from __future__ import annotations

from dataclasses import dataclass, field

from .models import EllipticCurveW, HyperellipticModel, reduce_point
from .zeta import BadReduction, jacobian_order

REPRODUCED = "paper argument reproduced"


@dataclass
class ReductionReport:
    curve: str
    p: int
    fp_points: list
    reductions: list
    flagged: list = field(default_factory=list)
    jacobian_order: int | None = None
    verdict: str = ""
    notes: list = field(default_factory=list)

    @property
    def hit(self):
        return sorted({r for _, r in self.reductions})

    @property
    def all_on_curve(self) -> bool:
        fp = set(self.fp_points)
        return all(r in fp for _, r in self.reductions)

    @property
    def injective(self) -> bool:
        return len(self.hit) == len(self.reductions)

    @property
    def missed(self):
        hit = set(self.hit)
        return [q for q in self.fp_points if q not in hit]

    def to_json(self):
        return {
            "curve": self.curve, "p": self.p, "fp_count": len(self.fp_points),
            "fp_points": [list(q) for q in self.fp_points],
            "reduced": len(self.hit), "injective": self.injective,
            "missed": [list(q) for q in self.missed], "jacobian_order": self.jacobian_order,
            "verdict": self.verdict, "notes": list(self.notes),
        }


def reduction_injection_report(model, p: int, points=None) -> ReductionReport:
    if isinstance(model, (HyperellipticModel, EllipticCurveW)) and not model.has_good_reduction(p):
        raise BadReduction(f"{model.name} has bad reduction at p = {p}")
    points = list(model.points if points is None else points)
    fp = sorted(model.points_mod_p(p))
    rep = ReductionReport(model.name, p, fp, [])
    for pt in points:
        try:
            rep.reductions.append((pt, reduce_point(model, pt, p)))
        except ZeroDivisionError as exc:
            rep.flagged.append((pt, str(exc)))
    if isinstance(model, (HyperellipticModel, EllipticCurveW)):
        rep.jacobian_order = jacobian_order(model, p)
    if not rep.all_on_curve:
        rep.verdict = "reduction off the F_p point set"
    elif rep.injective and len(rep.hit) == len(fp) and not rep.flagged:
        rep.verdict = REPRODUCED
    else:
        rep.verdict = f"{len(rep.hit)} of {len(fp)} F_p points are reductions of the listed points"
        rep.notes.append("the remaining points must be excluded through the image of J(Q) in J(F_p); "
                         "that subgroup computation is out of scope")
    return rep
