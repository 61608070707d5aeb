"""Text form of quadratic maps and the parse -> normalize -> graph -> classify pipeline."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.mpoly import MPoly
from .algebra.poly import UniPoly
from .algebra.textform_parse import ParseError, parse_rational_function
from .p1dyn import QuadRatMap, normalize_to_phi_a, periodic_points, preperiodic_graph

VAR = "z"
OUTSIDE_FAMILY = "outside family"


class MapSyntaxError(ValueError):
    """Bad map text; ``position`` is a 0-based offset into the input."""

    def __init__(self, message: str, position: int | None = None):
        self.position = position
        super().__init__(message)


@dataclass
class MapExpression:
    text: str
    num: UniPoly
    den: UniPoly
    phi: QuadRatMap

    def __str__(self):
        return self.phi.to_text(VAR)


def _to_unipoly(p: MPoly) -> UniPoly:
    extra = [v for v in p.vars if v != VAR and p.degree(v) > 0]
    if extra:
        raise MapSyntaxError(f"unknown variable {extra[0]!r}; maps are written in {VAR}")
    p = p.with_vars((VAR,))
    deg = p.degree(VAR) if p.terms else -1
    return UniPoly([p.terms.get((k,), 0) for k in range(deg + 1)], VAR)


def parse_map(text: str) -> MapExpression:
    """Parse a rational function of z of degree exactly 2."""
    try:
        r = parse_rational_function(text)
    except ParseError as exc:
        raise MapSyntaxError(f"syntax error: {exc}", exc.position) from None
    except ZeroDivisionError as exc:
        raise MapSyntaxError(str(exc)) from None
    num, den = _to_unipoly(r.num), _to_unipoly(r.den)
    if den.is_zero():
        raise MapSyntaxError("zero denominator")
    g = num.gcd(den)
    if g.degree() > 0:
        num, den = num.divexact(g), den.divexact(g)
    if max(num.degree(), den.degree()) > 2:
        raise MapSyntaxError("degree > 2")
    try:
        phi = QuadRatMap.from_rational_function(num, den)
    except ValueError:
        raise MapSyntaxError("degenerate map: zero resultant, so the degree drops below 2") from None
    return MapExpression(text, num, den, phi)


@dataclass
class MapReport:
    map: str
    status: str                        # "exact", "admits", "unknown" or OUTSIDE_FAMILY
    classification: str | None = None
    a: Fraction | None = None
    pcf: bool = False
    vertices: list = field(default_factory=list)
    periodic: list = field(default_factory=list)
    graph: object = None
    max_period: int = 4

    def to_json(self) -> dict:
        return {
            "map": self.map,
            "status": self.status,
            "classification": self.classification,
            "a": None if self.a is None else str(self.a),
            "pcf": self.pcf,
            "vertex_count": len(self.vertices),
            "vertices": list(self.vertices),
            "periodic": [[p, n] for p, n in self.periodic],
            "edges": [] if self.graph is None else
                     [[self.graph.label(v), self.graph.label(w)] for v, w in enumerate(self.graph.succ)],
            "max_period": self.max_period,
        }


def classify_phi(phi: QuadRatMap, max_period: int = 4) -> MapReport:
    from .graphcat import classify

    norm = normalize_to_phi_a(phi)
    if norm.status == "none":
        return MapReport(str(phi), OUTSIDE_FAMILY, max_period=max_period)
    g = preperiodic_graph(phi, max_period)
    cl = classify(g)
    per = [(str(p), n) for p, n in periodic_points(phi, max_period)]
    return MapReport(str(phi), cl.status, cl.label(), norm.a, norm.status == "pcf",
                     [g.label(v) for v in range(g.n)], per, g, max_period)


def classify_map(text: str, max_period: int = 4) -> MapReport:
    return classify_phi(parse_map(text).phi, max_period)
