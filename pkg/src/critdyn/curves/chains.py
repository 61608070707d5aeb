"""The discriminant step taking the (d, w) curve to the quartic y^2 = x^4 - 14x^3 + ..."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.mpoly import MPoly
from ..algebra.resultant import discriminant, exact_divide

DW_EQUATION = "(4*d^2 - 4*d + 1)*w^2 - (d^3 - 2*d + 1)*w + d^3 - 2*d^2 + d"
DISPLAYED_DISCRIMINANT = "d^6 - 16*d^5 + 44*d^4 - 50*d^3 + 28*d^2 - 8*d + 1"
SQUARE_FACTOR = "d - 1"
QUARTIC_FACTOR = "d^4 - 14*d^3 + 15*d^2 - 6*d + 1"
# (d, w) values that give degenerate maps
DEGENERATE = ((0, 0), (0, 1), (1, 0), (Fraction(1, 2), 1))


@dataclass
class DiscriminantChain:
    equation: MPoly
    discriminant: MPoly
    quartic: MPoly
    quotient: MPoly | None
    degenerate_on_curve: list
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def discriminant_chain() -> DiscriminantChain:
    dw = ("d", "w")
    eq = MPoly.parse(DW_EQUATION).with_vars(dw)
    disc = discriminant(eq, "w").with_vars(("d",))
    failures = []
    displayed = MPoly.parse(DISPLAYED_DISCRIMINANT).with_vars(("d",))
    if disc != displayed:
        failures.append(f"discriminant differs from the displayed sextic by {disc - displayed}")
    sq = MPoly.parse(SQUARE_FACTOR).with_vars(("d",))
    quartic = MPoly.parse(QUARTIC_FACTOR).with_vars(("d",))
    quo = exact_divide(disc, sq * sq)
    if quo is None:
        failures.append("(d - 1)^2 does not divide the discriminant")
    elif quo != quartic:
        failures.append(f"cofactor of (d - 1)^2 is {quo}, not the displayed quartic")
    degenerate = []
    for d, w in DEGENERATE:
        degenerate.append(eq(Fraction(d), Fraction(w)) == 0)
    if not all(degenerate):
        failures.append("a degenerate solution is not on the (d, w) curve")
    return DiscriminantChain(eq, disc, quartic, quo, degenerate, failures)
