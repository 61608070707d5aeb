from __future__ import annotations

from fractions import Fraction

import sympy as sp
from hypothesis import settings

from critdyn.algebra import MPoly, UniPoly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def to_sympy(p, names=None):
    """UniPoly (possibly nested) or MPoly -> sympy expression."""
    if isinstance(p, MPoly):
        syms = sp.symbols(p.vars)
        syms = syms if isinstance(syms, tuple) else (syms,)
        return sum((sp.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else sp.Integer(c))
                   * sp.Mul(*[s**e for s, e in zip(syms, mono)]) for mono, c in p.terms.items())
    if isinstance(p, UniPoly):
        x = sp.Symbol(p.var)
        return sum(to_sympy(c) * x**i for i, c in enumerate(p.c))
    p = Fraction(p)
    return sp.Rational(p.numerator, p.denominator)


def from_sympy(expr, vars):
    return MPoly.parse(str(sp.expand(expr)).replace("**", "^")).with_vars(tuple(vars))


# --- acceptance summary --------------------------------------------------------

ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion n")


def pytest_runtest_makereport(item, call):
    mark = item.get_closest_marker("criterion")
    if mark is None or call.when != "call":
        return
    n, title = mark.args
    ACCEPTANCE[n] = (title, call.excinfo is None, call.duration)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok, secs = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:2}: {'PASS' if ok else 'FAIL'}  {title}  ({secs:.1f} s)")
