"""Printing polynomials in the shared text grammar (``^`` powers, ``*`` products)."""
from __future__ import annotations

from fractions import Fraction


def _flatten(coeff, mono):
    from .poly import UniPoly

    if isinstance(coeff, UniPoly):
        for i, c in coeff.terms_desc():
            m = dict(mono)
            if i:
                m[coeff.var] = m.get(coeff.var, 0) + i
            yield from _flatten(c, m)
    else:
        yield coeff, mono


def format_rational(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_monomial(mono: dict) -> str:
    parts = []
    for v, e in mono.items():
        if e == 0:
            continue
        parts.append(v if e == 1 else f"{v}^{e}")
    return "*".join(parts)


def format_terms(terms) -> str:
    flat = []
    for coeff, mono in terms:
        flat.extend(_flatten(coeff, mono))
    if not flat:
        return "0"
    out = []
    for k, (c, mono) in enumerate(flat):
        c = Fraction(c) if not hasattr(c, "field") else c
        m = format_monomial(mono)
        neg = (c < 0) if isinstance(c, Fraction) else False
        mag = -c if neg else c
        if m:
            if mag == 1:
                body = m
            else:
                body = f"{format_rational(mag) if isinstance(mag, Fraction) else mag}*{m}"
        else:
            body = format_rational(mag) if isinstance(mag, Fraction) else str(mag)
        if k == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_grouped(p) -> str:
    """Nested polynomial printed by decreasing outer degree with grouped coefficients,
    e.g. ``(-a - 1)*z^3 + (a + 1)*z^2 - a*z - 1``."""
    from .poly import UniPoly

    parts = []
    for i, c in p.terms_desc():
        mono = "" if i == 0 else (p.var if i == 1 else f"{p.var}^{i}")
        cs = str(c) if isinstance(c, UniPoly) else format_terms([(c, {})])
        multi = isinstance(c, UniPoly) and sum(1 for _ in c.terms_desc()) > 1
        if not mono:
            body = f"({cs})" if multi and parts else cs
        elif multi:
            body = f"({cs})*{mono}"
        elif cs in ("1", "-1"):
            body = mono if cs == "1" else f"-{mono}"
        else:
            body = f"{cs}*{mono}"
        if parts:
            parts.append(f" - {body[1:]}" if body.startswith("-") and not multi else f" + {body}")
        else:
            parts.append(body)
    return "".join(parts) or "0"
