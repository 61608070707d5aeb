from __future__ import annotations

from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import assume, given, strategies as st

from critdyn.algebra import MPoly, UniPoly, binform, rational_roots, resultant, square_root_rational
from critdyn.dynatomic import (
    FAMILIES, dynatomic_form, dynatomic_star, family_specialize, get_family, iterate_pair, mobius,
    parameter_to_a, phi_form,
)
from critdyn.mapexpr import parse_map
from critdyn.p1dyn import ProjPoint, iterate, orbit, preperiodic_graph, rational_preimages

from conftest import to_sympy

A = get_family("A")
a_s, z_s = sp.symbols("a z")


def az(p):
    return to_sympy(p).subs({sp.Symbol("a"): a_s})


def test_mobius_function():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]


def test_iterate_pair_examples():
    z2 = parse_map("z^2").phi
    p = iterate_pair(z2, 1)
    assert p.F == [0, 0, 1] and p.G == [1, 0, 0]
    it2 = iterate_pair(family_specialize("A", 1), 2)
    assert binform.evaluate(it2.F, 0, 1) / binform.evaluate(it2.G, 0, 1) == 1
    with pytest.raises(ValueError):
        iterate_pair(z2, 5)


def test_third_iterate_fixes_zero_identically():
    it3 = iterate_pair(A, 3)
    # phi^3(0) = 0 means F_3(0, 1) = 0 as a polynomial in a, G_3(0, 1) != 0
    assert it3.F[0] == 0
    assert it3.G[0] != 0


def test_phi_star_1():
    assert sp.expand(az(dynatomic_star(A, 1).poly) - ((-a_s - 1) * z_s**3 + (a_s + 1) * z_s**2 - a_s * z_s - 1)) == 0


def test_phi_star_2():
    want = (a_s + 1) * ((a_s + 1) * z_s**2 + (1 - a_s) * z_s - 1)
    assert sp.expand(az(dynatomic_star(A, 2).poly) - want) == 0


def test_phi_star_3_leading_coefficient():
    p = dynatomic_star(A, 3).poly
    assert p.degree() == 5
    assert sp.expand(az(p.lc()) - (a_s + 1) ** 5) == 0


def test_phi_star_of_z_squared():
    assert dynatomic_star(parse_map("z^2").phi, 1).poly == UniPoly([0, -1, 1], "z")


def test_phi_star_out_of_range():
    with pytest.raises(ValueError):
        dynatomic_star(A, 5)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_moebius_identity_over_Q_of_a(n):
    """prod_{k | n} Phi*_k = Phi_n, as forms with coefficients in Q[a]."""
    f, g = A.generic_forms()
    prod = [1]
    for k in range(1, n + 1):
        if n % k == 0:
            prod = binform.mul(prod, dynatomic_form(f, g, k))
    assert prod == phi_form(f, g, n)
    assert binform.degree(phi_form(f, g, n)) == 2**n + 1


@given(st.fractions(min_value=-8, max_value=8, max_denominator=8))
def test_moebius_identity_specialized(a):
    assume(a not in (0, -1, -2))
    phi = family_specialize("A", a)
    f, g = list(phi.f), list(phi.g)
    for n in (2, 3, 4):
        prod = [1]
        for k in range(1, n + 1):
            if n % k == 0:
                prod = binform.mul(prod, dynatomic_form(f, g, k))
        assert prod == phi_form(f, g, n)


@given(st.fractions(min_value=-8, max_value=8, max_denominator=8), st.integers(1, 4))
def test_roots_have_period_dividing_n(a, n):
    assume(a not in (0, -1, -2))
    phi = family_specialize("A", a)
    for r in rational_roots(dynatomic_star(phi, n).poly):
        assert iterate(phi, ProjPoint.of(r), n) == ProjPoint.of(r)


@pytest.mark.parametrize("fam,val,text", [
    ("A", 1, "(2*z^2-z-1)/(2*z^2)"), ("C", 2, "(5*z^2-7*z+2)/(5*z^2)"),
    ("D", 3, "(5*z^2-11*z+6)/(5*z^2)"), ("B", 2, "(z^2+5*z-6)/z^2"),
])
def test_family_specialize(fam, val, text):
    assert family_specialize(fam, val) == parse_map(text).phi


@pytest.mark.parametrize("fam", sorted(FAMILIES))
def test_excluded_values_rejected(fam):
    for v in FAMILIES[fam].excluded:
        with pytest.raises(ValueError, match="excluded"):
            family_specialize(fam, v)


@pytest.mark.parametrize("fam,val,a", [("B", 2, Fraction(-5, 6)), ("D", 2, Fraction(-5, 2)), ("T", 2, Fraction(-11, 3))])
def test_parameter_to_a(fam, val, a):
    assert parameter_to_a(fam, val) == a


def test_t_family_square_condition():
    a = parameter_to_a("T", 2)
    assert square_root_rational((a + 1) ** 2 + 4) == Fraction(10, 3)


@pytest.mark.parametrize("fam", ["B", "C", "D", "T"])
@given(v=st.fractions(min_value=-6, max_value=6, max_denominator=6))
def test_family_transforms_are_consistent(fam, v):
    try:
        a = parameter_to_a(fam, v)
        phi = family_specialize(fam, v)
    except ValueError:
        return
    assume(a not in (0, -1, -2))
    from critdyn.graphcat import is_isomorphic

    assert is_isomorphic(preperiodic_graph(phi), preperiodic_graph(family_specialize("A", a)))


@given(st.fractions(min_value=-6, max_value=6, max_denominator=6))
def test_b_family_has_the_fixed_point_structure(b):
    try:
        phi = family_specialize("B", b)
    except ValueError:
        return
    bb = ProjPoint.of(b)
    assert orbit(phi, bb).cycle == [bb]
    pre = ProjPoint.of((b * b - b + 1) / (b - 1) ** 2)
    assert pre in rational_preimages(phi, bb)


def test_resultant_has_no_rational_roots_besides_minus_one():
    r = resultant(dynatomic_star(A, 1).poly, dynatomic_star(A, 2).poly)
    assert rational_roots(r) == {-1}


def test_resultant_substitution_property():
    """Res_z(Phi*_1, t - z) = +- Phi*_1(t)."""
    p = MPoly.from_unipoly(dynatomic_star(A, 1).poly, ("z", "a"))
    lin = MPoly.parse("t - z").with_vars(("z", "a", "t"))
    r = resultant(p, lin, "z")
    pt = p.with_vars(("z", "a", "t")).subs({"z": MPoly.var("t", ("z", "a", "t"))})
    assert r.with_vars(("a", "t")) in (pt.with_vars(("a", "t")), -pt.with_vars(("a", "t")))


def test_trace_map_parts_shape():
    from critdyn.dynatomic import trace_map_parts

    p4, A_, B_ = trace_map_parts()
    assert p4.degree() == 12
    lc = MPoly.from_unipoly(p4, ("z", "a")).with_vars(("a", "z"))
    assert lc.degree("a") == 8
    with pytest.raises(ValueError):
        trace_map_parts(3)
