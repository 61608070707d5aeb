from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from critdyn.algebra import UniPoly
from critdyn.dynatomic import family_specialize
from critdyn.graphcat import is_isomorphic
from critdyn.mapexpr import parse_map
from critdyn.p1dyn import (
    INF, MoebiusTransform, NonRecurrent, OrbitInfo, ProjPoint, QuadRatMap, apply, conjugate,
    critical_points, iterate, normalize_to_phi_a, orbit, periodic_points, preperiodic_graph,
    rational_preimages,
)

P = ProjPoint.of


def m(text):
    return parse_map(text).phi


R3P0, R3P1, R3P5 = m("1/(z-1)^2"), m("(2*z^2-z-1)/(2*z^2)"), m("(5*z^2-11*z+6)/(5*z^2)")
rationals = st.fractions(min_value=-12, max_value=12, max_denominator=12)


def test_projpoint_normalization():
    assert ProjPoint.make(2, 4) == ProjPoint.make(-3, -6) == P("1/2")
    assert ProjPoint.make(5, 0) == ProjPoint.make(-1, 0) == INF
    with pytest.raises(ValueError):
        ProjPoint.make(0, 0)


@pytest.mark.parametrize("phi,src,dst", [(R3P1, "0", "inf"), (R3P1, "inf", "1"), (R3P0, "2", "1")])
def test_apply_examples(phi, src, dst):
    assert apply(phi, P(src)) == P(dst)


def test_orbit_with_tail():
    info = orbit(R3P5, P(6), 16)
    assert info.tail == [P(6), P("2/3")]
    assert info.cycle == [P("2/5"), P(3)]
    assert (info.preperiod, info.period) == (2, 2)


def test_orbit_periodic_and_fixed():
    info = orbit(R3P0, P(0))
    assert (info.preperiod, info.period) == (0, 3)
    z2 = m("z^2")
    assert orbit(z2, P(1)).cycle == [P(1)]


def test_orbit_non_recurrent_is_a_value():
    assert isinstance(orbit(m("z^2"), P(2), 10), NonRecurrent)
    with pytest.raises(ValueError):
        orbit(R3P0, P(0), 0)


def test_critical_points():
    assert critical_points(R3P0).points == [P(1), INF]
    assert critical_points(m("z^2")).points == [P(0), INF]
    for a in (1, 3, Fraction(-5, 6)):
        assert P(0) in critical_points(family_specialize("A", a)).points


def test_critical_points_irrational_pair_reported():
    cp = critical_points(m("(z^2 + 2)/(z^2 + z + 1)"))
    assert cp.points == [] and cp.irrational is not None and not cp.all_rational


def test_conjugation_conventions():
    # conjugate() follows phi^f = f^-1 o phi o f
    shift = MoebiusTransform.make(1, 1, 0, 1)          # z -> z + 1
    z2 = m("z^2")
    assert conjugate(z2, shift) == m("z^2 + 2*z")
    # the other convention f o phi o f^-1 moves the fixed critical point 0 to 1
    assert conjugate(z2, shift.inverse()) == m("z^2 - 2*z + 2")
    assert conjugate(z2, MoebiusTransform.identity()) == z2


moebius = st.tuples(*[st.integers(-4, 4)] * 4).filter(lambda t: t[0] * t[3] - t[1] * t[2] != 0).map(
    lambda t: MoebiusTransform.make(*t))


@given(moebius, st.sampled_from([R3P0, R3P1, R3P5]))
def test_conjugation_is_a_group_action(f, phi):
    assert conjugate(conjugate(phi, f), f.inverse()) == phi
    g = MoebiusTransform.make(2, -1, 1, 3)
    assert conjugate(conjugate(phi, f), g) == conjugate(phi, f.compose(g))


@given(moebius, st.sampled_from([R3P1, R3P5]))
def test_graphs_are_conjugation_invariant(f, phi):
    assert is_isomorphic(preperiodic_graph(conjugate(phi, f)), preperiodic_graph(phi))


def test_normalize_to_phi_a():
    n = normalize_to_phi_a(R3P1)
    assert n.status == "phi_a" and n.a == 1
    assert normalize_to_phi_a(R3P0).status == "pcf"
    assert normalize_to_phi_a(m("z^2")).status == "none"


@given(rationals, moebius)
def test_normalization_recovers_the_parameter(a, f):
    assume(a not in (0, -1, -2))
    phi = conjugate(family_specialize("A", a), f)
    n = normalize_to_phi_a(phi)
    assert n.status == "phi_a"
    # the parameter is an invariant of the conjugacy class only up to the critical-cycle choice
    back = family_specialize("A", n.a)
    assert conjugate(phi, n.conjugator) == back
    assert is_isomorphic(preperiodic_graph(back), preperiodic_graph(phi))


def test_rational_preimages_examples():
    phi1 = family_specialize("A", 1)
    assert rational_preimages(phi1, P(0)) == [P("-1/2"), P(1)]
    phi_d2 = family_specialize("D", 2)
    assert rational_preimages(phi_d2, P(2)) == [P(-2), P("1/3")]
    assert rational_preimages(phi_d2, P(-2)) == []


@given(rationals, rationals)
def test_preimages_map_back(a, x):
    assume(a not in (0, -1, -2))
    phi = family_specialize("A", a)
    for q in rational_preimages(phi, P(x)):
        assert apply(phi, q) == P(x)


def test_periodic_points_examples():
    assert periodic_points(family_specialize("A", 1), 4) == [(P(0), 3), (P(1), 3), (INF, 3)]
    b2 = periodic_points(family_specialize("B", 2), 4)
    assert (P(2), 1) in b2 and len(b2) == 4
    d3 = dict(periodic_points(family_specialize("D", 3), 4))
    assert d3[P(3)] == d3[P("2/5")] == 2


@given(rationals)
def test_periodic_points_closed_with_exact_period(a):
    assume(a not in (0, -1, -2))
    phi = family_specialize("A", a)
    per = dict(periodic_points(phi, 4))
    for p, n in per.items():
        assert iterate(phi, p, n) == p
        assert all(iterate(phi, p, k) != p for k in range(1, n))
        assert per.get(apply(phi, p)) == n


@pytest.mark.parametrize("phi,size", [(R3P5, 11), (R3P0, 4), (family_specialize("A", 1), 5)])
def test_graph_sizes(phi, size):
    g = preperiodic_graph(phi)
    assert g.n == size
    assert all(0 <= s < g.n for s in g.succ)


def test_degenerate_forms_rejected():
    with pytest.raises(ValueError):
        QuadRatMap.from_forms([0, 1, 1], [0, 1, 0])     # (X^2 + XY)/(XY) has a common factor
    with pytest.raises(ValueError):
        QuadRatMap.from_rational_function(UniPoly([1, 0, 0, 1], "z"), UniPoly([1], "z"))


def test_map_normalization_is_unique():
    assert m("(4*z^2 - 2*z - 2)/(4*z^2)") == R3P1 == m("(-2*z^2+z+1)/(-2*z^2)")
    assert isinstance(orbit(R3P1, P(0)), OrbitInfo)
