from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from critdyn.algebra.mpoly import MPoly
from critdyn.algebra.poly import UniPoly
from critdyn.curves import (
    BadReduction, ECGroup, InfiniteOrder, SpaceCurveModel, count_points, curve, curve_map, curve_maps,
    curves, ec_order_of_point, jacobian_order, l_polynomial, mumford_consistency, on_curve, verify_curve_map,
)
from critdyn.curves.appendix import (
    DISPLAYED_QUARTIC, F_poly, derive_appendix_curve, line_intersection_empty_check, quadrics,
    singular_locus_fp, verify_canonical_embedding,
)
from critdyn.curves.chains import discriminant_chain
from critdyn.curves.maps import identity_map
from critdyn.curves.reduction import REPRODUCED, reduction_injection_report
from critdyn.curves.zeta import check_next_count

# --- membership ----------------------------------------------------------------


def test_membership_examples():
    C, D = curve("C"), curve("D")
    assert F_poly()(Fraction(-1), Fraction(0)) == 0
    assert on_curve(C, (-1, 0))
    assert on_curve(D, (-2, 1, 0, 0, 0, 0))
    assert F_poly()(Fraction(2), Fraction(2)) != 0
    assert not on_curve(C, (2, 2))


def test_every_listed_point_lies_on_its_curve():
    for name, model in curves().items():
        for pt in model.points:
            assert model.contains(pt), (name, pt)


def test_membership_mod_p_agrees_with_reduction():
    D = curve("D")
    for pt in D.points:
        assert on_curve(D, pt, 5)


def test_membership_rejects_bad_arity():
    with pytest.raises(ValueError):
        on_curve(curve("D"), (1, 2, 3), 5)


# --- counts and zeta functions --------------------------------------------------------


def test_count_examples():
    assert count_points(curve("CYC3_H3"), 3) == 6
    assert count_points(curve("N3H1_H"), 5) == 6
    assert count_points(curve("D"), 5) == 9


def _naive_f9_count(coeffs):
    """y^2 = f(x) over F_9 = F_3[i]/(i^2 + 1), elements as pairs (a, b) = a + b i."""
    els = [(a, b) for a in range(3) for b in range(3)]

    def mul(x, y):
        return ((x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3)

    def add(x, y):
        return ((x[0] + y[0]) % 3, (x[1] + y[1]) % 3)

    count = 0
    for x in els:
        fx, xp = (0, 0), (1, 0)
        for c in coeffs:
            fx = add(fx, mul((c % 3, 0), xp))
            xp = mul(xp, x)
        count += sum(1 for y in els if mul(y, y) == fx)
    deg = len(coeffs) - 1
    lead = coeffs[-1] % 3
    if deg % 2:
        count += 1
    else:
        # every element of F_3 is a square in F_9
        count += 2 if lead else 1
    return count


def test_f9_count_against_double_loop():
    H = curve("CYC3_H3")
    assert _naive_f9_count([int(c) for c in H.f.c]) == count_points(H, 9) == 8


@pytest.mark.parametrize("name,p,order", [("CYC3_H3", 3, 19), ("N3H1_H", 5, 144)])
def test_jacobian_order_examples(name, p, order):
    assert jacobian_order(curve(name), p) == order


def test_jacobian_order_multiple_of_15():
    assert jacobian_order(curve("N3M1_H"), 3) % 15 == 0


def test_jacobian_structure_bound():
    # 144 = 72 * 2 is consistent with an L-polynomial of the right shape
    z = l_polynomial(curve("N3H1_H"), 5)
    assert z.L[0] == 1 and z.L[-1] == 5**3 and len(z.L) == 7


@pytest.mark.parametrize("name,p", [("CYC3_H3", 3), ("N3H1_H", 5), ("N3M1_H", 3), ("N3M3_H", 5)])
def test_zeta_predicts_next_extension_count(name, p):
    pred, actual = check_next_count(curve(name), p)
    assert pred == actual


@pytest.mark.parametrize("name", ["CYC3_H3", "N3H1_H", "N3M1_H", "N3M2_H5", "N3M3_H", "19a3", "11a3", "17a4"])
def test_hasse_weil_bound(name):
    model = curve(name)
    g = getattr(model, "genus", 1)
    for p in (5, 7, 11, 13):
        if not model.has_good_reduction(p):
            continue
        n = count_points(model, p)
        assert abs(n - (p + 1)) <= 2 * g * math.isqrt(p) + 2 * g
        assert abs(n - (p + 1)) <= 2 * g * p**0.5


def test_bad_reduction_names_prime():
    H = curve("CYC3_H3")
    bad = next(p for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43) if not H.has_good_reduction(p))
    with pytest.raises(BadReduction, match=f"p = {bad}"):
        jacobian_order(H, bad)


def test_genus_one_jacobian_is_point_count():
    for name in ("19a3", "11a3", "17a4", "53a1"):
        E = curve(name)
        for p in (5, 7, 13):
            if E.has_good_reduction(p):
                assert jacobian_order(E, p) == count_points(E, p)


# --- elliptic curves ---------------------------------------------------------------


@pytest.mark.parametrize("name,order", [("19a3", 3), ("11a3", 5), ("17a4", 4)])
def test_torsion_orders(name, order):
    assert ec_order_of_point(curve(name), (0, 0)) == order


def test_infinite_order_certificate():
    r = ec_order_of_point(curve("53a1"), (0, 0))
    assert isinstance(r, InfiniteOrder)
    assert str(r) == "infinite (certified by torsion bound 12)"


def _points_mod(E, p):
    G = ECGroup(E, p)
    return [None] + [(x, y) for x in range(p) for y in range(p) if G.on_curve((x, y))]


@given(st.sampled_from(["19a3", "11a3", "17a4", "53a1"]), st.sampled_from([7, 13, 23]), st.data())
def test_group_law_associative_and_orders_divide(name, p, data):
    E = curve(name)
    if not E.has_good_reduction(p):
        return
    pts = _points_mod(E, p)
    assert len(pts) == count_points(E, p)
    G = ECGroup(E, p)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert G.add(G.add(P, Q), R) == G.add(P, G.add(Q, R))
    assert G.add(P, Q) == G.add(Q, P)
    assert G.add(P, G.neg(P)) is None
    if P is not None:
        assert len(pts) % ec_order_of_point(E, P, p=p) == 0


def test_rational_group_law_matches_torsion():
    E = curve("11a3")
    G = ECGroup(E)
    P = G.point((0, 0))
    assert G.mul(5, P) is None and G.mul(4, P) == G.neg(P)


# --- Mumford -------------------------------------------------------------------------


def test_mumford_examples():
    f = curve("N3M2_H5").f
    x = UniPoly.gen("x")
    assert mumford_consistency(x * x - x + 1, x - 1, f)
    assert mumford_consistency(x * x - x + 1, 1 - x, f)
    assert mumford_consistency(UniPoly.const(1, "x"), UniPoly.const(0, "x"), f)
    assert not mumford_consistency(x * x - x + 1, x + 1, f)
    with pytest.raises(ValueError):
        mumford_consistency(UniPoly.const(0, "x"), x, f)


# --- maps -------------------------------------------------------------------------------


@pytest.mark.parametrize("name", [n for n in curve_maps() if n != "D_to_C"])
def test_catalog_maps_verify(name):
    rep = verify_curve_map(curve_map(name))
    assert rep.ok, rep.failures
    assert rep.status == "consistent"


def test_psi_indeterminacy():
    rep = verify_curve_map(curve_map("N3E1_psi"), primes=[7, 11, 13])
    C = curve("N3E1_C")
    found = {C.normalize(tuple(Fraction(x) for x in p)) for p in rep.indeterminacy_found}
    assert {C.normalize((0, 1, 0)), C.normalize((1, 0, 1))} <= found


def test_d_to_c_images():
    m = curve_map("D_to_C")
    assert m.image((0, 0, 1, 0, 0, 1)) == (1, 1)
    rep = verify_curve_map(m, exact=False)
    assert rep.ok, rep.failures


def test_identity_maps_pass():
    for name in ("N3E1_C", "CYC3_H3", "19a3"):
        rep = verify_curve_map(identity_map(curve(name)), primes=[7, 11])
        assert rep.ok


def test_broken_map_is_reported():
    m = curve_map("N3E2_psi")
    m.coords = [m.coords[1], m.coords[0], m.coords[2]]
    assert not verify_curve_map(m).ok


# --- genus-6 curve and its canonical model ----------------------------------------------


def test_derivation():
    d = derive_appendix_curve()
    assert d.sign in (1, -1)
    lead = d.quartic.with_vars(("z", "t"))
    t = MPoly.var("t", ("z", "t"))
    top = MPoly(("z", "t"), {e: c for e, c in lead.terms.items() if e[0] == 4})
    assert top == 16 * t**2 * (t + 1) * MPoly.var("z", ("z", "t")) ** 4
    assert d.multiplier.degree("z") == 0
    # stated involution fails, the deck involution from the sum of preimages holds
    assert not d.involution_ok and d.involution_corrected_ok
    assert d.failures == ["F does not divide the numerator of F(u, 1/u - 1 - u - v)"]


def test_quartic_constant():
    assert "16*t^2*(t + 1)*z^4" in DISPLAYED_QUARTIC


def test_canonical_embedding():
    rep = verify_canonical_embedding()
    assert rep.ok and all(rep.divisible)
    # -w2*w5 + w1*w6 after substitution is divisible by F
    w = MPoly.gens("w1", "w2", "w3", "w4", "w5", "w6")
    q = -w[1] * w[4] + w[0] * w[5]
    from critdyn.curves.appendix import canonical_g
    from critdyn.curves.data import W6
    pulled = q.with_vars(W6).subs(dict(zip(W6, canonical_g())))
    assert pulled.is_zero() or F_poly().divides(pulled)
    # independent oracle: the quotient times F gives back the pullback
    quo = pulled.divexact(F_poly())
    assert quo is not None and quo * F_poly() == pulled


def test_canonical_images_of_c_points():
    rep = verify_canonical_embedding()
    mapped = [idx for _, img, idx in rep.point_images if img is not None]
    assert mapped and all(i is not None for i in mapped)


def test_singular_locus():
    r3 = singular_locus_fp(p=3)
    assert r3.singular and not r3.partial
    r7 = singular_locus_fp(p=7)
    assert r7.singular == [] and r7.examined > 0


def test_smooth_plane_cubic_has_no_singular_points():
    X, Y, Z = MPoly.gens("X", "Y", "Z")
    E = SpaceCurveModel("E", eqs=[Y * Y * Z + Y * Z * Z - X**3 + X * X * Z], vars=("X", "Y", "Z"))
    assert singular_locus_fp(E, 7).singular == []
    node = SpaceCurveModel("N", eqs=[Y * Y * Z - X**3 - X * X * Z], vars=("X", "Y", "Z"))
    assert (0, 0, 1) in singular_locus_fp(node, 7).singular


def test_line_check_and_negative_control():
    assert line_intersection_empty_check()
    corrupted = quadrics()
    w = MPoly.gens("w1", "w2", "w3", "w4", "w5", "w6")
    corrupted[0] = (w[4] * w[5]).with_vars(corrupted[0].vars)
    corrupted = [corrupted[0]]
    assert line_intersection_empty_check(corrupted) is False


def test_discriminant_chain():
    assert discriminant_chain().ok


# --- reduction ---------------------------------------------------------------------------


def test_reduction_reports():
    r = reduction_injection_report(curve("N3M1_H"), 3)
    assert r.verdict == REPRODUCED and len(r.fp_points) == 5 == len(r.hit)
    assert r.jacobian_order % 15 == 0
    r = reduction_injection_report(curve("CYC3_H3"), 3)
    assert r.verdict == REPRODUCED and len(r.fp_points) == 6 and r.jacobian_order == 19
    r = reduction_injection_report(curve("N3H1_H"), 5)
    assert r.verdict != REPRODUCED and r.missed and r.notes


def test_reduction_flags_p_in_denominator():
    H = curve("N3M3_H")
    p = 5
    pts = [pt for pt in H.points]
    r = reduction_injection_report(H, p, pts)
    assert len(r.reductions) + len(r.flagged) == len(pts)


def test_reduction_bad_prime():
    H = curve("CYC3_H3")
    bad = next(p for p in (2, 3, 5, 7, 11, 13) if not H.has_good_reduction(p))
    with pytest.raises(BadReduction, match=str(bad)):
        reduction_injection_report(H, bad)
