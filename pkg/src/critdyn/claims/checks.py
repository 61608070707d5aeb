"""Named computations referenced by the claims manifest.

Each check takes keyword arguments from the manifest and returns a JSON-able
value that the runner compares against the manifest's ``expected`` field.
"""
from __future__ import annotations

from ..algebra.mpoly import MPoly
from ..algebra.poly import UniPoly

CHECKS = {}


def check(name):
    def deco(fn):
        CHECKS[name] = fn
        return fn
    return deco


def _nested_to_text(p: UniPoly, outer: str = "z", inner: str = "a") -> str:
    return str(MPoly.from_unipoly(p, (outer, inner)).with_vars((inner, outer)))


# --- dynatomic --------------------------------------------------------------

@check("dynatomic_star")
def dynatomic_star_text(family: str, n: int):
    from ..dynatomic import dynatomic_star, get_family

    return _nested_to_text(dynatomic_star(get_family(family), n).poly)


@check("dynatomic_cofactor")
def dynatomic_cofactor(family: str, n: int, divisor: str):
    """Phi*_n divided exactly by ``divisor`` (an expression in a and z), or None."""
    from ..algebra.resultant import exact_divide
    from ..dynatomic import dynatomic_star, get_family

    star = MPoly.from_unipoly(dynatomic_star(get_family(family), n).poly, ("z", "a")).with_vars(("a", "z"))
    q = exact_divide(star, MPoly.parse(divisor).with_vars(("a", "z")))
    return None if q is None else str(q)


@check("dynatomic_resultant")
def dynatomic_resultant(family: str, m: int, n: int):
    from ..algebra.resultant import resultant
    from ..dynatomic import dynatomic_star, get_family

    fam = get_family(family)
    r = resultant(dynatomic_star(fam, m).poly, dynatomic_star(fam, n).poly)
    return str(MPoly.from_unipoly(r, ("a",))) if isinstance(r, UniPoly) else str(r)


@check("parameter_to_a")
def parameter_to_a(family: str, value: str):
    from ..dynatomic import parameter_to_a as to_a

    return str(to_a(family, value))


@check("family_specialize")
def family_specialize(family: str, value: str):
    from ..dynatomic import family_specialize as spec

    return str(spec(family, value))


@check("discriminant_chain")
def discriminant_chain():
    from ..curves.chains import discriminant_chain as chain

    r = chain()
    return {"discriminant": str(r.discriminant), "cofactor": None if r.quotient is None else str(r.quotient),
            "ok": r.ok}


@check("trace_map_divides")
def trace_map_divides():
    from ..curves.data import P4_TILDE
    from ..dynatomic import trace_map_quotient

    return trace_map_quotient(MPoly.parse(P4_TILDE).with_vars(("a", "t"))).divides


# --- graphs -----------------------------------------------------------------

@check("classify_map")
def classify_map(map: str, max_period: int = 4):
    from ..mapexpr import classify_map as run

    r = run(map, max_period)
    return {"classification": r.classification, "vertices": sorted(r.vertices)}


@check("hasse_closure")
def hasse_closure():
    from ..graphcat import verify_hasse_closure

    rep = verify_hasse_closure()
    return {"uncovered": len(rep.uncovered), "cases": len(rep.rows)}


# --- curves -----------------------------------------------------------------

@check("points_on_curves")
def points_on_curves():
    from ..curves import curves, on_curve

    bad = [f"{name}: {pt}" for name, m in curves().items() for pt in m.points if not on_curve(m, pt)]
    return {"off_curve": bad}


@check("curve_map")
def curve_map_status(name: str):
    from ..curves import curve_map, verify_curve_map

    rep = verify_curve_map(curve_map(name))
    return {"status": rep.status, "failures": rep.failures[:3]}


@check("ec_order")
def ec_order(curve: str, point):
    from ..curves import curve as get, ec_order_of_point

    out = ec_order_of_point(get(curve), tuple(point))
    return out if isinstance(out, int) else str(out)


@check("count_points")
def count_points(curve: str, q: int):
    from ..curves import count_points as count, curve as get

    return count(get(curve), q)


@check("jacobian_order")
def jacobian_order(curve: str, p: int, modulus: int | None = None):
    from ..curves import curve as get, jacobian_order as jac

    n = jac(get(curve), p)
    return n if modulus is None else n % modulus


@check("mumford")
def mumford(curve: str, u: str, v: str):
    from ..curves import curve as get, mumford_consistency

    def uni(text):
        return MPoly.parse(text).with_vars(("x",)).to_unipoly(("x",))

    return mumford_consistency(uni(u), uni(v), get(curve).f)


@check("reduction")
def reduction(curve: str, p: int):
    from ..curves import curve as get
    from ..curves.reduction import reduction_injection_report

    r = reduction_injection_report(get(curve), p)
    return {"verdict": r.verdict, "fp_count": len(r.fp_points), "reduced": len(r.hit)}


# --- appendix ---------------------------------------------------------------

@check("appendix_derivation")
def appendix_derivation():
    from ..curves.appendix import derive_appendix_curve

    d = derive_appendix_curve()
    return {"quartic_multiple": d.multiplier is not None and d.multiplier.degree("z") == 0,
            "F_up_to_sign": d.sign != 0}


@check("appendix_involution")
def appendix_involution(shift: int):
    from ..curves.appendix import F_poly, involution_image

    F = F_poly()
    return F.divides(involution_image(F, shift))


@check("canonical_embedding")
def canonical_embedding():
    from ..curves.appendix import verify_canonical_embedding

    rep = verify_canonical_embedding()
    return {"quadrics_divisible": sum(rep.divisible), "failures": rep.failures}


@check("line_check")
def line_check(p: int = 5):
    from ..curves.appendix import line_intersection_empty_check

    return line_intersection_empty_check(p=p)


@check("singular_locus")
def singular_locus(p: int):
    from ..curves.appendix import singular_locus_fp

    r = singular_locus_fp(p=p)
    if r.method.startswith("not attempted"):
        return r.method
    return {"singular_found": bool(r.singular), "partial": r.partial}
