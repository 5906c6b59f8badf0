import pytest

from freecurve.bourbaki import (EMPTY, POSITIVE_DIMENSIONAL, ZERO_DIMENSIONAL,
                                BourbakiError, base_locus_dimension,
                                bourbaki_generators, delta, thm1_check, v_map)
from freecurve.invariants import tjurina_total
from freecurve.parsing import parse_curve
from freecurve.ring import HomPoly, exact_divide
from freecurve.syzygy import exponent_profile


def _setup(text, arrangement=False):
    f = parse_curve(text).poly.content_normalized()
    return f, exponent_profile(f, arrangement=arrangement)


def test_free_curve_gives_unit_ideal():
    f, p = _setup("x*y*z", arrangement=True)
    data = bourbaki_generators(f, p)
    assert data.is_unit
    # the determinant pairing of the two generators is a constant times f
    d = delta(p.generators[0], p.generators[1])
    q = exact_divide(d, f)
    assert q.degree == 0 and not q.is_zero()


def test_v_map_division_is_exact():
    f, p = _setup("x^3+y^3+z^3")
    for rho in p.generators[1:]:
        g = v_map(f, p.generators[0], rho)
        assert g.degree == p.generators[0].degree + rho.degree - f.degree + 1


def test_base_locus_classification():
    x = HomPoly.variable(0)
    y = HomPoly.variable(1)
    one = HomPoly.constant(1)
    assert base_locus_dimension([one], 0) == EMPTY
    # (x, y) cuts out the single point [0:0:1]
    assert base_locus_dimension([x, y], 1) == ZERO_DIMENSIONAL
    # (x) alone cuts out a line
    assert base_locus_dimension([x], 1) == POSITIVE_DIMENSIONAL
    # no generator within the degree bound
    assert base_locus_dimension([x * x], 1) == POSITIVE_DIMENSIONAL


def test_thm1_smooth_cubic_equality():
    f, p = _setup("x^3+y^3+z^3")
    tau = tjurina_total(f)
    v = thm1_check(f, p, tau)
    assert v.ok
    assert v.details["dprime"] == p.d3 == 2
    assert v.details["equality"]


def test_thm1_sharp_arrangement_equality():
    f, p = _setup("(x^5-y^5)(x+2y+z)(x+3y-5z)", arrangement=True)
    tau = tjurina_total(f)
    assert tau == 27
    v = thm1_check(f, p, tau)
    assert v.ok and v.details["dprime"] == 5 and v.details["equality"]


def test_thm1_not_applicable_for_free():
    f, p = _setup("x*y*z", arrangement=True)
    v = thm1_check(f, p, 3)
    assert not v.applicable
