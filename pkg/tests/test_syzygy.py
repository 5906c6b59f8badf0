import random
from fractions import Fraction
from math import comb

import pytest

from freecurve.parsing import parse_curve
from freecurve.ring import HomPoly, gradient, monomial_basis
from freecurve.syzygy import (BoundExhausted, Syzygy, SyzygyError,
                              brute_force_exponents, exponent_profile,
                              make_syzygy, mdr, pairing_matrix, syzygy_space)

from conftest import naive_kernel_dim


def _poly(text: str) -> HomPoly:
    return parse_curve(text).poly


def test_triangle_profile():
    p = exponent_profile(_poly("x*y*z"), arrangement=True)
    assert p.exponents == [1, 1]
    assert p.classification == "free"
    assert p.type_t == 0
    assert p.is_free and p.complete and not p.below_scope
    # the generators really are syzygies (validated on construction) and
    # independent of degree 1
    assert [g.degree for g in p.generators] == [1, 1]


def test_generators_satisfy_relation():
    f = _poly("x^3+y^3+z^3")
    p = exponent_profile(f)
    fx, fy, fz = gradient(f)
    for g in p.generators:
        assert (g.a * fx + g.b * fy + g.c * fz).is_zero()


def test_make_syzygy_rejects_non_relation():
    f = _poly("x*y*z")
    n = len(monomial_basis(1))
    bogus = [Fraction(1)] * (3 * n)
    with pytest.raises(SyzygyError):
        make_syzygy(f, 1, bogus)


def test_smooth_cubic_and_quartic():
    p3 = exponent_profile(_poly("x^3+y^3+z^3"))
    assert p3.exponents == [2, 2, 2]
    assert p3.classification == "m_syzygy"
    p4 = exponent_profile(_poly("x^4+y^4+z^4"))
    assert p4.exponents == [3, 3, 3]


def test_pairing_kernel_matches_naive_oracle():
    f = _poly("x*y*z*(x+y)")
    for k in range(4):
        M = pairing_matrix(f, k)
        ker = syzygy_space(f, k)
        assert ker.dim == naive_kernel_dim(M.entries(), M.cols)


def test_mdr():
    assert mdr(_poly("x*y*z")) == 1
    assert mdr(_poly("x^3+y^3+z^3")) == 2
    assert mdr(_poly("y^3*z-x^4")) == 1


def test_brute_force_oracle_agreement():
    for text, arrangement in [("x*y*z", True), ("x^3+y^3+z^3", False),
                              ("x*y*z*(x+y+z)", True), ("(x*z-y^2)*y", False)]:
        f = _poly(text)
        p = exponent_profile(f, arrangement=arrangement)
        kmax = f.degree - 1 if arrangement else max(3 * f.degree - 6, f.degree - 1)
        assert brute_force_exponents(f, kmax) == p.exponents


def test_pencil_below_scope():
    # all lines through one point: exponents contain 0
    p = exponent_profile(_poly("(x^3-y^3)"), arrangement=True)
    assert p.below_scope
    assert p.exponents == [0, 2]
    assert p.is_free


def test_free_hilbert_consistency():
    p = exponent_profile(_poly("(x^3-y^3)(y^3-z^3)(x^3-z^3)"), arrangement=True)
    assert p.exponents == [4, 4]
    for k, dim in p.dims.items():
        expect = sum(comb(k - e + 2, 2) for e in p.exponents if k >= e)
        assert dim == expect


def test_bound_exhausted_on_tiny_kmax():
    with pytest.raises(BoundExhausted):
        exponent_profile(_poly("x^4+y^4+z^4"), kmax=2)


def test_arrangement_kmax_default_suffices():
    # arrangement exponents are found within degree d-1
    p = exponent_profile(_poly("(x^4-y^4)z"), arrangement=True)
    assert p.exponents == [1, 3]
    assert p.complete
