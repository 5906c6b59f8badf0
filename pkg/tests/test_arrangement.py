import random
from fractions import Fraction
from math import comb

import pytest

from freecurve.arrangement import (Arrangement, ArrangementError, Line,
                                   addition_classify, combinatorial_tau_mu,
                                   cor20_check, deletion_classify,
                                   intersection_lattice, is_supersolvable,
                                   modular_points, multiplicity_profile,
                                   random_arrangement,
                                   random_free_arrangement, thm4_filter,
                                   thm5_bounds)
from freecurve.corpus import (full_monomial_arrangement, monomial_arrangement,
                              near_pencil, remark_sharp_arrangement, triangle,
                              two_pencil_quadrilateral)
from freecurve.invariants import tjurina_total


def test_duplicate_lines_rejected():
    with pytest.raises(ArrangementError):
        Arrangement.from_coeff_rows([[1, 0, 0], [2, 0, 0]])


def test_line_normalization():
    l1 = Line.from_coeffs([2, 4, 6])
    l2 = Line.from_coeffs([1, 2, 3])
    assert l1 == l2 and l1.coeffs[0] == Fraction(1)


def test_triangle_lattice():
    A = triangle()
    recs = A.lattice()
    assert len(recs) == 3
    assert all(r.multiplicity == 2 for r in recs)
    assert combinatorial_tau_mu(A) == 3


def test_sharp_arrangement_lattice():
    A = remark_sharp_arrangement()
    recs = A.lattice()
    mults = sorted((r.multiplicity for r in recs), reverse=True)
    assert mults == [5] + [2] * 11
    assert sum(comb(m, 2) for m in mults) == comb(7, 2)
    assert combinatorial_tau_mu(A) == 27
    mp = multiplicity_profile(A)
    assert mp.m_max == 5 and mp.n_second == 2
    assert sorted(mp.r_per_line) == [3, 3, 3, 3, 3, 6, 6]


def test_monomial_lattice_tau():
    # tau from the lattice matches the free-curve product formula
    for m, exps in [(3, (4, 4)), (4, (5, 6))]:
        A = monomial_arrangement(m)
        d = 3 * m
        assert combinatorial_tau_mu(A) == (d - 1) ** 2 - exps[0] * exps[1]
        mp = multiplicity_profile(A)
        assert set(mp.r_per_line) == {m + 1}


def test_full_monomial_r_per_line():
    for m in (2, 3):
        A = full_monomial_arrangement(m)
        mp = multiplicity_profile(A)
        assert set(mp.r_per_line) == {m + 2}


def test_defining_polynomial_round_trip():
    A = triangle()
    f = A.defining_polynomial()
    assert f.degree == 3 and f.terms == {(1, 1, 1): Fraction(1)}


def test_modular_points():
    assert len(modular_points(triangle())) == 3
    assert is_supersolvable(triangle())
    assert not modular_points(remark_sharp_arrangement())
    # the pencil center of a near-pencil is modular
    A = near_pencil(5)
    mods = modular_points(A)
    assert len(mods) >= 1 and max(m.multiplicity for m in mods) == 4


def test_thm4_examples():
    A = monomial_arrangement(3)
    v = thm4_filter(A, A.profile())
    assert v.details["verdict"] == "could-be-minimal-counterexample-side"
    B = full_monomial_arrangement(2)
    vb = thm4_filter(B, B.profile())
    assert "excluded" in vb.details["verdict"]
    C = triangle()
    vc = thm4_filter(C, C.profile())
    assert "excluded" in vc.details["verdict"]


def test_thm5_examples():
    A = remark_sharp_arrangement()
    v = thm5_bounds(A, A.profile())
    assert v.ok and v.details["chain"] == [4, 5, 5, 5] and v.details["tight"]
    T = triangle()
    vt = thm5_bounds(T, T.profile())
    assert vt.ok and vt.details["chain"] == [1, 1, 1, 1]


def test_cor20_examples():
    T = triangle()
    assert cor20_check(T, T.profile(), 3).ok
    A = remark_sharp_arrangement()
    assert cor20_check(A, A.profile(), 27).ok


# -- addition-deletion -----------------------------------------------------


def test_deletion_full_monomial_2():
    # removing a coordinate line from the m=2 full monomial arrangement:
    # r = 4 = d1 + 1, case (1), deleted arrangement free (3, 4)
    A = full_monomial_arrangement(2)
    rec = deletion_classify(A, 2)   # the line z = 0
    assert rec.case == 1 and rec.r == 4
    assert rec.deleted_profile.exponents == [3, 4]
    assert rec.freeness_iff_ok


def test_deletion_triangle():
    A = triangle()
    rec = deletion_classify(A, 0)
    assert rec.case == 2 and rec.r == 2
    assert rec.deleted_profile.exponents == [0, 1]
    assert rec.deleted_free and rec.freeness_iff_ok


def test_deletion_uses_orbit_representative():
    A = monomial_arrangement(3)
    irrational = next(i for i, l in enumerate(A.lines) if not l.is_rational())
    rec = deletion_classify(A, irrational)
    assert rec.via_orbit_representative is not None
    assert rec.case == 3 and rec.r == 4
    assert rec.deleted_profile.classification == "nearly_free"


def test_deletion_requires_free():
    A = remark_sharp_arrangement()
    with pytest.raises(ArrangementError):
        deletion_classify(A, 0)


def test_addition_cases():
    A = triangle()
    # generic line: r = 3 > d2 + 1, case (3), plus-one generated (2,2,2)
    rec = addition_classify(A, Line.from_coeffs([1, 1, 1]))
    assert rec.case == 3 and rec.r == 3
    assert rec.extended_profile.exponents == [2, 2, 2]
    assert not rec.extended_free and rec.freeness_iff_ok
    # line through one vertex: r = 2 = d2 + 1, free (1, 2)
    rec2 = addition_classify(A, Line.from_coeffs([1, 1, 0]))
    assert rec2.extended_free and rec2.r == 2
    assert rec2.extended_profile.exponents == [1, 2]
    assert rec2.freeness_iff_ok


def test_addition_from_pencil():
    # 5-line pencil is free with exponents (0, 4); one generic line gives
    # the near-pencil, r = 5 = d2' + 1
    from freecurve.parsing import parse_curve
    pencil = parse_curve("x^5-y^5").lines
    rec = addition_classify(pencil, Line.from_coeffs([1, 2, 1]))
    assert rec.extended_free and rec.r == 5
    assert rec.extended_profile.exponents == [1, 4]


def test_round_trip_restores_exponents():
    A = two_pencil_quadrilateral()
    p = A.profile()
    for i in range(A.d):
        rec = deletion_classify(A, i, profile=p)
        if rec.deleted_free:
            back = addition_classify(A.delete(i), A.lines[i])
            assert back.extended_profile.exponents == p.exponents


# -- random generators -----------------------------------------------------


def test_random_arrangement_deterministic():
    a = random_arrangement(random.Random(42), 6)
    b = random_arrangement(random.Random(42), 6)
    assert [l.coeffs for l in a.lines] == [l.coeffs for l in b.lines]
    assert a.d == 6


def test_random_free_arrangement_is_free():
    for seed in range(4):
        A = random_free_arrangement(random.Random(seed), 7)
        assert A.d == 7
        assert is_supersolvable(A)
        p = A.profile()
        assert p.is_free
        assert combinatorial_tau_mu(A) == tjurina_total(A.defining_polynomial())
