import random
from fractions import Fraction
from math import gcd

import pytest

from freecurve.cyclotomic import CyclotomicField, CycNum, cyclotomic_polynomial


def _phi(n: int) -> int:
    return sum(1 for k in range(1, n + 1) if gcd(k, n) == 1)


def test_cyclotomic_polynomial_degrees():
    for n in range(1, 13):
        assert len(cyclotomic_polynomial(n)) - 1 == _phi(n)


def test_known_cyclotomic_polynomials():
    assert cyclotomic_polynomial(1) == (Fraction(-1), Fraction(1))
    assert cyclotomic_polynomial(2) == (Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(3) == (Fraction(1), Fraction(1), Fraction(1))
    assert cyclotomic_polynomial(6) == (Fraction(1), Fraction(-1), Fraction(1))


def test_zeta_is_primitive_root():
    for n in (3, 4, 5, 6, 8):
        F = CyclotomicField(n)
        z = F.zeta()
        powers = [F.one()]
        for _ in range(n):
            powers.append(powers[-1] * z)
        assert powers[n] == F.one()
        assert all(powers[k] != F.one() for k in range(1, n))


def test_sum_of_roots_of_unity():
    for n in (3, 5, 7):
        F = CyclotomicField(n)
        total = F.zero()
        for k in range(n):
            total = total + F.zeta(k)
        assert total.is_zero()


def test_inverse():
    rng = random.Random(0)
    for n in (3, 5, 8, 12):
        F = CyclotomicField(n)
        for _ in range(10):
            a = F.element([Fraction(rng.randint(-3, 3)) for _ in range(F.degree)])
            if a.is_zero():
                continue
            assert a * a.inverse() == F.one()
            assert (1 / a) * a == F.one()
    with pytest.raises(ZeroDivisionError):
        CyclotomicField(5).zero().inverse()


def test_rational_interop():
    F = CyclotomicField(5)
    a = F.from_rational(Fraction(3, 2))
    assert a.is_rational() and a.to_fraction() == Fraction(3, 2)
    assert a == Fraction(3, 2)
    assert a + 1 == Fraction(5, 2)
    assert 2 * F.one() - F.one() == 1
    z = F.zeta()
    assert not z.is_rational()
    with pytest.raises(ValueError):
        z.to_fraction()


def test_hash_consistency():
    F1, F2 = CyclotomicField(5), CyclotomicField(5)
    assert F1 == F2
    assert hash(F1.zeta(2)) == hash(F2.zeta(2))
    assert F1.zeta(2) == F2.zeta(2)


def test_field_mismatch_rejected():
    with pytest.raises(ValueError):
        CyclotomicField(5).zeta() + CyclotomicField(7).zeta()
