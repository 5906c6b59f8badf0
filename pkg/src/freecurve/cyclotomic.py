"""Minimal cyclotomic field arithmetic.

The built-in monomial arrangements have lines like x - zeta*y with zeta a
root of unity, so their intersection lattices live over Q(zeta_n).  This
module provides just enough field arithmetic for that: elements of
Q[t]/Phi_n(t) with exact rational coordinates, supporting ring operations,
inversion, equality and hashing.  n = 1 degenerates to plain Q.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


def _poly_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    q = [Fraction(0)] * max(len(a) - db, 1)
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        c = a[-1] / lb
        shift = len(a) - 1 - db
        q[shift] = c
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return q, a


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[Fraction, ...]:
    """Coefficients of Phi_n, low degree first."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return (Fraction(-1), Fraction(1))
    # t^n - 1 divided by the product of Phi_d over proper divisors d
    num = [Fraction(0)] * (n + 1)
    num[0], num[n] = Fraction(-1), Fraction(1)
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod(num, list(cyclotomic_polynomial(d)))
            if rem:
                raise AssertionError("cyclotomic division was not exact")
    return tuple(num)


class CyclotomicField:
    """Q(zeta_n) as Q[t] mod Phi_n."""

    def __init__(self, n: int):
        self.n = n
        self.modulus = list(cyclotomic_polynomial(n))
        self.degree = len(self.modulus) - 1

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and self.n == other.n

    def __hash__(self):
        return hash(("CyclotomicField", self.n))

    def __repr__(self):
        return f"CyclotomicField({self.n})"

    def element(self, coeffs) -> "CycNum":
        c = [Fraction(x) for x in coeffs]
        c = c[:self.degree] + [Fraction(0)] * max(0, self.degree - len(c))
        if len(c) > self.degree:
            raise ValueError("too many coordinates")
        return CycNum(self, tuple(c))

    def zero(self) -> "CycNum":
        return self.element([])

    def one(self) -> "CycNum":
        return self.element([1])

    def zeta(self, power: int = 1) -> "CycNum":
        """zeta_n^power, reduced mod Phi_n."""
        power %= self.n
        raw = [Fraction(0)] * power + [Fraction(1)]
        _, rem = _poly_divmod(raw, self.modulus)
        return self.element(rem)

    def from_rational(self, q) -> "CycNum":
        return self.element([Fraction(q)])


class CycNum:
    """An element of a cyclotomic field; immutable and hashable."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: CyclotomicField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def _coerce(self, other) -> "CycNum":
        if isinstance(other, CycNum):
            if other.field != self.field:
                raise ValueError("field mismatch")
            return other
        return self.field.from_rational(other)

    def __add__(self, other):
        o = self._coerce(other)
        return CycNum(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return CycNum(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return CycNum(self.field, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        n = self.field.degree
        raw = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        raw[i + j] += a * b
        _, rem = _poly_divmod(raw, self.field.modulus)
        rem = rem + [Fraction(0)] * (n - len(rem))
        return CycNum(self.field, tuple(rem))

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        """Extended Euclid against the (irreducible) modulus."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        r0, r1 = list(self.field.modulus), [c for c in self.coeffs]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            # s = s0 - q*s1
            prod = [Fraction(0)] * (len(q) + len(s1) - 1)
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        prod[i + j] += qc * sc
            s = [Fraction(0)] * max(len(s0), len(prod))
            for i, c in enumerate(s0):
                s[i] += c
            for i, c in enumerate(prod):
                s[i] -= c
            while s and s[-1] == 0:
                s.pop()
            r0, r1, s0, s1 = r1, r, s1, s
        lead = r1[-1]
        inv = [c / lead for c in s1]
        return self.field.element(inv)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, CycNum):
            if other.field != self.field:
                return False
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        return hash((self.field.n, self.coeffs))

    def __repr__(self):
        return f"CycNum({self.field.n}, {list(self.coeffs)})"
