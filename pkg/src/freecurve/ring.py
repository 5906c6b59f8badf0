"""Exact arithmetic in the graded polynomial ring Q[x,y,z].

Monomials are exponent triples ``(a, b, c)`` meaning ``x^a y^b z^c``.  All
coefficients are :class:`fractions.Fraction`, so every operation here is
exact.  The monomial order is graded lexicographic with x > y > z, fixed
globally so that matrices and generator choices are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

Mono = tuple[int, int, int]

VARIABLES = ("x", "y", "z")


class InexactDivisionError(ArithmeticError):
    """Raised when a polynomial division leaves a nonzero remainder."""


def mono_degree(m: Mono) -> int:
    return m[0] + m[1] + m[2]


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    return (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])


def mono_divides(m1: Mono, m2: Mono) -> bool:
    """True if m1 | m2 componentwise."""
    return m1[0] <= m2[0] and m1[1] <= m2[1] and m1[2] <= m2[2]


def monomial_basis(k: int) -> list[Mono]:
    """All monomials of degree k, in decreasing graded-lex order (x > y > z).

    The first entry is x^k, the last z^k; length is C(k+2, 2).
    """
    if k < 0:
        raise ValueError(f"degree must be non-negative, got {k}")
    basis = [(a, b, k - a - b) for a in range(k, -1, -1) for b in range(k - a, -1, -1)]
    basis.sort(reverse=True)
    return basis


class HomPoly:
    """A homogeneous polynomial of a declared degree with Fraction coefficients.

    The zero polynomial of each degree is represented by an empty term map.
    Instances are treated as immutable; all operations return new objects.
    """

    __slots__ = ("degree", "terms")

    def __init__(self, degree: int, terms: Mapping[Mono, Fraction]):
        if degree < 0:
            raise ValueError(f"negative degree {degree}")
        clean: dict[Mono, Fraction] = {}
        for m, c in terms.items():
            c = Fraction(c)
            if c == 0:
                continue
            if mono_degree(m) != degree:
                raise ValueError(f"monomial {m} has degree {mono_degree(m)}, expected {degree}")
            clean[m] = c
        self.degree = degree
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree, {})

    @classmethod
    def variable(cls, v: int) -> "HomPoly":
        m = [0, 0, 0]
        m[v] = 1
        return cls(1, {tuple(m): Fraction(1)})

    @classmethod
    def monomial(cls, m: Mono, coeff=1) -> "HomPoly":
        return cls(mono_degree(m), {m: Fraction(coeff)})

    @classmethod
    def constant(cls, c) -> "HomPoly":
        return cls(0, {(0, 0, 0): Fraction(c)})

    @classmethod
    def from_terms(cls, terms: Mapping[Mono, Fraction]) -> "HomPoly":
        """Build from a term map, inferring the degree; rejects mixed degrees."""
        degs = {mono_degree(m) for m, c in terms.items() if c != 0}
        if len(degs) > 1:
            raise ValueError(f"terms are not homogeneous: degrees {sorted(degs)}")
        return cls(degs.pop() if degs else 0, terms)

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other: "HomPoly") -> "HomPoly":
        deg = self._common_degree(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return HomPoly(deg, terms)

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        deg = self._common_degree(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) - c
        return HomPoly(deg, terms)

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.degree, {m: -c for m, c in self.terms.items()})

    def __mul__(self, other: "HomPoly") -> "HomPoly":
        terms: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, Fraction(0)) + c1 * c2
        return HomPoly(self.degree + other.degree, terms)

    def scale(self, c) -> "HomPoly":
        c = Fraction(c)
        return HomPoly(self.degree, {m: c * co for m, co in self.terms.items()})

    def _common_degree(self, other: "HomPoly") -> int:
        if self.is_zero():
            return other.degree
        if other.is_zero():
            return self.degree
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return self.degree

    # -- structure ---------------------------------------------------------

    def lead(self) -> tuple[Mono, Fraction]:
        """Leading term in the global graded-lex order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms)
        return m, self.terms[m]

    def coeff_vector(self, basis: list[Mono] | None = None) -> list[Fraction]:
        if basis is None:
            basis = monomial_basis(self.degree)
        zero = Fraction(0)
        return [self.terms.get(m, zero) for m in basis]

    def content_normalized(self) -> "HomPoly":
        """Scale to integer coefficients with content 1 and positive lead."""
        if not self.terms:
            return self
        denom_lcm = 1
        for c in self.terms.values():
            denom_lcm = denom_lcm * c.denominator // gcd(denom_lcm, c.denominator)
        nums = [c.numerator * (denom_lcm // c.denominator) for c in self.terms.values()]
        g = 0
        for n in nums:
            g = gcd(g, n)
        scale = Fraction(denom_lcm, g)
        if self.lead()[1] < 0:
            scale = -scale
        return self.scale(scale)

    def __repr__(self) -> str:
        return f"HomPoly({self.degree}, {format_poly(self)!r})"


def derive(f: HomPoly, v: int) -> HomPoly:
    """Partial derivative with respect to variable index v (0=x, 1=y, 2=z)."""
    if f.degree < 1:
        raise ValueError("cannot differentiate a degree-0 polynomial")
    terms: dict[Mono, Fraction] = {}
    for m, c in f.terms.items():
        if m[v] == 0:
            continue
        mm = list(m)
        mm[v] -= 1
        terms[tuple(mm)] = c * m[v]
    return HomPoly(f.degree - 1, terms)


def gradient(f: HomPoly) -> tuple[HomPoly, HomPoly, HomPoly]:
    return derive(f, 0), derive(f, 1), derive(f, 2)


def exact_divide(f: HomPoly, g: HomPoly) -> HomPoly:
    """Return q with f = q*g, or raise InexactDivisionError.

    Division of homogeneous polynomials by leading-term reduction in the
    graded-lex order; terminates because the leading monomial strictly drops.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    qdeg = f.degree - g.degree
    if f.is_zero():
        return HomPoly.zero(max(qdeg, 0))
    if qdeg < 0:
        raise InexactDivisionError(f"degree {f.degree} not divisible by degree {g.degree}")
    gm, gc = g.lead()
    q: dict[Mono, Fraction] = {}
    r = f
    while not r.is_zero():
        rm, rc = r.lead()
        if not mono_divides(gm, rm):
            raise InexactDivisionError("nonzero remainder")
        m = (rm[0] - gm[0], rm[1] - gm[1], rm[2] - gm[2])
        c = rc / gc
        q[m] = c
        r = r - g * HomPoly.monomial(m, c)
    return HomPoly(qdeg, q)


def euler_check(f: HomPoly) -> bool:
    """Exact Euler identity x*f_x + y*f_y + z*f_z = deg(f) * f."""
    fx, fy, fz = gradient(f)
    lhs = HomPoly.variable(0) * fx + HomPoly.variable(1) * fy + HomPoly.variable(2) * fz
    return lhs == f.scale(f.degree)


# -- univariate helpers (dense coefficient lists, low degree first) --------


def _poly_trim(p: list[Fraction]) -> list[Fraction]:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_deriv(p: list[Fraction]) -> list[Fraction]:
    return [p[i] * i for i in range(1, len(p))]


def _poly_mod(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and a:
        c = a[-1] / lb
        shift = len(a) - 1 - db
        for i in range(len(b)):
            a[shift + i] -= c * b[i]
        _poly_trim(a)
        if not a:
            break
    return a


def poly_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Monic gcd of univariate polynomials over Q (dense, low degree first)."""
    a, b = _poly_trim(list(a)), _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b)
    if a:
        lead = a[-1]
        a = [c / lead for c in a]
    return a


def restrict_to_line(f: HomPoly, p: tuple[int, int, int], q: tuple[int, int, int]) -> list[Fraction]:
    """Coefficients of the binary form f(s*p + t*q): entry i is the s^i t^(d-i) coefficient."""
    d = f.degree
    coeffs = [Fraction(0)] * (d + 1)
    # binary forms in (s, t) as dense lists indexed by the s-exponent
    lin = []
    for j in range(3):
        lin.append([Fraction(q[j]), Fraction(p[j])])
    for m, c in f.terms.items():
        term = [Fraction(1)]
        for j in range(3):
            for _ in range(m[j]):
                nxt = [Fraction(0)] * (len(term) + 1)
                for i, t in enumerate(term):
                    nxt[i] += t * lin[j][0]
                    nxt[i + 1] += t * lin[j][1]
                term = nxt
        for i, t in enumerate(term):
            coeffs[i] += c * t
    return coeffs


def _binary_form_squarefree(coeffs: list[Fraction]) -> bool:
    d = len(coeffs) - 1
    p = _poly_trim(list(coeffs))
    if not p:
        raise ValueError("zero form")
    t_mult = d - (len(p) - 1)
    if t_mult > 1:
        return False
    if len(p) == 1:
        return True
    return len(poly_gcd(p, _poly_deriv(p))) <= 1


def distinct_root_count(coeffs: list[Fraction]) -> int:
    """Number of distinct projective roots of a binary form over C."""
    d = len(coeffs) - 1
    p = _poly_trim(list(coeffs))
    if not p:
        raise ValueError("zero form")
    t_mult = d - (len(p) - 1)
    n = 1 if t_mult > 0 else 0
    if len(p) > 1:
        g = poly_gcd(p, _poly_deriv(p))
        n += (len(p) - 1) - (len(g) - 1)
    return n


def squarefree_check(f: HomPoly, rng: random.Random | None = None, trials: int = 5,
                     strict: bool = False) -> bool:
    """True iff f has no repeated irreducible factor.

    Monte Carlo: restrict f to random rational lines and test univariate
    squarefreeness.  A repeated factor of f forces a repeated root on every
    line, so one squarefree restriction is a certificate.  A false negative
    needs all sampled lines to hit the (finite) singular locus.  With
    ``strict`` the answer is recomputed deterministically via gcd with the
    partial derivatives.
    """
    if f.is_zero():
        raise ValueError("squarefree_check needs a nonzero polynomial")
    if f.degree == 0:
        raise ValueError("squarefree_check needs degree >= 1")
    if strict:
        return _squarefree_strict(f)
    rng = rng or random.Random(0)
    done = 0
    attempts = 0
    while done < trials:
        attempts += 1
        if attempts > 50 * trials:
            # pathologically many discarded lines; fall back to the certificate
            return _squarefree_strict(f)
        p = tuple(rng.randint(-1000, 1000) for _ in range(3))
        q = tuple(rng.randint(-1000, 1000) for _ in range(3))
        coeffs = restrict_to_line(f, p, q)
        if all(c == 0 for c in coeffs):
            continue  # degenerate line (inside the curve or p ~ q)
        if _binary_form_squarefree(coeffs):
            return True
        done += 1
    return False


def _squarefree_strict(f: HomPoly) -> bool:
    import sympy

    xs = sympy.symbols("x y z")
    expr = sympy.Add(*[
        sympy.Rational(c.numerator, c.denominator) * xs[0] ** m[0] * xs[1] ** m[1] * xs[2] ** m[2]
        for m, c in f.terms.items()
    ])
    g = sympy.gcd(sympy.gcd(sympy.diff(expr, xs[0]), sympy.diff(expr, xs[1])),
                  sympy.gcd(expr, sympy.diff(expr, xs[2])))
    return sympy.Poly(g, *xs).total_degree() == 0


def format_poly(f: HomPoly) -> str:
    """Human-readable rendering in the global monomial order."""
    if f.is_zero():
        return "0"
    parts = []
    for m in sorted(f.terms, reverse=True):
        c = f.terms[m]
        factors = [f"{VARIABLES[v]}^{m[v]}" if m[v] > 1 else VARIABLES[v]
                   for v in range(3) if m[v] > 0]
        body = "*".join(factors)
        if not factors:
            body = str(abs(c))
        elif abs(c) != 1:
            body = f"{abs(c)}*{body}"
        parts.append(("- " if c < 0 else "+ ") + body)
    out = " ".join(parts)
    return out[2:] if out.startswith("+ ") else "-" + out[2:]
