"""Built-in corpus of reduced plane curves with expected invariants.

Includes the classical monomial and full monomial arrangement families, the
sharp nearly-free 7-line arrangement, near-pencils, smooth Fermat curves
and a few singular non-arrangement fixtures.  Expected values marked in
tests as derived were frozen from independent oracle runs (combinatorial
tau on arrangements, brute-force syzygy dimension tables).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .arrangement import Arrangement, Line
from .cyclotomic import CyclotomicField
from .ring import HomPoly


def _poly(text_terms: dict) -> HomPoly:
    return HomPoly.from_terms({m: Fraction(c) for m, c in text_terms.items()})


def _binomial_poly(u: int, v: int, m: int) -> HomPoly:
    """u^m - v^m as a HomPoly for variable indices u, v."""
    mu, mv = [0, 0, 0], [0, 0, 0]
    mu[u], mv[v] = m, m
    return HomPoly(m, {tuple(mu): Fraction(1), tuple(mv): Fraction(-1)})


def _pair_lines(u: int, v: int, m: int, fld: CyclotomicField) -> list[Line]:
    """The m lines of u^m - v^m = 0: u - zeta^k v."""
    out = []
    for k in range(m):
        c = [fld.zero(), fld.zero(), fld.zero()]
        c[u] = fld.one()
        c[v] = -fld.zeta(k)
        out.append(Line.from_coeffs(c))
    return out


def monomial_arrangement(m: int) -> Arrangement:
    """A(m,m,3): (x^m - y^m)(y^m - z^m)(x^m - z^m) = 0, 3m lines."""
    if m < 2:
        raise ValueError("need m >= 2")
    fld = CyclotomicField(m)
    lines = (_pair_lines(0, 1, m, fld) + _pair_lines(1, 2, m, fld)
             + _pair_lines(0, 2, m, fld))
    poly = (_binomial_poly(0, 1, m) * _binomial_poly(1, 2, m)
            * _binomial_poly(0, 2, m))
    # the symmetry group (coordinate permutations and scalings by roots of
    # unity) is transitive on the lines; x - y is a rational representative
    reps = {i: 0 for i in range(len(lines)) if not lines[i].is_rational()}
    return Arrangement(lines, poly=poly, orbit_reps=reps)


def full_monomial_arrangement(m: int) -> Arrangement:
    """A(m,1,3): xyz (x^m - y^m)(y^m - z^m)(x^m - z^m) = 0, 3m + 3 lines."""
    if m < 2:
        raise ValueError("need m >= 2")
    fld = CyclotomicField(m)
    coord = [Line.from_coeffs([1, 0, 0]), Line.from_coeffs([0, 1, 0]),
             Line.from_coeffs([0, 0, 1])]
    lines = coord + (_pair_lines(0, 1, m, fld) + _pair_lines(1, 2, m, fld)
                     + _pair_lines(0, 2, m, fld))
    xyz = HomPoly(3, {(1, 1, 1): Fraction(1)})
    poly = (xyz * _binomial_poly(0, 1, m) * _binomial_poly(1, 2, m)
            * _binomial_poly(0, 2, m))
    reps = {i: 3 for i in range(len(lines)) if not lines[i].is_rational()}
    return Arrangement(lines, poly=poly, orbit_reps=reps)


def remark_sharp_arrangement() -> Arrangement:
    """Five lines through a point plus two generic lines:
    (x^5 - y^5)(x + 2y + z)(x + 3y - 5z) = 0."""
    fld = CyclotomicField(5)
    lines = _pair_lines(0, 1, 5, fld) + [
        Line.from_coeffs([1, 2, 1]),
        Line.from_coeffs([1, 3, -5]),
    ]
    poly = (_binomial_poly(0, 1, 5)
            * HomPoly(1, {(1, 0, 0): Fraction(1), (0, 1, 0): Fraction(2),
                          (0, 0, 1): Fraction(1)})
            * HomPoly(1, {(1, 0, 0): Fraction(1), (0, 1, 0): Fraction(3),
                          (0, 0, 1): Fraction(-5)}))
    reps = {i: 0 for i in range(5) if not lines[i].is_rational()}
    return Arrangement(lines, poly=poly, orbit_reps=reps)


def near_pencil(d: int) -> Arrangement:
    """d-1 concurrent lines plus one generic line: (x^(d-1) - y^(d-1)) z = 0."""
    if d < 3:
        raise ValueError("need d >= 3")
    n = d - 1
    fld = CyclotomicField(n)
    lines = _pair_lines(0, 1, n, fld) + [Line.from_coeffs([0, 0, 1])]
    poly = _binomial_poly(0, 1, n) * HomPoly.variable(2)
    reps = {i: 0 for i in range(n) if not lines[i].is_rational()}
    return Arrangement(lines, poly=poly, orbit_reps=reps)


def triangle() -> Arrangement:
    return Arrangement.from_coeff_rows([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def two_pencil_quadrilateral() -> Arrangement:
    """x y z (x + y) = 0: supersolvable, free with exponents (1, 2)."""
    return Arrangement.from_coeff_rows(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0]])


def generic_quadrilateral() -> Arrangement:
    """x y z (x + y + z) = 0: four lines in general position, not free."""
    return Arrangement.from_coeff_rows(
        [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])


@dataclass
class CorpusEntry:
    name: str
    text: str                       # expression form of the defining polynomial
    expected: dict                  # exponents, classification, tau, e, ...
    builder: Callable[[], Arrangement] | None = None
    mu_mode: str = "rational_points"
    notes: str = ""

    @property
    def is_arrangement(self) -> bool:
        return self.builder is not None

    def arrangement(self) -> Arrangement | None:
        return self.builder() if self.builder else None


def _free_tau(d: int, d1: int, d2: int) -> int:
    return (d - 1) ** 2 - d1 * d2


CORPUS: list[CorpusEntry] = [
    CorpusEntry(
        "triangle", "x*y*z",
        {"exponents": [1, 1], "classification": "free", "tau": 3, "e": 3},
        builder=triangle, mu_mode="arrangement",
        notes="coordinate triangle; three nodes"),
    CorpusEntry(
        "fermat-3", "x^3+y^3+z^3",
        {"exponents": [2, 2, 2], "classification": "m_syzygy", "tau": 0, "e": 1},
        notes="smooth cubic; 3-syzygy with d3 = d-1, tau = 0"),
    CorpusEntry(
        "fermat-4", "x^4+y^4+z^4",
        {"exponents": [3, 3, 3], "classification": "m_syzygy", "tau": 0, "e": 1},
        notes="smooth quartic; 3-syzygy with d3 = d-1, tau = 0"),
    CorpusEntry(
        "monomial-3", "(x^3-y^3)(y^3-z^3)(x^3-z^3)",
        {"exponents": [4, 4], "classification": "free", "tau": _free_tau(9, 4, 4),
         "e": 9, "r_per_line": 4},
        builder=lambda: monomial_arrangement(3), mu_mode="arrangement",
        notes="A(3,3,3): free (m+1, 2m-2), r_L = m+1 = d1"),
    CorpusEntry(
        "monomial-4", "(x^4-y^4)(y^4-z^4)(x^4-z^4)",
        {"exponents": [5, 6], "classification": "free", "tau": _free_tau(12, 5, 6),
         "e": 12, "r_per_line": 5},
        builder=lambda: monomial_arrangement(4), mu_mode="arrangement",
        notes="A(4,4,3)"),
    CorpusEntry(
        "monomial-5", "(x^5-y^5)(y^5-z^5)(x^5-z^5)",
        {"exponents": [6, 8], "classification": "free", "tau": _free_tau(15, 6, 8),
         "e": 15, "r_per_line": 6},
        builder=lambda: monomial_arrangement(5), mu_mode="arrangement",
        notes="A(5,5,3)"),
    CorpusEntry(
        "full-monomial-2", "x*y*z*(x^2-y^2)(y^2-z^2)(x^2-z^2)",
        {"exponents": [3, 5], "classification": "free", "tau": _free_tau(9, 3, 5),
         "e": 9, "r_per_line": 4},
        builder=lambda: full_monomial_arrangement(2), mu_mode="arrangement",
        notes="A(2,1,3): free (m+1, 2m+1), r_L = m+2 > d1"),
    CorpusEntry(
        "full-monomial-3", "x*y*z*(x^3-y^3)(y^3-z^3)(x^3-z^3)",
        {"exponents": [4, 7], "classification": "free", "tau": _free_tau(12, 4, 7),
         "e": 12, "r_per_line": 5},
        builder=lambda: full_monomial_arrangement(3), mu_mode="arrangement",
        notes="A(3,1,3)"),
    CorpusEntry(
        "full-monomial-4", "x*y*z*(x^4-y^4)(y^4-z^4)(x^4-z^4)",
        {"exponents": [5, 9], "classification": "free", "tau": _free_tau(15, 5, 9),
         "e": 15, "r_per_line": 6},
        builder=lambda: full_monomial_arrangement(4), mu_mode="arrangement",
        notes="A(4,1,3)"),
    CorpusEntry(
        "remark-sharp", "(x^5-y^5)(x+2y+z)(x+3y-5z)",
        {"exponents": [2, 5, 5], "classification": "nearly_free", "tau": 27,
         "e": 7, "m_A": 5, "n_A": 2, "betti": [1, 6, 9]},
        builder=remark_sharp_arrangement, mu_mode="arrangement",
        notes="sharp instance of the multiplicity bounds; nearly free"),
    CorpusEntry(
        "near-pencil-5", "(x^4-y^4)z",
        {"exponents": [1, 3], "classification": "free", "tau": 13, "e": 5},
        builder=lambda: near_pencil(5), mu_mode="arrangement",
        notes="near-pencil of 5 lines"),
    CorpusEntry(
        "near-pencil-6", "(x^5-y^5)z",
        {"exponents": [1, 4], "classification": "free", "tau": 21, "e": 6},
        builder=lambda: near_pencil(6), mu_mode="arrangement",
        notes="near-pencil of 6 lines"),
    CorpusEntry(
        "two-pencil-4", "x*y*z*(x+y)",
        {"exponents": [1, 2], "classification": "free", "tau": 7, "e": 4},
        builder=two_pencil_quadrilateral, mu_mode="arrangement",
        notes="supersolvable quadrilateral"),
    CorpusEntry(
        "generic-4", "x*y*z*(x+y+z)",
        {"exponents": [2, 2, 2], "classification": "nearly_free",
         "tau": 6, "e": 4},
        builder=generic_quadrilateral, mu_mode="arrangement",
        notes="four lines in general position; not free"),
    CorpusEntry(
        "cusp-quartic", "y^3*z-x^4",
        {"exponents": [1, 3, 3], "classification": "nearly_free", "tau": 6,
         "mu": 6, "e": 1},
        notes="one E6-type cusp at [0:1:0]; quasi-homogeneous"),
    CorpusEntry(
        "join-quintic", "x^4*y+z^5",
        {"exponents": [1, 4, 4], "classification": "nearly_free", "tau": 12,
         "mu": 12, "e": 1},
        notes="join-type 3-syzygy fixture with d2 = d3 = d-1; tau attains "
              "the product bound"),
    CorpusEntry(
        "conic-secant", "(x*z-y^2)*y",
        {"exponents": [1, 2, 2], "classification": "nearly_free", "tau": 2,
         "mu": 2, "e": 2},
        notes="smooth conic plus a secant line: two nodes"),
    CorpusEntry(
        "conic-tangent", "(x*z-y^2)*x",
        {"exponents": [1, 1], "classification": "free", "tau": 3, "mu": 3,
         "e": 2},
        notes="smooth conic plus a tangent line: one tacnode"),
]


def by_name(name: str) -> CorpusEntry:
    for entry in CORPUS:
        if entry.name == name:
            return entry
    raise KeyError(name)


def free_arrangements() -> list[CorpusEntry]:
    return [c for c in CORPUS
            if c.is_arrangement and c.expected["classification"] == "free"]
