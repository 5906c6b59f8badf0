"""Numerical invariants of a reduced plane curve and the theorem verdicts
that involve only the curve (not its line-arrangement combinatorics).

Covers: Hilbert function of the Milnor algebra, total Tjurina number via
tail stabilization, total Milnor number via the critical algebra of a
generic affine chart, the complement Betti polynomial, and the checks for
the tau characterization, its bounds, the Betti-product difference, and the
Euler-number corollaries.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from . import linalg
from .linalg import RatMatrix
from .ring import (HomPoly, gradient, monomial_basis, poly_gcd, _poly_deriv,
                   _poly_trim, restrict_to_line)
from .syzygy import ExponentProfile, FREE


class StabilizationError(Exception):
    pass


class ChartError(Exception):
    pass


class IdentityViolation(Exception):
    """An internal inconsistency among tau, mu, e and the exponents."""


# ---------------------------------------------------------------------------
# Milnor algebra Hilbert function and the Tjurina number


def jacobian_piece_rank(f: HomPoly, s: int) -> int:
    """Dimension of the degree-s piece of the Jacobian ideal."""
    d = f.degree
    k = s - (d - 1)
    if k < 0:
        return 0
    parts = gradient(f)
    bk = monomial_basis(k)
    btop = monomial_basis(s)
    idx = {m: i for i, m in enumerate(btop)}
    dok: dict[int, dict[int, Fraction]] = {}
    col = 0
    for part in parts:
        for m in bk:
            for mm, co in part.terms.items():
                r = idx[(m[0] + mm[0], m[1] + mm[1], m[2] + mm[2])]
                row = dok.setdefault(r, {})
                row[col] = row.get(col, Fraction(0)) + co
            col += 1
    return linalg.rank(RatMatrix.from_dok(dok, len(btop), 3 * len(bk)))


def hilbert_milnor(f: HomPoly, k: int) -> int:
    """dim of the degree-k piece of S / (f_x, f_y, f_z); 0 for k < 0."""
    if k < 0:
        return 0
    return math.comb(k + 2, 2) - jacobian_piece_rank(f, k)


def tjurina_total(f: HomPoly) -> int:
    """Total Tjurina number as the stabilized tail of the Milnor algebra.

    Probes the last two degrees of the window [3d-6, 3d-3]; on disagreement
    the window is pushed out by d once before failing loudly.
    """
    d = f.degree
    for base in (3 * d - 3, 4 * d - 3):
        t1 = hilbert_milnor(f, base - 1)
        t2 = hilbert_milnor(f, base)
        if t1 == t2:
            return t2
    raise StabilizationError(f"Milnor algebra tail did not stabilize by degree {4 * d - 3}")


# ---------------------------------------------------------------------------
# Total Milnor number via the critical algebra of an affine chart

BPoly = dict[tuple[int, int], Fraction]  # bivariate, exponents -> coefficient


def _bp_mul(p: BPoly, q: BPoly) -> BPoly:
    out: BPoly = {}
    for (i1, j1), c1 in p.items():
        for (i2, j2), c2 in q.items():
            k = (i1 + i2, j1 + j2)
            out[k] = out.get(k, Fraction(0)) + c1 * c2
    return {k: c for k, c in out.items() if c}


def _bp_diff(p: BPoly, var: int) -> BPoly:
    out: BPoly = {}
    for (i, j), c in p.items():
        e = (i, j)[var]
        if e:
            k = (i - 1, j) if var == 0 else (i, j - 1)
            out[k] = c * e
    return out


def _affine_restrict(f: HomPoly, T: list[list[int]]) -> BPoly:
    """f(T . (u, v, 1)) as a bivariate polynomial in (u, v)."""
    lin = []
    for row in T:
        lin.append({(1, 0): Fraction(row[0]), (0, 1): Fraction(row[1]),
                    (0, 0): Fraction(row[2])})
        lin[-1] = {k: c for k, c in lin[-1].items() if c}
    out: BPoly = {}
    for m, c in f.terms.items():
        term: BPoly = {(0, 0): Fraction(1)}
        for var in range(3):
            for _ in range(m[var]):
                term = _bp_mul(term, lin[var])
        for k, t in term.items():
            out[k] = out.get(k, Fraction(0)) + c * t
    return {k: c for k, c in out.items() if c}


def _binary_gcd_degree(forms: list[list[Fraction]]) -> int:
    """Degree of the gcd of binary forms given as s-coefficient lists."""
    t_mult = None
    polys = []
    for coeffs in forms:
        p = _poly_trim(list(coeffs))
        if not p:
            continue
        d = len(coeffs) - 1
        tm = d - (len(p) - 1)
        t_mult = tm if t_mult is None else min(t_mult, tm)
        polys.append(p)
    if not polys:
        raise ValueError("all forms vanish")
    g = polys[0]
    for p in polys[1:]:
        g = poly_gcd(g, p)
        if len(g) == 1 and t_mult == 0:
            return 0
    return (len(g) - 1) + (t_mult or 0)


def _chart_is_good(f: HomPoly, T: list[list[int]]) -> bool:
    # determinant of the coordinate change
    det = (T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1])
           - T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0])
           + T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]))
    if det == 0:
        return False
    # the line at infinity of the chart passes through the first two columns
    p = (T[0][0], T[1][0], T[2][0])
    q = (T[0][1], T[1][1], T[2][1])
    fx, fy, fz = gradient(f)
    rx = restrict_to_line(fx, p, q)
    ry = restrict_to_line(fy, p, q)
    rz = restrict_to_line(fz, p, q)
    # no singular point of C on the line at infinity
    if _binary_gcd_degree([rx, ry, rz]) > 0:
        return False
    # no zero at infinity for the affine critical system: the top-degree
    # parts of g_u, g_v are the corresponding column combinations of the
    # restricted gradient, and they must be coprime binary forms
    n = len(rx)
    top_u = [T[0][0] * rx[i] + T[1][0] * ry[i] + T[2][0] * rz[i] for i in range(n)]
    top_v = [T[0][1] * rx[i] + T[1][1] * ry[i] + T[2][1] * rz[i] for i in range(n)]
    if all(c == 0 for c in top_u) or all(c == 0 for c in top_v):
        return False
    return _binary_gcd_degree([top_u, top_v]) == 0


def _critical_algebra(g: BPoly, d: int):
    """Monomial basis and normal-form data for Q[u,v]/(g_u, g_v).

    Requires the critical system to have no zeros at infinity, so that the
    quotient has dimension exactly (d-1)^2 and truncated linear algebra at
    degree 2d-3 captures it.
    """
    gu, gv = _bp_diff(g, 0), _bp_diff(g, 1)
    n_big = 3 * d - 3
    cols = [(i, j) for t in range(n_big, -1, -1) for i in range(t, -1, -1)
            for j in [t - i]]
    idx = {m: i for i, m in enumerate(cols)}
    dok: dict[int, dict[int, Fraction]] = {}
    r = 0
    mult_bound = n_big - (d - 1)
    for gen in (gu, gv):
        for t in range(mult_bound + 1):
            for i in range(t + 1):
                row: dict[int, Fraction] = {}
                for (a, b), c in gen.items():
                    key = idx[(a + i, b + t - i)]
                    row[key] = row.get(key, Fraction(0)) + c
                if row:
                    dok[r] = row
                    r += 1
    M = RatMatrix.from_dok(dok, r, len(cols))
    R, rnk = linalg.rref(M)
    pivots = set()
    rows = R.entries()
    piv_list = []
    for row in rows:
        for j, c in enumerate(row):
            if c != 0:
                pivots.add(j)
                piv_list.append(j)
                break
    std = [m for j, m in enumerate(cols) if j not in pivots]
    dim = len(std)
    if dim != (d - 1) ** 2:
        raise ChartError(f"critical algebra has dimension {dim}, expected {(d - 1) ** 2}")
    if any(i + j > 2 * d - 3 for i, j in std):
        raise ChartError("standard monomial of unexpectedly high degree")
    return cols, idx, rows, piv_list, std


def _normal_form(vec: list[Fraction], rref_rows: list[list[Fraction]],
                 piv_list: list[int]) -> list[Fraction]:
    v = list(vec)
    for row, p in zip(rref_rows, piv_list):
        c = v[p]
        if c:
            for j, rj in enumerate(row):
                if rj:
                    v[j] -= c * rj
    return v


@dataclass(frozen=True)
class MuResult:
    value: int
    mode: str            # "arrangement", "rational_points" or "assume_quasihomogeneous"
    assumed: bool = False


def mu_total(f: HomPoly, mode: str = "rational_points",
             point_multiplicities: list[int] | None = None,
             tau: int | None = None,
             rng: random.Random | None = None) -> MuResult:
    """Total Milnor number of the curve f = 0.

    arrangement: sum of (m_p - 1)^2 over the supplied point multiplicities.
    rational_points: exact computation in a generic affine chart; the total
        is the dimension of the generalized 0-eigenspace of multiplication
        by the affine equation on the critical algebra (so irrational
        singular points are in fact handled too).
    assume_quasihomogeneous: returns tau with a marker.
    """
    if mode == "arrangement":
        if point_multiplicities is None:
            raise ValueError("arrangement mode needs the point multiplicities")
        return MuResult(sum((m - 1) ** 2 for m in point_multiplicities), "arrangement")
    if mode == "assume_quasihomogeneous":
        if tau is None:
            raise ValueError("assume_quasihomogeneous mode needs tau")
        return MuResult(tau, "assume_quasihomogeneous", assumed=True)
    if mode != "rational_points":
        raise ValueError(f"unknown mu mode {mode!r}")

    rng = rng or random.Random(20240901)
    d = f.degree
    T = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    tries = 0
    while not _chart_is_good(f, T):
        tries += 1
        if tries > 40:
            raise ChartError("no good affine chart found")
        T = [[rng.randint(-3, 3) for _ in range(3)] for _ in range(3)]
    g = _affine_restrict(f, T)
    cols, idx, rref_rows, piv_list, std = _critical_algebra(g, d)
    dim = len(std)
    std_idx = {m: i for i, m in enumerate(std)}
    # multiplication-by-g matrix on the quotient
    mat: dict[int, dict[int, object]] = {}
    for j, b in enumerate(std):
        prod: dict[int, Fraction] = {}
        for (a, bb), c in g.items():
            prod_key = idx[(a + b[0], bb + b[1])]
            prod[prod_key] = prod.get(prod_key, Fraction(0)) + c
        vec = [Fraction(0)] * len(cols)
        for k, c in prod.items():
            vec[k] = c
        nf = _normal_form(vec, rref_rows, piv_list)
        for k, c in enumerate(nf):
            if c:
                mat.setdefault(std_idx[cols[k]], {})[j] = c
    Mg = RatMatrix.from_dok(mat, dim, dim)._dm
    # algebraic multiplicity of the eigenvalue 0: iterate kernels to saturation
    mu = 0
    P = Mg
    prev = 0
    while True:
        kdim = dim - P.rank()
        if kdim == prev:
            break
        prev = kdim
        if kdim == dim:
            break
        P = P.matmul(Mg)
    return MuResult(prev, "rational_points")


# ---------------------------------------------------------------------------
# Betti polynomial and theorem verdicts


def betti_polynomial(d: int, e: int, mu: int) -> tuple[int, int, int]:
    """(b0, b1, b2) of the complement of the curve in the projective plane."""
    if e < 1:
        raise ValueError("component count must be >= 1")
    return (1, e - 1, (d - 1) ** 2 - mu - (d - e))


@dataclass
class Verdict:
    name: str
    applicable: bool
    ok: bool
    details: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def not_applicable(cls, name: str, reason: str) -> "Verdict":
        return cls(name, False, True, {"reason": reason})


def alpha_invariant(d: int, d1: int, d2: int, tau: int) -> int:
    return tau - ((d - 1) ** 2 - d1 * d2)


def thm3_coefficients(d: int, e: int, d1: int, d2: int, tau: int, mu: int,
                      classification: str, is_line_arrangement: bool) -> Verdict:
    """The coefficients (a, b) of (1+d1 t)(1+d2 t) - B(M(C))(t)."""
    alpha = alpha_invariant(d, d1, d2, tau)
    a = d1 + d2 - e + 1
    b = mu - tau + d - e + alpha
    betti = betti_polynomial(d, e, mu)
    # coefficientwise identity check
    prod = (1, d1 + d2, d1 * d2)
    diff = tuple(p - q for p, q in zip(prod, betti))
    ok = diff == (0, a, b) and a >= 0 and b >= 0 and alpha >= 0
    free_line_arrangement = (a == 0 or b == 0)
    if free_line_arrangement:
        ok = ok and a == 0 and b == 0 and classification == FREE and is_line_arrangement
    if classification == FREE and is_line_arrangement:
        ok = ok and a == 0 and b == 0
    if not ok:
        raise IdentityViolation(
            f"Betti-product identity violated: a={a}, b={b}, alpha={alpha}, "
            f"diff={diff}, e={e}")
    return Verdict("thm3", True, ok, {
        "alpha": alpha, "a": a, "b": b, "betti": list(betti),
        "free_line_arrangement": free_line_arrangement,
    })


def thm2_verdict(profile: ExponentProfile, tau: int) -> Verdict:
    """tau = (d-1)^2 - d1 d2 holds exactly for free curves and for 3-syzygy
    curves with d3 = d-1; otherwise the inequality is strict."""
    d = profile.degree
    d1, d2 = profile.d1, profile.d2
    rhs = (d - 1) ** 2 - d1 * d2
    details = {"tau": tau, "rhs": rhs, "m": profile.m}
    if profile.m == 2:
        ok = tau == rhs
        details["case"] = "free (exact product formula)"
    else:
        characterized = profile.m == 3 and profile.d3 == d - 1
        if characterized:
            ok = tau == rhs
            details["case"] = "3-syzygy with d3 = d-1 (equality)"
        else:
            ok = tau > rhs
            details["case"] = "strict inequality"
    return Verdict("thm2", True, ok, details)


def cor2_bounds(profile: ExponentProfile, tau: int) -> Verdict:
    d = profile.degree
    d1, d2 = profile.d1, profile.d2
    lower = (d - 1) ** 2 - d1 * d2
    upper = (d - 1) ** 2 - d1 * (d - 1 - d1)
    ok = lower <= tau <= upper
    # refinement: tau = (d-1)(d-1-d1) exactly for 3-syzygy curves with
    # d2 = d3 = d-1
    weak_lower = (d - 1) * (d - 1 - d1)
    tight = profile.m == 3 and profile.d2 == d - 1 and profile.d3 == d - 1
    ok = ok and ((tau == weak_lower) == tight)
    return Verdict("cor2", True, ok, {
        "lower": lower, "tau": tau, "upper": upper,
        "weak_lower": weak_lower, "weak_lower_attained": tight,
    })


def cor3_euler(profile: ExponentProfile, e: int, tau: int, mu: MuResult) -> Verdict:
    if profile.m != 2:
        return Verdict.not_applicable("cor3", "curve is not free")
    if mu.value != tau:
        return Verdict.not_applicable("cor3", "mu != tau (non-quasi-homogeneous)")
    d = profile.degree
    d1, d2 = profile.d1, profile.d2
    betti = betti_polynomial(d, e, mu.value)
    euler = betti[0] - betti[1] + betti[2]
    # (1+d1 t)(1+d2 t) = B(t) + (d-e) t (1+t), coefficientwise
    ok = ((1, d1 + d2, d1 * d2)
          == (betti[0], betti[1] + (d - e), betti[2] + (d - e)))
    ok = ok and euler == (d1 - 1) * (d2 - 1)
    return Verdict("cor3", True, ok, {
        "betti": list(betti), "euler": euler,
        "expected_euler": (d1 - 1) * (d2 - 1),
    })


def cor31_sign(profile: ExponentProfile, tau: int, mu: MuResult) -> Verdict:
    if profile.m != 2 or profile.d1 != 1:
        return Verdict.not_applicable("cor31", "curve is not free with d1 = 1")
    euler_c = (profile.d1 - 1) * (profile.d2 - 1) - (mu.value - tau)
    return Verdict("cor31", True, euler_c <= 0, {
        "euler_curve": euler_c,
        "note": "rationality of components is a cited consequence, not verified here",
    })


@dataclass
class CurveReport:
    """All invariants and verdicts for one curve."""

    d: int
    e: int
    profile: ExponentProfile
    tau: int
    mu: MuResult
    alpha: int
    a_coeff: int
    b_coeff: int
    betti: tuple[int, int, int]
    verdicts: list[Verdict]
    is_line_arrangement: bool
    arrangement_data: Any = None
