"""The Bourbaki ideal attached to a minimal-degree syzygy, and the tau
inequality it yields.

Pairing a fixed minimal-degree syzygy rho1 with any other syzygy rho via the
3x3 determinant with first row (x, y, z) produces a multiple of f; dividing
by f gives forms generating a homogeneous ideal.  Scanning its graded pieces
for a 0-dimensional base locus yields the invariant d' and the lower bound
for the total Tjurina number, with equality exactly for 3-syzygy curves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .invariants import Verdict
from .linalg import RatMatrix
from .ring import HomPoly, exact_divide, monomial_basis
from .syzygy import ExponentProfile, Syzygy

EMPTY = "empty"
ZERO_DIMENSIONAL = "zero_dimensional"
POSITIVE_DIMENSIONAL = "positive_dimensional"


class BourbakiError(Exception):
    pass


def delta(rho1: Syzygy, rho: Syzygy) -> HomPoly:
    """det of the 3x3 matrix with rows (x, y, z), rho1, rho."""
    x, y, z = (HomPoly.variable(v) for v in range(3))
    a1, b1, c1 = rho1.triple()
    a, b, c = rho.triple()
    return (x * (b1 * c - c1 * b)
            - y * (a1 * c - c1 * a)
            + z * (a1 * b - b1 * a))


def v_map(f: HomPoly, rho1: Syzygy, rho: Syzygy) -> HomPoly:
    """Delta(rho) / f; exactness of the division certifies the construction."""
    return exact_divide(delta(rho1, rho), f)


@dataclass
class BourbakiData:
    rho1: Syzygy
    generators: list[HomPoly]     # images of the non-minimal generators, zeros dropped
    is_unit: bool                 # free curve: the ideal is the unit ideal


def bourbaki_generators(f: HomPoly, profile: ExponentProfile) -> BourbakiData:
    rho1 = profile.generators[0]
    gens = []
    unit = False
    for rho in profile.generators[1:]:
        g = v_map(f, rho1, rho)
        if g.is_zero():
            continue
        if g.degree == 0:
            unit = True
        gens.append(g)
    if profile.m == 2:
        # free curve: Delta(rho1, rho2) is a nonzero constant multiple of f
        if not unit:
            raise BourbakiError("free curve did not produce a unit Bourbaki ideal")
    return BourbakiData(rho1, gens, unit)


def base_locus_dimension(gens: list[HomPoly], piece_degree: int,
                         probe_extra: int = 2) -> str:
    """Classify the base locus of the linear system spanned in one degree.

    Probes the Hilbert function of the ideal generated by the degree-
    ``piece_degree`` part at two large degrees: both zero means empty base
    locus, equal positive values mean dimension 0, growth means positive
    dimension.
    """
    if piece_degree < 0:
        raise ValueError("piece degree must be non-negative")
    active = [g for g in gens if not g.is_zero() and g.degree <= piece_degree]
    if any(g.degree == 0 for g in active):
        return EMPTY
    if not active:
        return POSITIVE_DIMENSIONAL
    maxdeg = max(g.degree for g in active)
    n = 2 * maxdeg + piece_degree + probe_extra
    h1 = _ideal_hilbert(active, n)
    h2 = _ideal_hilbert(active, n + 1)
    if h2 < h1:
        # non-monotone probe; widen once
        n += maxdeg + 2
        h1 = _ideal_hilbert(active, n)
        h2 = _ideal_hilbert(active, n + 1)
        if h2 < h1:
            raise BourbakiError("inconclusive base-locus probe")
    if h1 == h2 == 0:
        return EMPTY
    if h1 == h2:
        return ZERO_DIMENSIONAL
    return POSITIVE_DIMENSIONAL


def _ideal_hilbert(gens: list[HomPoly], n: int) -> int:
    """dim S_n minus the dimension of the degree-n multiples of gens."""
    btop = monomial_basis(n)
    idx = {m: i for i, m in enumerate(btop)}
    dok: dict[int, dict[int, Fraction]] = {}
    col = 0
    for g in gens:
        for m in monomial_basis(n - g.degree):
            for mm, co in g.terms.items():
                r = idx[(m[0] + mm[0], m[1] + mm[1], m[2] + mm[2])]
                row = dok.setdefault(r, {})
                row[col] = row.get(col, Fraction(0)) + co
            col += 1
    rank = linalg.rank(RatMatrix.from_dok(dok, len(btop), col)) if col else 0
    return len(btop) - rank


def thm1_check(f: HomPoly, profile: ExponentProfile, tau: int) -> Verdict:
    """Scan for d', assert the tau lower bound and its equality case."""
    if profile.m < 3:
        return Verdict.not_applicable("thm1", "curve is free (m = 2)")
    d = profile.degree
    d1, d2, d3 = profile.d1, profile.d2, profile.d3
    dm = profile.exponents[-1]
    data = bourbaki_generators(f, profile)
    dprime = None
    locus = None
    for cand in range(d3, min(dm, d - 1) + 1):
        piece = d1 + cand - d + 1
        cls = base_locus_dimension(data.generators, piece, probe_extra=d)
        if cls in (EMPTY, ZERO_DIMENSIONAL):
            dprime = cand
            locus = cls
            break
    if dprime is None:
        raise BourbakiError(
            "no d' with 0-dimensional base locus in range "
            f"[{d3}, {min(dm, d - 1)}]")
    t = profile.type_t
    rhs = (d - 1) ** 2 - d1 * d2 + (d - 1 - dprime) * t
    ok = tau >= rhs
    is_equality = tau == rhs
    if profile.m == 3:
        ok = ok and is_equality and dprime == d3
    else:
        ok = ok and not is_equality
    return Verdict("thm1", True, ok, {
        "dprime": dprime, "base_locus": locus, "tau": tau, "rhs": rhs,
        "equality": is_equality, "m": profile.m,
    })
