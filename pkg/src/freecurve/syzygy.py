"""Graded module of Jacobian syzygies of a reduced plane curve.

A syzygy of ``f`` in degree k is a triple ``(a, b, c)`` of degree-k forms
with ``a*f_x + b*f_y + c*f_z = 0``.  The degree-k slice is the kernel of the
pairing map S_k^3 -> S_{k+d-1}; minimal generator degrees (the exponents)
are read off incrementally: new generators in degree k are a canonical
complement of S_1 * (slice k-1) inside slice k.

Coordinates for a degree-k triple are the concatenation of the coefficient
vectors of a, b, c over the monomial basis of S_k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .linalg import RatMatrix, Subspace
from .ring import HomPoly, Mono, gradient, monomial_basis


class SyzygyError(Exception):
    pass


class BoundExhausted(SyzygyError):
    """New generators were still appearing at the search bound."""


FREE = "free"
NEARLY_FREE = "nearly_free"
PLUS_ONE = "plus_one_generated"
M_SYZYGY = "m_syzygy"


@dataclass(frozen=True)
class Syzygy:
    """A Jacobian syzygy (a, b, c) of common degree, validated on creation."""

    degree: int
    a: HomPoly
    b: HomPoly
    c: HomPoly

    def triple(self) -> tuple[HomPoly, HomPoly, HomPoly]:
        return (self.a, self.b, self.c)

    def vector(self) -> list[Fraction]:
        basis = monomial_basis(self.degree)
        return (self.a.coeff_vector(basis) + self.b.coeff_vector(basis)
                + self.c.coeff_vector(basis))


def make_syzygy(f: HomPoly, k: int, vec: list[Fraction]) -> Syzygy:
    """Build a Syzygy from coordinates, asserting the defining relation."""
    basis = monomial_basis(k)
    n = len(basis)
    polys = []
    for chunk in range(3):
        terms = {basis[i]: vec[chunk * n + i] for i in range(n)}
        polys.append(HomPoly(k, terms))
    a, b, c = polys
    fx, fy, fz = gradient(f)
    if not (a * fx + b * fy + c * fz).is_zero():
        raise SyzygyError("triple does not annihilate the gradient")
    return Syzygy(k, a, b, c)


def pairing_matrix(f: HomPoly, k: int) -> RatMatrix:
    """Matrix of (a,b,c) -> a*f_x + b*f_y + c*f_z from S_k^3 to S_{k+d-1}."""
    d = f.degree
    if d < 1:
        raise ValueError("need degree >= 1")
    parts = gradient(f)
    bk = monomial_basis(k)
    btop = monomial_basis(k + d - 1)
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
    return RatMatrix.from_dok(dok, len(btop), 3 * len(bk))


def syzygy_space(f: HomPoly, k: int) -> Subspace:
    """The degree-k slice of the syzygy module, as a canonical subspace of S_k^3."""
    if k < 0:
        raise ValueError("degree must be non-negative")
    return linalg.kernel_basis(pairing_matrix(f, k))


def _multiply_up(vectors: list[list[Fraction]], k_from: int) -> list[list[Fraction]]:
    """Images of degree-k_from triples under multiplication by x, y, z."""
    src = monomial_basis(k_from)
    dst = monomial_basis(k_from + 1)
    idx = {m: i for i, m in enumerate(dst)}
    ns, nd = len(src), len(dst)
    out = []
    for v in range(3):
        shift = [idx[(m[0] + (v == 0), m[1] + (v == 1), m[2] + (v == 2))] for m in src]
        for vec in vectors:
            img = [Fraction(0)] * (3 * nd)
            for chunk in range(3):
                base_s, base_d = chunk * ns, chunk * nd
                for i in range(ns):
                    c = vec[base_s + i]
                    if c:
                        img[base_d + shift[i]] = c
            out.append(img)
    return out


@dataclass
class ExponentProfile:
    """Minimal generator degrees of the syzygy module plus the classification."""

    degree: int                      # degree d of the curve
    exponents: list[int]             # d_1 <= ... <= d_m
    generators: list[Syzygy]
    classification: str
    type_t: int
    dims: dict[int, int]             # k -> dim of the degree-k slice
    complete: bool
    below_scope: bool                # d < 3 or a zero exponent (outside d>=3 analysis)

    @property
    def m(self) -> int:
        return len(self.exponents)

    @property
    def d1(self) -> int:
        return self.exponents[0]

    @property
    def d2(self) -> int:
        return self.exponents[1]

    @property
    def d3(self) -> int:
        return self.exponents[2]

    @property
    def is_free(self) -> bool:
        return self.m == 2


def exponent_profile(f: HomPoly, kmax: int | None = None,
                     arrangement: bool = False) -> ExponentProfile:
    """Compute exponents and generators by incremental new-generator counting.

    ``kmax`` defaults to d-1 for line arrangements (the maximal exponent of
    an arrangement is at most d-2, or d-1 for a pencil) and 3d-6 otherwise.
    If new generators still appear exactly at the bound for a general curve,
    the profile is flagged incomplete.
    """
    d = f.degree
    if d < 1:
        raise ValueError("need degree >= 1")
    if kmax is None:
        kmax = d - 1 if arrangement else max(3 * d - 6, d - 1)
    exponents: list[int] = []
    generators: list[Syzygy] = []
    dims: dict[int, int] = {}
    prev: list[list[Fraction]] = []
    last_new_degree = -1
    for k in range(kmax + 1):
        ker = syzygy_space(f, k)
        dims[k] = ker.dim
        ambient = 3 * math.comb(k + 2, 2)
        img = linalg.subspace_from_vectors(_multiply_up(prev, k - 1) if prev else [],
                                           ambient)
        new = ker.dim - img.dim
        if new < 0:
            raise SyzygyError("image dimension exceeds kernel dimension")
        if new > 0:
            img_piv = set(img.pivots)
            if not img_piv <= set(ker.pivots):
                raise SyzygyError("echelon pivot sets are not nested")
            rows = ker.basis.entries()
            reps = [rows[i] for i, p in enumerate(ker.pivots) if p not in img_piv]
            if len(reps) != new:
                raise SyzygyError("generator extraction miscounted")
            for vec in reps:
                generators.append(make_syzygy(f, k, vec))
                exponents.append(k)
            last_new_degree = k
        prev = ker.basis.entries()
    complete = arrangement or last_new_degree < kmax
    profile = _classify(d, exponents, generators, dims, complete)
    if arrangement and profile.m >= 2 and not profile.below_scope:
        # maximal exponent bound for (non-pencil) line arrangements
        if profile.exponents[-1] > d - 2:
            raise SyzygyError(
                f"arrangement exponent {profile.exponents[-1]} exceeds d-2 = {d - 2}")
    return profile


def _classify(d: int, exponents: list[int], generators: list[Syzygy],
              dims: dict[int, int], complete: bool) -> ExponentProfile:
    if len(exponents) < 2:
        raise BoundExhausted(
            f"found only {len(exponents)} generators up to the search bound")
    exps = sorted(exponents)
    d1, d2 = exps[0], exps[1]
    m = len(exps)
    below_scope = d < 3 or d1 == 0
    if d2 > d - 1:
        raise SyzygyError(f"second exponent {d2} exceeds d-1 = {d - 1}")
    if m == 2:
        cls = FREE
        if d1 + d2 != d - 1:
            raise SyzygyError(f"free curve with d1+d2 = {d1 + d2} != d-1 = {d - 1}")
        # Hilbert function of a rank-2 free module, a strong consistency check
        for k, dim in dims.items():
            expect = sum(math.comb(k - e + 2, 2) for e in exps if k >= e)
            if dim != expect:
                raise SyzygyError(f"free-module dimension mismatch in degree {k}")
    else:
        if complete and not below_scope and d1 + d2 < d:
            raise SyzygyError(f"non-free curve with d1+d2 = {d1 + d2} < d = {d}")
        if m == 3 and d1 + d2 == d:
            cls = NEARLY_FREE if exps[1] == exps[2] else PLUS_ONE
        else:
            cls = M_SYZYGY
    return ExponentProfile(
        degree=d,
        exponents=exps,
        generators=generators,
        classification=cls,
        type_t=d1 + d2 - d + 1,
        dims=dims,
        complete=complete,
        below_scope=below_scope,
    )


def mdr(f: HomPoly) -> int:
    """Minimal degree of a Jacobian relation (the first exponent d_1)."""
    d = f.degree
    for k in range(d):
        if syzygy_space(f, k).dim > 0:
            return k
    # the Koszul syzygies live in degree d-1, so this is unreachable for d >= 1
    raise SyzygyError("no syzygy found up to degree d-1")


def brute_force_exponents(f: HomPoly, kmax: int) -> list[int]:
    """Independent reconstruction of generator degrees, used as an oracle.

    Recomputes every slice from scratch and measures the span of *all*
    monomial multiples of the generators chosen so far (no telescoping
    through the previous slice).
    """
    gens: list[tuple[int, list[Fraction]]] = []
    exps: list[int] = []
    for k in range(kmax + 1):
        ker = syzygy_space(f, k)
        ambient = 3 * math.comb(k + 2, 2)
        multiples: list[list[Fraction]] = []
        for gdeg, gvec in gens:
            vecs = [gvec]
            for step in range(gdeg, k):
                vecs = _multiply_up(vecs, step)
            multiples.extend(vecs)
        span = linalg.subspace_from_vectors(multiples, ambient)
        new = ker.dim - span.dim
        if new > 0:
            piv = set(span.pivots)
            rows = ker.basis.entries()
            reps = [rows[i] for i, p in enumerate(ker.pivots) if p not in piv]
            for vec in reps[:new]:
                gens.append((k, vec))
                exps.append(k)
    return exps
