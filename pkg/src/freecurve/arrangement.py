"""Line arrangements in the projective plane: intersection lattice,
multiplicity data, freeness combinatorics, and the addition-deletion case
analysis.

Lines may have coefficients in Q or in a small cyclotomic field (the
monomial arrangements need roots of unity); the lattice code only uses
field arithmetic, normalization and hashing.  All syzygy-level computation
is done on the rational defining polynomial.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .cyclotomic import CycNum, CyclotomicField
from .invariants import Verdict
from .ring import HomPoly, exact_divide
from .syzygy import (ExponentProfile, FREE, NEARLY_FREE, PLUS_ONE,
                     exponent_profile)


class ArrangementError(Exception):
    pass


def _is_zero(c) -> bool:
    return c.is_zero() if isinstance(c, CycNum) else c == 0


def _normalize_triple(t: Sequence) -> tuple:
    for c in t:
        if not _is_zero(c):
            scaled = [x / c for x in t]
            # demote rational cyclotomic entries so equal points over Q and
            # over Q(zeta) hash identically
            return tuple(x.to_fraction()
                         if isinstance(x, CycNum) and x.is_rational() else x
                         for x in scaled)
    raise ValueError("zero triple")


def _cross(u: Sequence, v: Sequence) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


@dataclass(frozen=True)
class Line:
    """A projective line alpha*x + beta*y + gamma*z = 0, normalized so the
    first nonzero coefficient is 1; equality is then syntactic."""

    coeffs: tuple

    @classmethod
    def from_coeffs(cls, coeffs: Sequence) -> "Line":
        c = [Fraction(x) if not isinstance(x, CycNum) else x for x in coeffs]
        return cls(_normalize_triple(c))

    def is_rational(self) -> bool:
        return all(not isinstance(c, CycNum) or c.is_rational() for c in self.coeffs)

    def rational_coeffs(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(c.to_fraction() if isinstance(c, CycNum) else c
                     for c in self.coeffs)

    def poly(self) -> HomPoly:
        a, b, c = self.rational_coeffs()
        return HomPoly(1, {(1, 0, 0): a, (0, 1, 0): b, (0, 0, 1): c})


@dataclass(frozen=True)
class PointRecord:
    point: tuple
    incident: frozenset[int]

    @property
    def multiplicity(self) -> int:
        return len(self.incident)


class Arrangement:
    """An ordered list of distinct projective lines."""

    def __init__(self, lines: Iterable[Line], poly: HomPoly | None = None,
                 orbit_reps: dict[int, int] | None = None):
        self.lines = list(lines)
        if len({l.coeffs for l in self.lines}) != len(self.lines):
            raise ArrangementError("duplicate lines")
        self._poly = poly
        # index of a rational line in the same symmetry orbit, for built-in
        # arrangements whose lines live in a cyclotomic field
        self.orbit_reps = orbit_reps or {}
        self._lattice: list[PointRecord] | None = None

    @property
    def d(self) -> int:
        return len(self.lines)

    @classmethod
    def from_coeff_rows(cls, rows: Iterable[Sequence]) -> "Arrangement":
        return cls([Line.from_coeffs(r) for r in rows])

    def defining_polynomial(self) -> HomPoly:
        if self._poly is None:
            terms: dict = {(0, 0, 0): Fraction(1)}
            mono_x = [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
            for line in self.lines:
                nxt: dict = {}
                for m, c in terms.items():
                    for v, coeff in enumerate(line.coeffs):
                        if _is_zero(coeff):
                            continue
                        mm = (m[0] + (v == 0), m[1] + (v == 1), m[2] + (v == 2))
                        nxt[mm] = nxt.get(mm, 0 * coeff) + c * coeff
                terms = {m: c for m, c in nxt.items() if not _is_zero(c)}
            rat = {}
            for m, c in terms.items():
                if isinstance(c, CycNum):
                    if not c.is_rational():
                        raise ArrangementError(
                            "defining polynomial is not rational; supply it explicitly")
                    c = c.to_fraction()
                rat[m] = c
            self._poly = HomPoly(self.d, rat).content_normalized()
        return self._poly

    def delete(self, i: int) -> "Arrangement":
        lines = [l for j, l in enumerate(self.lines) if j != i]
        poly = None
        if self._poly is not None and self.lines[i].is_rational():
            poly = exact_divide(self._poly, self.lines[i].poly()).content_normalized()
        return Arrangement(lines, poly=poly)

    def add(self, line: Line) -> "Arrangement":
        poly = None
        if self._poly is not None and line.is_rational():
            poly = (self._poly * line.poly()).content_normalized()
        return Arrangement(self.lines + [line], poly=poly)

    def lattice(self) -> list[PointRecord]:
        if self._lattice is None:
            self._lattice = intersection_lattice(self)
        return self._lattice

    def profile(self, kmax: int | None = None) -> ExponentProfile:
        return exponent_profile(self.defining_polynomial(), kmax=kmax,
                                arrangement=True)


def intersection_lattice(A: Arrangement) -> list[PointRecord]:
    """All pairwise intersections grouped by point."""
    d = A.d
    if d < 2:
        return []
    points: dict[tuple, set[int]] = {}
    for i in range(d):
        for j in range(i + 1, d):
            p = _cross(A.lines[i].coeffs, A.lines[j].coeffs)
            if all(_is_zero(c) for c in p):
                raise ArrangementError("proportional lines survived normalization")
            key = _normalize_triple(p)
            points.setdefault(key, set()).update((i, j))
    records = [PointRecord(pt, frozenset(inc)) for pt, inc in points.items()]
    records.sort(key=lambda r: (-r.multiplicity, sorted(r.incident)))
    if sum(math.comb(r.multiplicity, 2) for r in records) != math.comb(d, 2):
        raise ArrangementError("lattice pair count is inconsistent")
    return records


@dataclass(frozen=True)
class MultiplicityProfile:
    m_max: int                 # m(A): largest point multiplicity
    n_second: int              # n(A): largest multiplicity off a maximal point
    r_per_line: tuple[int, ...]


def multiplicity_profile(A: Arrangement) -> MultiplicityProfile:
    """m(A), n(A) and the per-line count of multiple points.

    n(A) is defined through a point p of maximal multiplicity; when the
    choice of p is ambiguous we take the maximum over all choices, which is
    the strongest form of the d2 upper bound.
    """
    records = A.lattice()
    if not records:
        raise ArrangementError("arrangement has no intersection points")
    mults = [r.multiplicity for r in records]
    m_max = max(mults)
    maximal = [r for r in records if r.multiplicity == m_max]
    if len(maximal) >= 2:
        n_second = m_max
    elif len(records) == 1:
        n_second = 0  # a pencil: no second point
    else:
        n_second = max(r.multiplicity for r in records if r is not maximal[0])
    r_per_line = tuple(sum(1 for r in records if i in r.incident)
                       for i in range(A.d))
    return MultiplicityProfile(m_max, n_second, r_per_line)


def combinatorial_tau_mu(A: Arrangement) -> int:
    """Sum of (m_p - 1)^2; all arrangement singularities are ordinary and
    quasi-homogeneous, so this is both tau and mu."""
    return sum((r.multiplicity - 1) ** 2 for r in A.lattice())


def modular_points(A: Arrangement) -> list[PointRecord]:
    """Points joined to every other multiple point by an arrangement line."""
    records = A.lattice()
    line_set = {l.coeffs for l in A.lines}
    out = []
    for p in records:
        modular = True
        for q in records:
            if q is p:
                continue
            join = _cross(p.point, q.point)
            if all(_is_zero(c) for c in join):
                raise ArrangementError("distinct lattice points coincide")
            if _normalize_triple(join) not in line_set:
                modular = False
                break
        if modular:
            out.append(p)
    return out


def is_supersolvable(A: Arrangement) -> bool:
    return bool(modular_points(A))


# ---------------------------------------------------------------------------
# Theorem checks


def cor20_check(A: Arrangement, profile: ExponentProfile, tau: int) -> Verdict:
    d = A.d
    d1, d2 = profile.d1, profile.d2
    base = (d - 1) ** 2 - d1 * d2
    ok = tau >= base + profile.type_t
    ok = ok and ((tau == base) == profile.is_free)
    return Verdict("cor20", True, ok, {
        "tau": tau, "base": base, "type": profile.type_t,
        "free": profile.is_free,
    })


def thm4_filter(A: Arrangement, profile: ExponentProfile) -> Verdict:
    """Minimal-counterexample filter: a free arrangement can only sit in a
    minimal counterexample to Terao's conjecture if every line carries at
    most d1 multiple points (and, absent a modular point, strictly fewer
    than m(A) is also excluded)."""
    if not profile.is_free:
        return Verdict.not_applicable("thm4", "arrangement is not free")
    mp = multiplicity_profile(A)
    condition = all(r <= profile.d1 for r in mp.r_per_line)
    details = {
        "d1": profile.d1,
        "r_per_line": list(mp.r_per_line),
        "verdict": ("could-be-minimal-counterexample-side" if condition
                    else "excluded by the r_L <= d1 filter"),
    }
    if condition and not modular_points(A):
        details["strict_condition_d1_gt_m"] = profile.d1 > mp.m_max
    return Verdict("thm4", True, True, details)


def thm5_bounds(A: Arrangement, profile: ExponentProfile) -> Verdict:
    mp = multiplicity_profile(A)
    d = A.d
    d1, d2 = profile.d1, profile.d2
    t = profile.type_t
    m, n = mp.m_max, mp.n_second
    chain_ok = (m - 1 <= t + m - 1 <= d2 <= d - n)
    type_ok = 0 <= t <= d + 1 - m - n
    special_ok = True
    if d2 == m - 1:
        special_ok = profile.is_free and d1 == d - m
    nonfree_ok = True
    if not profile.is_free:
        nonfree_ok = m <= d2
    ok = chain_ok and type_ok and special_ok and nonfree_ok
    return Verdict("thm5", True, ok, {
        "m": m, "n": n, "type": t,
        "chain": [m - 1, t + m - 1, d2, d - n],
        "tight": t + m - 1 == d2 == d - n,
    })


# ---------------------------------------------------------------------------
# Addition-deletion (Theorems 1B / 2B)


@dataclass
class DeletionRecord:
    line_index: int
    r: int
    case: int                     # 1, 2 or 3
    parent_exponents: list[int]
    deleted_profile: ExponentProfile
    deleted_free: bool
    freeness_iff_ok: bool
    via_orbit_representative: int | None = None


def _r_on_line(A: Arrangement, i: int) -> int:
    return sum(1 for rec in A.lattice() if i in rec.incident)


def deletion_classify(A: Arrangement, i: int,
                      profile: ExponentProfile | None = None) -> DeletionRecord:
    """Classify the deletion A minus its i-th line against the free
    arrangement case analysis; A must be free."""
    if profile is None:
        profile = A.profile()
    if not profile.is_free:
        raise ArrangementError("deletion classification needs a free arrangement")
    d1, d2 = profile.d1, profile.d2
    r = _r_on_line(A, i)
    rep = None
    j = i
    if not A.lines[i].is_rational():
        if i not in A.orbit_reps:
            raise ArrangementError(
                "cannot delete a non-rational line without a symmetry-orbit "
                "representative")
        j = A.orbit_reps[i]
        rep = j
        if _r_on_line(A, j) != r:
            raise ArrangementError("orbit representative has a different r_L")
    Aprime = A.delete(j)
    pprime = Aprime.profile()
    matches = _thm1b_cases(d1, d2, pprime, r, len(Aprime.lines))
    if len(matches) != 1:
        raise ArrangementError(
            f"deletion matched cases {matches}, expected exactly one "
            f"(exponents {profile.exponents} -> {pprime.exponents}, r={r})")
    iff_ok = pprime.is_free == (r >= d1 + 1)
    return DeletionRecord(i, r, matches[0], profile.exponents, pprime,
                          pprime.is_free, iff_ok, via_orbit_representative=rep)


def _thm1b_cases(d1: int, d2: int, pprime: ExponentProfile, r: int,
                 dprime_count: int) -> list[int]:
    matches = []
    if (d1 < d2 and pprime.is_free and pprime.exponents == [d1, d2 - 1]
            and r == d1 + 1):
        matches.append(1)
    if (pprime.is_free and pprime.exponents == sorted([d1 - 1, d2])
            and r == d2 + 1):
        matches.append(2)
    if (pprime.classification in (PLUS_ONE, NEARLY_FREE)
            and pprime.exponents[:2] == [d1, d2]
            and r == dprime_count - pprime.d3 and r <= d1):
        matches.append(3)
    return matches


@dataclass
class AdditionRecord:
    r: int
    case: int
    base_exponents: list[int]
    extended_profile: ExponentProfile
    extended_free: bool
    freeness_iff_ok: bool


def addition_classify(Aprime: Arrangement, line: Line,
                      profile: ExponentProfile | None = None) -> AdditionRecord:
    """Classify adding a new line to a free arrangement."""
    if profile is None:
        profile = Aprime.profile()
    if not profile.is_free:
        raise ArrangementError("addition classification needs a free arrangement")
    if any(line.coeffs == l.coeffs for l in Aprime.lines):
        raise ArrangementError("line already in the arrangement")
    d1p, d2p = profile.d1, profile.d2
    pts = {_normalize_triple(_cross(line.coeffs, l.coeffs)) for l in Aprime.lines}
    r = len(pts)
    A = Aprime.add(line)
    pfull = A.profile()
    matches = []
    if pfull.is_free and pfull.exponents == sorted([d1p, d2p + 1]) and r == d1p + 1:
        matches.append(1)
    if (d1p < d2p and pfull.is_free and pfull.exponents == sorted([d1p + 1, d2p])
            and r == d2p + 1):
        matches.append(2)
    if (pfull.classification in (PLUS_ONE, NEARLY_FREE)
            and pfull.exponents[:2] == [d1p + 1, d2p + 1]
            and r == pfull.d3 + 1 and r >= d2p + 2):
        matches.append(3)
    if len(matches) != 1:
        raise ArrangementError(
            f"addition matched cases {matches}, expected exactly one "
            f"(exponents {profile.exponents} -> {pfull.exponents}, r={r})")
    iff_ok = pfull.is_free == (r <= d2p + 1)
    return AdditionRecord(r, matches[0], profile.exponents, pfull,
                          pfull.is_free, iff_ok)


# ---------------------------------------------------------------------------
# Random generators for property campaigns


def random_arrangement(rng: random.Random, d: int, coeff_bound: int = 5) -> Arrangement:
    """d distinct random lines with small integer coefficients."""
    lines: list[Line] = []
    seen = set()
    while len(lines) < d:
        c = tuple(rng.randint(-coeff_bound, coeff_bound) for _ in range(3))
        if c == (0, 0, 0):
            continue
        line = Line.from_coeffs(c)
        if line.coeffs in seen:
            continue
        seen.add(line.coeffs)
        lines.append(line)
    return Arrangement(lines)


def random_free_arrangement(rng: random.Random, d: int) -> Arrangement:
    """A random supersolvable (hence free) arrangement of d >= 3 lines.

    Construction: two pencil centers p and q, the line pq, and the
    remaining lines drawn through p or q at random.  p is then a modular
    point, so the arrangement is supersolvable.
    """
    if d < 3:
        raise ValueError("need d >= 3")
    while True:
        p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
        q = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
        if all(c == 0 for c in p) or all(c == 0 for c in q):
            continue
        pq = _cross(p, q)
        if all(c == 0 for c in pq):
            continue
        lines = [Line.from_coeffs(pq)]
        seen = {lines[0].coeffs}
        # at least one line through each center so the result is not a pencil
        want = [(p, 1), (q, 1)]
        for _ in range(d - 3):
            want.append((p, None) if rng.random() < 0.5 else (q, None))
        guard = 0
        ok = True
        for center, _ in want:
            placed = False
            for _ in range(200):
                rpt = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
                ln = _cross(center, rpt)
                if all(c == 0 for c in ln):
                    continue
                line = Line.from_coeffs(ln)
                if line.coeffs in seen:
                    continue
                # a line through both centers would duplicate pq
                seen.add(line.coeffs)
                lines.append(line)
                placed = True
                break
            if not placed:
                ok = False
                break
        if ok and len(lines) == d:
            return Arrangement(lines)
