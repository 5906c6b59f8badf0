"""Exact rational dense linear algebra: canonical echelon forms, kernels,
subspace arithmetic.

The heavy lifting (rref, rank, nullspace) is delegated to sympy's
``DomainMatrix`` over QQ, which with gmpy2 ground types is fast enough for
the matrix sizes this project produces (a few hundred rows/columns).  The
public surface speaks plain ``fractions.Fraction``; every returned basis is
in reduced row-echelon form, so each subspace has a unique representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_qq(c) -> object:
    if isinstance(c, int):
        return QQ(c)
    f = Fraction(c)
    return QQ(f.numerator, f.denominator)


def _to_fraction(e) -> Fraction:
    return Fraction(int(e.numerator), int(e.denominator))


class RatMatrix:
    """A rows x cols matrix of exact rationals."""

    __slots__ = ("rows", "cols", "_dm")

    def __init__(self, dm: DomainMatrix):
        self._dm = dm.to_field() if dm.domain != QQ else dm
        self.rows, self.cols = dm.shape

    @classmethod
    def from_rows(cls, data: Sequence[Sequence]) -> "RatMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        dok = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise ValueError("ragged rows")
            r = {j: _to_qq(c) for j, c in enumerate(row) if c != 0}
            if r:
                dok[i] = r
        return cls(DomainMatrix(dok, (rows, cols), QQ))

    @classmethod
    def from_dok(cls, dok: dict[int, dict[int, object]], rows: int, cols: int) -> "RatMatrix":
        clean = {}
        for i, r in dok.items():
            rr = {j: _to_qq(c) for j, c in r.items() if c != 0}
            if rr:
                clean[i] = rr
        return cls(DomainMatrix(clean, (rows, cols), QQ))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(DomainMatrix({}, (rows, cols), QQ))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(DomainMatrix({i: {i: QQ(1)} for i in range(n)}, (n, n), QQ))

    def entries(self) -> list[list[Fraction]]:
        return [[_to_fraction(e) for e in row] for row in self._dm.to_list()]

    def row(self, i: int) -> list[Fraction]:
        return [_to_fraction(e) for e in self._dm.to_list()[i]]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self._dm.transpose())

    def stack(self, other: "RatMatrix") -> "RatMatrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return RatMatrix(self._dm.vstack(other._dm))

    def __eq__(self, other) -> bool:
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self._dm == other._dm

    def __repr__(self) -> str:
        return f"RatMatrix({self.rows}x{self.cols})"


# Division-based Gauss-Jordan over QQ: on this project's matrices (big
# integer entries from products of linear forms) it is several times faster
# than sympy's default fraction-free route.
_RREF_METHOD = "GJ"


def rank(M: RatMatrix) -> int:
    return len(M._dm.rref(method=_RREF_METHOD)[1])


def rref(M: RatMatrix) -> tuple[RatMatrix, int]:
    """Canonical reduced row-echelon form (zero rows dropped) and the rank."""
    R, pivots = M._dm.rref(method=_RREF_METHOD)
    r = len(pivots)
    dok = {}
    lst = R.to_list()
    for i in range(r):
        row = {j: e for j, e in enumerate(lst[i]) if e}
        if row:
            dok[i] = row
    out = RatMatrix(DomainMatrix(dok, (r, M.cols), QQ))
    return out, r


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim with a canonical RREF basis (one vector per row)."""

    ambient_dim: int
    basis: RatMatrix
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.basis.rows

    def basis_vectors(self) -> list[list[Fraction]]:
        return self.basis.entries()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient_dim == other.ambient_dim and self.basis == other.basis


def subspace_from_vectors(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    vecs = [list(v) for v in vectors]
    for v in vecs:
        if len(v) != ambient_dim:
            raise ValueError("vector length does not match ambient dimension")
    if not vecs:
        return Subspace(ambient_dim, RatMatrix.zeros(0, ambient_dim), ())
    M = RatMatrix.from_rows(vecs)
    R, pivots = M._dm.rref(method=_RREF_METHOD)
    r = len(pivots)
    lst = R.to_list()
    dok = {i: {j: e for j, e in enumerate(lst[i]) if e} for i in range(r)}
    dok = {i: row for i, row in dok.items() if row}
    return Subspace(ambient_dim, RatMatrix(DomainMatrix(dok, (r, ambient_dim), QQ)), tuple(pivots))


def kernel_basis(M: RatMatrix) -> Subspace:
    """Canonical basis of the right kernel {v : Mv = 0}."""
    if M.rows == 0 or M.cols == 0:
        ident = RatMatrix.identity(M.cols)
        return Subspace(M.cols, ident, tuple(range(M.cols)))
    R, pivots = M._dm.rref(method=_RREF_METHOD)
    n = M.cols
    piv_set = set(pivots)
    lst = R.to_list()
    vecs = []
    for j in range(n):
        if j in piv_set:
            continue
        v = [QQ(0)] * n
        v[j] = QQ(1)
        for i, p in enumerate(pivots):
            v[p] = -lst[i][j]
        vecs.append(v)
    return subspace_from_vectors(vecs, n)


def contains(U: Subspace, v: Sequence) -> bool:
    """Membership test by reduction against the RREF basis."""
    vec = [Fraction(c) for c in v]
    if len(vec) != U.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    rows = U.basis.entries()
    for row, p in zip(rows, U.pivots):
        c = vec[p]
        if c != 0:
            for j in range(p, U.ambient_dim):
                vec[j] -= c * row[j]
    return all(c == 0 for c in vec)


def subspace_sum(U: Subspace, V: Subspace) -> Subspace:
    if U.ambient_dim != V.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    return subspace_from_vectors(U.basis.entries() + V.basis.entries(), U.ambient_dim)


def quotient_dim(U: Subspace, W: Subspace) -> int:
    """dim(U/W), checking W is a subspace of U."""
    if U.ambient_dim != W.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    for v in W.basis.entries():
        if not contains(U, v):
            raise ValueError("W is not contained in U")
    return U.dim - W.dim
