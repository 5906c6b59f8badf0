"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the library's own linear-algebra
backend: a dense Fraction Gauss-Jordan elimination, and a combinatorial
Tjurina count, so the main code paths are cross-checked against
from-scratch implementations.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

import pytest

from freecurve.corpus import CORPUS, CorpusEntry
from freecurve.parsing import parse_curve
from freecurve.report import analyze


def naive_rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Dense Gauss-Jordan over Fraction; returns (nonzero rows, pivot cols)."""
    m = [list(map(Fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def naive_rank(rows: list[list[Fraction]]) -> int:
    return len(naive_rref(rows)[1])


def naive_kernel_dim(rows: list[list[Fraction]], ncols: int) -> int:
    return ncols - naive_rank(rows) if rows else ncols


@dataclass
class CorpusResult:
    entry: CorpusEntry
    report: object
    arrangement: object  # Arrangement | None


@pytest.fixture(scope="session")
def corpus_results() -> dict[str, CorpusResult]:
    """Full analysis of every built-in corpus entry, computed once."""
    out: dict[str, CorpusResult] = {}
    for entry in CORPUS:
        rng = random.Random(0)
        A = entry.arrangement()
        if A is not None:
            report = analyze(A.defining_polynomial(), arrangement=A, rng=rng)
        else:
            ci = parse_curve(entry.text, rng=rng)
            report = analyze(ci.poly, e=ci.components, arrangement=ci.lines,
                             mu_mode=entry.mu_mode, rng=rng)
        out[entry.name] = CorpusResult(entry, report, A)
    return out
