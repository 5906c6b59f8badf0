"""Analysis pipeline and canonical report serialization.

``analyze`` assembles the full invariant/verdict bundle for one curve;
``report_to_dict`` / ``dumps_canonical`` turn it into deterministic JSON
(sorted keys, exact rationals as strings, no floats, no timing data), so
reports are byte-identical across runs for a fixed seed and version.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import __version__
from .arrangement import (Arrangement, combinatorial_tau_mu, cor20_check,
                          modular_points, multiplicity_profile, thm4_filter,
                          thm5_bounds)
from .bourbaki import thm1_check
from .cyclotomic import CycNum
from .invariants import (CurveReport, IdentityViolation, MuResult, Verdict,
                         alpha_invariant, betti_polynomial, cor2_bounds,
                         cor31_sign, cor3_euler, mu_total, thm2_verdict,
                         thm3_coefficients, tjurina_total)
from .ring import HomPoly, format_poly
from .syzygy import exponent_profile


def analyze(poly: HomPoly, e: int | None = None,
            arrangement: Arrangement | None = None,
            mu_mode: str | None = None,
            kmax: int | None = None,
            rng: random.Random | None = None,
            e_assumed: bool = False) -> CurveReport:
    """Full invariant and verdict bundle for one reduced curve."""
    f = poly.content_normalized()
    is_arr = arrangement is not None
    profile = exponent_profile(f, kmax=kmax, arrangement=is_arr)
    tau = tjurina_total(f)
    verdicts: list[Verdict] = []
    arrangement_data: dict[str, Any] | None = None

    if is_arr:
        if arrangement.d != f.degree:
            raise IdentityViolation("arrangement line count differs from degree")
        lattice = arrangement.lattice()
        ctau = combinatorial_tau_mu(arrangement)
        if ctau != tau:
            raise IdentityViolation(
                f"combinatorial tau {ctau} != Milnor-algebra tau {tau}")
        mu = mu_total(f, mode="arrangement",
                      point_multiplicities=[r.multiplicity for r in lattice])
        if e is None:
            e = arrangement.d
        elif e != arrangement.d:
            raise IdentityViolation("component count differs from line count")
    else:
        mu = mu_total(f, mode=mu_mode or "rational_points", tau=tau, rng=rng)
        if e is None:
            raise ValueError("component count required for non-arrangement curves")

    d = f.degree
    alpha = alpha_invariant(d, profile.d1, profile.d2, tau)
    a = profile.d1 + profile.d2 - e + 1
    b = mu.value - tau + d - e + alpha
    betti = betti_polynomial(d, e, mu.value)

    if profile.below_scope:
        verdicts.append(Verdict.not_applicable(
            "all", "below analysis scope (pencil or degree < 3)"))
    else:
        verdicts.append(thm2_verdict(profile, tau))
        verdicts.append(cor2_bounds(profile, tau))
        verdicts.append(thm3_coefficients(
            d, e, profile.d1, profile.d2, tau, mu.value,
            profile.classification, is_arr))
        verdicts.append(cor3_euler(profile, e, tau, mu))
        verdicts.append(cor31_sign(profile, tau, mu))
        if profile.m >= 3:
            verdicts.append(thm1_check(f, profile, tau))
        else:
            verdicts.append(Verdict.not_applicable("thm1", "curve is free (m = 2)"))
        if is_arr:
            verdicts.append(cor20_check(arrangement, profile, tau))
            verdicts.append(thm4_filter(arrangement, profile))
            verdicts.append(thm5_bounds(arrangement, profile))

    if is_arr:
        mp = multiplicity_profile(arrangement)
        modular = modular_points(arrangement)
        arrangement_data = {
            "d": arrangement.d,
            "m_A": mp.m_max,
            "n_A": mp.n_second,
            "r_per_line": list(mp.r_per_line),
            "point_multiplicities": sorted(
                (r.multiplicity for r in arrangement.lattice()), reverse=True),
            "modular_points": len(modular),
            "supersolvable": bool(modular),
        }

    return CurveReport(
        d=d, e=e, profile=profile, tau=tau, mu=mu, alpha=alpha,
        a_coeff=a, b_coeff=b, betti=betti, verdicts=verdicts,
        is_line_arrangement=is_arr, arrangement_data=arrangement_data)


# ---------------------------------------------------------------------------
# Canonical serialization


def _jsonable(obj: Any) -> Any:
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, CycNum):
        return "cyc" + str(obj.field.n) + ":" + ",".join(str(c) for c in obj.coeffs)
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(_jsonable(x) for x in obj)
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    raise TypeError(f"cannot serialize {type(obj).__name__} canonically")


def verdict_to_dict(v: Verdict) -> dict:
    return {"name": v.name, "applicable": v.applicable, "ok": v.ok,
            "details": _jsonable(v.details)}


def report_to_dict(report: CurveReport, source: str,
                   seed: int | None = None) -> dict:
    p = report.profile
    out = {
        "version": __version__,
        "input": source,
        "seed": seed,
        "degree": report.d,
        "components": report.e,
        "exponents": p.exponents,
        "classification": p.classification,
        "type": p.type_t,
        "complete": p.complete,
        "below_scope": p.below_scope,
        "tau": report.tau,
        "mu": report.mu.value,
        "mu_mode": report.mu.mode,
        "mu_assumed": report.mu.assumed,
        "alpha": report.alpha,
        "a": report.a_coeff,
        "b": report.b_coeff,
        "betti": list(report.betti),
        "is_line_arrangement": report.is_line_arrangement,
        "verdicts": [verdict_to_dict(v) for v in report.verdicts],
    }
    if report.arrangement_data is not None:
        out["arrangement"] = _jsonable(report.arrangement_data)
    return out


def dumps_canonical(payload: dict) -> str:
    return json.dumps(_jsonable(payload), sort_keys=True, indent=2)


def summarize(report: CurveReport) -> str:
    """One-paragraph human summary (for stderr)."""
    p = report.profile
    lines = [
        f"degree {report.d}, components {report.e}, "
        f"exponents {p.exponents} ({p.classification}, type {p.type_t})",
        f"tau = {report.tau}, mu = {report.mu.value} [{report.mu.mode}], "
        f"alpha = {report.alpha}, (a, b) = ({report.a_coeff}, {report.b_coeff})",
        f"Betti polynomial: {report.betti[0]} + {report.betti[1]} t + "
        f"{report.betti[2]} t^2",
    ]
    for v in report.verdicts:
        status = "n/a" if not v.applicable else ("ok" if v.ok else "FAIL")
        lines.append(f"  {v.name}: {status}")
    return "\n".join(lines)
