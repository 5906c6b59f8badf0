"""Command-line interface.

Each command prints one canonical JSON report to stdout and a short
human-readable summary to stderr.  Exit codes: 0 = all checks passed,
2 = parse/input error, 3 = a theorem verdict failed, 4 = internal
inconsistency detected by the tool's own cross-checks.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from dataclasses import asdict
from fractions import Fraction
from pathlib import Path

from . import __version__, corpus
from .arrangement import (Arrangement, ArrangementError, Line,
                          addition_classify, combinatorial_tau_mu,
                          deletion_classify, random_arrangement,
                          random_free_arrangement)
from .invariants import (IdentityViolation, cor2_bounds, tjurina_total)
from .parsing import (CurveInput, InputError, ParseError, parse_curve,
                      parse_lines_file)
from .report import analyze, dumps_canonical, report_to_dict, summarize
from .ring import format_poly
from .syzygy import BoundExhausted, SyzygyError, exponent_profile

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_VERDICT = 3
EXIT_INTERNAL = 4


def _emit(payload: dict, summary: str, json_only: bool) -> None:
    print(dumps_canonical(payload))
    if not json_only and summary:
        print(summary, file=sys.stderr)


def _load_arrangement(spec: str, strict: bool, rng: random.Random) -> tuple[Arrangement, str]:
    """An arrangement from a .lines file path or a factored expression."""
    path = Path(spec)
    if path.exists():
        A = parse_lines_file(path.read_text())
        return A, spec
    ci = parse_curve(spec, rng=rng, strict=strict)
    if ci.lines is None:
        raise InputError("input does not define a line arrangement "
                         "(or its lines are not computable here)")
    return ci.lines, spec


def _parse_line(text: str) -> Line:
    parts = text.split()
    if len(parts) == 3:
        try:
            return Line.from_coeffs([Fraction(p) for p in parts])
        except ValueError:
            pass
    ci = parse_curve(text)
    if ci.poly.degree != 1:
        raise InputError(f"{text!r} is not a line")
    return Line.from_coeffs([ci.poly.terms.get(m, Fraction(0))
                             for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]])


def _verdict_exit(report) -> int:
    bad = [v for v in report.verdicts if v.applicable and not v.ok]
    return EXIT_VERDICT if bad else EXIT_OK


# ---------------------------------------------------------------------------
# Commands


def cmd_analyze(args) -> int:
    rng = random.Random(args.seed)
    ci = parse_curve(args.curve, rng=rng, strict=args.strict,
                     assume_components=args.components)
    report = analyze(ci.poly, e=ci.components, arrangement=ci.lines,
                     mu_mode=args.mu_mode, kmax=args.kmax, rng=rng,
                     e_assumed=ci.components_assumed)
    _emit(report_to_dict(report, args.curve, seed=args.seed),
          summarize(report), args.json_only)
    return _verdict_exit(report)


def cmd_arrangement(args) -> int:
    rng = random.Random(args.seed)
    A, source = _load_arrangement(args.input, args.strict, rng)
    report = analyze(A.defining_polynomial(), arrangement=A,
                     kmax=args.kmax, rng=rng)
    _emit(report_to_dict(report, source, seed=args.seed),
          summarize(report), args.json_only)
    return _verdict_exit(report)


def cmd_delete(args) -> int:
    rng = random.Random(args.seed)
    A, source = _load_arrangement(args.input, args.strict, rng)
    if not (0 <= args.line < A.d):
        raise InputError(f"line index {args.line} out of range 0..{A.d - 1}")
    rec = deletion_classify(A, args.line)
    payload = {
        "version": __version__, "input": source, "seed": args.seed,
        "command": "delete", "line": args.line, "r": rec.r,
        "case": rec.case, "parent_exponents": rec.parent_exponents,
        "deleted_exponents": rec.deleted_profile.exponents,
        "deleted_classification": rec.deleted_profile.classification,
        "deleted_free": rec.deleted_free,
        "freeness_iff_ok": rec.freeness_iff_ok,
        "via_orbit_representative": rec.via_orbit_representative,
    }
    _emit(payload,
          f"case ({rec.case}): r = {rec.r}, deleted arrangement "
          f"{rec.deleted_profile.exponents} ({rec.deleted_profile.classification})",
          args.json_only)
    return EXIT_OK if rec.freeness_iff_ok else EXIT_VERDICT


def cmd_add(args) -> int:
    rng = random.Random(args.seed)
    A, source = _load_arrangement(args.input, args.strict, rng)
    line = _parse_line(args.line)
    rec = addition_classify(A, line)
    payload = {
        "version": __version__, "input": source, "seed": args.seed,
        "command": "add", "line": [str(c) for c in line.rational_coeffs()],
        "r": rec.r, "case": rec.case,
        "base_exponents": rec.base_exponents,
        "extended_exponents": rec.extended_profile.exponents,
        "extended_classification": rec.extended_profile.classification,
        "extended_free": rec.extended_free,
        "freeness_iff_ok": rec.freeness_iff_ok,
    }
    _emit(payload,
          f"case ({rec.case}): r = {rec.r}, extended arrangement "
          f"{rec.extended_profile.exponents} ({rec.extended_profile.classification})",
          args.json_only)
    return EXIT_OK if rec.freeness_iff_ok else EXIT_VERDICT


def cmd_verify(args) -> int:
    rng = random.Random(args.seed)
    results = []
    failed = False
    if args.corpus == "builtin":
        jobs = [(e.name, e) for e in corpus.CORPUS]
    else:
        directory = Path(args.corpus)
        if not directory.is_dir():
            raise InputError(f"{args.corpus!r} is not a directory")
        jobs = []
        for p in sorted(directory.iterdir()):
            if p.suffix in (".lines", ".txt", ".curve"):
                jobs.append((p.name, p))
    for name, job in jobs:
        if isinstance(job, corpus.CorpusEntry):
            A = job.arrangement()
            if A is not None:
                report = analyze(A.defining_polynomial(), arrangement=A,
                                 kmax=args.kmax, rng=rng)
            else:
                ci = parse_curve(job.text, rng=rng, strict=args.strict)
                report = analyze(ci.poly, e=ci.components, arrangement=ci.lines,
                                 mu_mode=job.mu_mode, kmax=args.kmax, rng=rng)
            exp = job.expected
            mismatches = []
            if report.profile.exponents != exp["exponents"]:
                mismatches.append("exponents")
            if report.profile.classification != exp["classification"]:
                mismatches.append("classification")
            if report.tau != exp["tau"]:
                mismatches.append("tau")
        else:
            text = job.read_text()
            if job.suffix == ".lines":
                A = parse_lines_file(text)
                report = analyze(A.defining_polynomial(), arrangement=A,
                                 kmax=args.kmax, rng=rng)
            else:
                ci = parse_curve(text.strip(), rng=rng, strict=args.strict)
                report = analyze(ci.poly, e=ci.components, arrangement=ci.lines,
                                 mu_mode=args.mu_mode, kmax=args.kmax, rng=rng)
            mismatches = []
        bad = [v.name for v in report.verdicts if v.applicable and not v.ok]
        ok = not bad and not mismatches
        failed = failed or not ok
        results.append({
            "name": name, "ok": ok, "failed_verdicts": bad,
            "expectation_mismatches": mismatches,
            "exponents": report.profile.exponents,
            "classification": report.profile.classification,
            "tau": report.tau,
        })
        if not args.json_only:
            print(f"{name}: {'ok' if ok else 'FAIL ' + str(bad + mismatches)}",
                  file=sys.stderr)
    payload = {"version": __version__, "seed": args.seed,
               "command": "verify", "corpus": args.corpus, "results": results}
    _emit(payload, "", args.json_only)
    return EXIT_VERDICT if failed else EXIT_OK


def cmd_random(args) -> int:
    rng = random.Random(args.seed)
    results = []
    failures = 0
    for i in range(args.count):
        d = rng.randint(3, args.lines)
        A = (random_free_arrangement(rng, d) if args.free
             else random_arrangement(rng, d))
        f = A.defining_polynomial()
        lattice = A.lattice()   # lattice consistency asserted internally
        profile = A.profile()
        # arrangement singularities are ordinary and quasi-homogeneous, so
        # the lattice gives tau exactly; the Milnor-algebra computation is
        # cross-checked on the small cases to keep the campaign fast
        tau = combinatorial_tau_mu(A)
        checks: dict[str, bool] = {}
        if d <= 5:
            checks["tau_matches_milnor_algebra"] = tjurina_total(f) == tau
        if not profile.below_scope:
            from .arrangement import cor20_check, thm5_bounds
            checks["thm5"] = thm5_bounds(A, profile).ok
            checks["cor20"] = cor20_check(A, profile, tau).ok
            checks["cor2"] = cor2_bounds(profile, tau).ok
        if args.free and not profile.below_scope:
            checks["free"] = profile.is_free
            j = rng.randrange(A.d)
            rec = deletion_classify(A, j, profile=profile)
            checks["deletion_iff"] = rec.freeness_iff_ok
            if rec.deleted_free:
                back = addition_classify(A.delete(j), A.lines[j])
                checks["addition_iff"] = back.freeness_iff_ok
                checks["round_trip"] = (back.extended_profile.exponents
                                        == profile.exponents)
        ok = all(checks.values())
        failures += 0 if ok else 1
        results.append({
            "index": i, "d": d, "ok": ok, "checks": checks,
            "exponents": profile.exponents,
            "classification": profile.classification, "tau": tau,
            "lines": [[str(c) for c in l.rational_coeffs()] for l in A.lines],
        })
        if not args.json_only:
            print(f"#{i}: d={d} exponents={profile.exponents} "
                  f"{'ok' if ok else 'FAIL'}", file=sys.stderr)
    payload = {"version": __version__, "seed": args.seed,
               "command": "random-arrangements", "count": args.count,
               "free": args.free, "failures": failures, "results": results}
    _emit(payload, "", args.json_only)
    return EXIT_VERDICT if failures else EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="freecurve",
        description="Syzygy-based invariants of reduced plane curves")
    ap.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="random seed")
    common.add_argument("--kmax", type=int, default=None,
                        help="generator search bound override")
    common.add_argument("--strict", action="store_true",
                        help="deterministic squarefreeness check")
    common.add_argument("--json-only", action="store_true",
                        help="suppress the stderr summary")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="full invariant report for a curve expression")
    p.add_argument("curve")
    p.add_argument("--mu-mode", default=None,
                   choices=["rational_points", "arrangement",
                            "assume_quasihomogeneous"])
    p.add_argument("--components", type=int, default=None,
                   help="assert the number of irreducible components")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("arrangement", parents=[common],
                       help="arrangement analytics for a .lines file or expression")
    p.add_argument("input")
    p.set_defaults(func=cmd_arrangement)

    p = sub.add_parser("delete", parents=[common],
                       help="addition-deletion classification of removing one line")
    p.add_argument("input")
    p.add_argument("--line", type=int, required=True, help="line index (0-based)")
    p.set_defaults(func=cmd_delete)

    p = sub.add_parser("add", parents=[common],
                       help="addition-deletion classification of adding a line")
    p.add_argument("input")
    p.add_argument("--line", required=True,
                   help='new line, e.g. "x+2y+z" or "1 2 1"')
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("verify", parents=[common],
                       help="run every applicable theorem check over a corpus")
    p.add_argument("--corpus", default="builtin",
                   help='"builtin" or a directory of .lines/.curve files')
    p.add_argument("--mu-mode", default=None,
                   choices=["rational_points", "arrangement",
                            "assume_quasihomogeneous"])
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random-arrangements", parents=[common],
                       help="property campaign on seeded random arrangements")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--lines", type=int, default=10,
                   help="maximum number of lines per arrangement")
    p.add_argument("--free", action="store_true",
                   help="generate free (supersolvable) arrangements and run "
                        "the addition-deletion round trip")
    p.set_defaults(func=cmd_random)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, InputError, ValueError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (IdentityViolation, SyzygyError, ArrangementError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
