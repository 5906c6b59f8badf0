"""Input parsing: polynomial expressions, arrangement files, and the
reconstruction of line arrangements from factored polynomials.

The expression grammar supports integer and rational literals, the
variables x, y, z, the operators + - * / ^, parentheses, and implicit
multiplication by juxtaposition ("(x+y)(x-y)", "2y").  Division is only
allowed by nonzero rational constants.  The top-level product structure of
the input is preserved so each factor can be checked for homogeneity and
counted as a curve component.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .arrangement import Arrangement, Line
from .cyclotomic import CyclotomicField
from .ring import (HomPoly, Mono, poly_gcd, restrict_to_line,
                   squarefree_check)


class ParseError(ValueError):
    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InputError(ValueError):
    """Semantically invalid curve input (inhomogeneous, not squarefree, ...)."""


# ---------------------------------------------------------------------------
# Tokenizer / recursive-descent parser to a general (inhomogeneous) poly dict


_Poly = dict[Mono, Fraction]  # general polynomial, possibly mixed degrees


def _p_add(a: _Poly, b: _Poly) -> _Poly:
    out = dict(a)
    for m, c in b.items():
        out[m] = out.get(m, Fraction(0)) + c
    return {m: c for m, c in out.items() if c != 0}


def _p_mul(a: _Poly, b: _Poly) -> _Poly:
    out: _Poly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
            out[m] = out.get(m, Fraction(0)) + c1 * c2
    return {m: c for m, c in out.items() if c != 0}


def _p_scale(a: _Poly, c: Fraction) -> _Poly:
    return {m: co * c for m, co in a.items()} if c else {}


def _p_pow(a: _Poly, n: int) -> _Poly:
    out: _Poly = {(0, 0, 0): Fraction(1)}
    for _ in range(n):
        out = _p_mul(out, a)
    return out


_VAR_INDEX = {"x": 0, "y": 1, "z": 2}


@dataclass
class _Token:
    kind: str   # "int", "var", "op", "end"
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    toks = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            toks.append(_Token("int", text[i:j], i))
            i = j
        elif ch in _VAR_INDEX:
            toks.append(_Token("var", ch, i))
            i += 1
        elif ch in "+-*/^()":
            toks.append(_Token("op", ch, i))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    toks.append(_Token("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def next(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, text: str) -> _Token:
        t = self.next()
        if t.kind == "end" or t.text != text:
            raise ParseError(f"expected {text!r}, found {t.text or 'end of input'}", t.pos)
        return t

    # expr := term (('+'|'-') term)*
    def expr(self) -> _Poly:
        val = self.term()
        while self.peek().text in ("+", "-"):
            op = self.next().text
            rhs = self.term()
            val = _p_add(val, rhs if op == "+" else _p_scale(rhs, Fraction(-1)))
        return val

    # term := unary (('*'|'/') unary | juxtaposed unary)*
    def term(self) -> _Poly:
        factors = [self.unary()]
        while True:
            t = self.peek()
            if t.text in ("*", "/"):
                self.next()
                rhs = self.unary()
                if t.text == "/":
                    if len(rhs) != 1 or (0, 0, 0) not in rhs:
                        raise ParseError("division only by nonzero rational constants", t.pos)
                    rhs = {(0, 0, 0): 1 / rhs[(0, 0, 0)]}
                factors.append(rhs)
            elif t.kind in ("int", "var") or t.text == "(":
                factors.append(self.power())  # juxtaposition binds like '*'
            else:
                break
        out: _Poly = {(0, 0, 0): Fraction(1)}
        for f in factors:
            out = _p_mul(out, f)
        self._factors = factors
        return out

    # unary := '-' unary | power
    def unary(self) -> _Poly:
        if self.peek().text == "-":
            self.next()
            return _p_scale(self.unary(), Fraction(-1))
        return self.power()

    # power := primary ('^' int)?
    def power(self) -> _Poly:
        base = self.primary()
        if self.peek().text == "^":
            pos = self.next().pos
            t = self.next()
            if t.kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            return _p_pow(base, int(t.text))
        return base

    def primary(self) -> _Poly:
        t = self.next()
        if t.kind == "int":
            return {(0, 0, 0): Fraction(int(t.text))}
        if t.kind == "var":
            m = [0, 0, 0]
            m[_VAR_INDEX[t.text]] = 1
            return {tuple(m): Fraction(1)}
        if t.text == "(":
            val = self.expr()
            self.expect(")")
            return val
        raise ParseError(f"unexpected {t.text or 'end of input'!s}", t.pos)


def _top_level_factors(text: str) -> tuple[_Poly, list[tuple[_Poly, int]]]:
    """Parse and return (full polynomial, top-level (base, power) factors)."""
    p = _Parser(text)
    # re-run the top level by hand so the factor structure survives only when
    # the whole expression is a single product
    val = p.term()
    factors = [(f, 1) for f in getattr(p, "_factors", [val])]
    if p.peek().text in ("+", "-"):
        while p.peek().text in ("+", "-"):
            op = p.next().text
            rhs = p.term()
            val = _p_add(val, rhs if op == "+" else _p_scale(rhs, Fraction(-1)))
        factors = [(val, 1)]
    if p.peek().kind != "end":
        raise ParseError(f"unexpected {p.peek().text!r}", p.peek().pos)
    if not val:
        raise InputError("the zero polynomial is not a curve")
    return val, factors


def _to_hompoly(p: _Poly, what: str = "polynomial") -> HomPoly:
    degs = {m[0] + m[1] + m[2] for m in p}
    if len(degs) != 1:
        raise InputError(f"{what} is not homogeneous: degrees {sorted(degs)}")
    return HomPoly(degs.pop(), p)


# ---------------------------------------------------------------------------
# Curve input


@dataclass
class CurveInput:
    """A parsed reduced-curve input with its factored structure."""

    source: str
    poly: HomPoly
    factors: list[HomPoly]
    components: int
    components_assumed: bool   # True if some factor's irreducibility was assumed
    lines: "Arrangement | None" = None   # set when the curve splits into lines


def _vars_used(f: HomPoly) -> set[int]:
    return {v for m in f.terms for v in range(3) if m[v] > 0}


def _conic_rank(f: HomPoly) -> int:
    g = [[Fraction(0)] * 3 for _ in range(3)]
    for m, c in f.terms.items():
        vs = [v for v in range(3) for _ in range(m[v])]
        i, j = vs[0], vs[1]
        if i == j:
            g[i][i] += c
        else:
            g[i][j] += c / 2
            g[j][i] += c / 2
    rank = 0
    rows = [r[:] for r in g]
    for col in range(3):
        piv = next((r for r in range(rank, 3) if rows[r][col] != 0), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(3):
            if r != rank and rows[r][col] != 0:
                s = rows[r][col] / rows[rank][col]
                rows[r] = [a - s * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _factor_components(f: HomPoly) -> tuple[int, bool, list[Line] | None]:
    """(number of irreducible components, assumed?, split into lines if any)."""
    if f.degree == 1:
        coeffs = [f.terms.get(m, Fraction(0))
                  for m in [(1, 0, 0), (0, 1, 0), (0, 0, 1)]]
        return 1, False, [Line.from_coeffs(coeffs)]
    used = _vars_used(f)
    if len(used) <= 2:
        # a squarefree binary form is a product of deg(f) distinct lines
        lines = _split_binary_form(f, sorted(used))
        return f.degree, False, lines
    if f.degree == 2:
        rank = _conic_rank(f)
        if rank == 3:
            return 1, False, None
        if rank == 2:
            return 2, False, None
        raise InputError("rank-1 conic factor is a double line (not squarefree)")
    # higher-degree forms in all three variables: assume irreducible
    return 1, True, None


def _rational_root_of_power(c: Fraction, m: int) -> Fraction | None:
    """A rational s with s^m = c, if one exists."""
    if c == 0:
        return Fraction(0)
    if c < 0 and m % 2 == 0:
        return None
    sign = -1 if c < 0 else 1
    num, den = abs(c.numerator), c.denominator
    rn = round(num ** (1.0 / m))
    rd = round(den ** (1.0 / m))
    for dn in (rn - 1, rn, rn + 1):
        for dd in (rd - 1, rd, rd + 1):
            if dn >= 0 and dd > 0 and dn ** m == num and dd ** m == den:
                return sign * Fraction(dn, dd)
    return None


def _split_binary_form(f: HomPoly, used: list[int]) -> list[Line] | None:
    """Split a binary form into lines; handles rational roots and the
    binomial shape u^m - c*v^m (over a cyclotomic field).  Returns None if
    the roots live in a field this tool does not model."""
    if len(used) == 1:
        return None if f.degree > 1 else None
    u, v = used
    # dense coefficients in the u-exponent
    coeffs = [Fraction(0)] * (f.degree + 1)
    for m, c in f.terms.items():
        coeffs[m[u]] += c
    nonzero = [i for i, c in enumerate(coeffs) if c != 0]
    d = f.degree

    def line_from(cu, cv) -> Line:
        t = [0, 0, 0]
        t[u], t[v] = cu, cv
        return Line.from_coeffs(t)

    if nonzero in ([0, d],):
        # a*u^d + b*v^d: roots are s * (d-th roots of unity)
        ratio = -coeffs[0] / coeffs[d]      # u^d = ratio * v^d
        s = _rational_root_of_power(ratio, d)
        if s is None:
            return None
        if s == 0:
            return None
        fld = CyclotomicField(d)
        return [line_from(fld.one(), -s * fld.zeta(k)) for k in range(d)]
    # general: try full factorization into rational roots
    lines = []
    import sympy

    t = sympy.Symbol("t")
    expr = sum(sympy.Rational(c.numerator, c.denominator) * t ** i
               for i, c in enumerate(coeffs))
    content, factors = sympy.factor_list(sympy.Poly(expr, t))
    total = 0
    for fac, mult in factors:
        if mult > 1:
            raise InputError("binary form factor is not squarefree")
        if fac.degree() > 1:
            return None
        total += 1
        fc = fac.all_coeffs()  # [a, b] meaning a*t + b, t = u/v degree
        a = Fraction(int(fc[0].p), int(fc[0].q))
        b = Fraction(int(fc[1].p), int(fc[1].q)) if len(fc) > 1 else Fraction(0)
        lines.append(line_from(a, b))
    if total < d:
        # v^(d - total) divides f; more than one copy is not squarefree
        if d - total > 1:
            raise InputError("binary form factor is not squarefree")
        lines.append(line_from(Fraction(0), Fraction(1)))
    return lines


def _pairwise_coprime(factors: list[HomPoly], rng: random.Random) -> bool:
    """Monte Carlo coprimality via gcds of restrictions to random lines."""
    for i in range(len(factors)):
        for j in range(i + 1, len(factors)):
            fi, fj = factors[i], factors[j]
            shared_every_time = True
            for _ in range(6):
                p = tuple(rng.randint(-1000, 1000) for _ in range(3))
                q = tuple(rng.randint(-1000, 1000) for _ in range(3))
                a = restrict_to_line(fi, p, q)
                b = restrict_to_line(fj, p, q)
                if all(c == 0 for c in a) or all(c == 0 for c in b):
                    continue
                if len(poly_gcd(a, b)) <= 1:
                    shared_every_time = False
                    break
            if shared_every_time:
                return False
    return True


def parse_curve(text: str, rng: random.Random | None = None,
                strict: bool = False,
                assume_components: int | None = None) -> CurveInput:
    """Parse a curve expression, validate it, and count components.

    ``assume_components`` overrides the component count for factors whose
    irreducibility cannot be certified here.
    """
    rng = rng or random.Random(20260823)
    raw, raw_factors = _top_level_factors(text)
    factors: list[HomPoly] = []
    for base, _ in raw_factors:
        h = _to_hompoly(base, "factor")
        if h.degree > 0:
            factors.append(h)
    poly = _to_hompoly(raw)
    if poly.degree < 1:
        raise InputError("constant input does not define a curve")
    if not squarefree_check(poly, rng=rng, strict=strict):
        raise InputError("polynomial is not squarefree (curve must be reduced)")
    if len(factors) > 1 and not _pairwise_coprime(factors, rng):
        raise InputError("top-level factors are not pairwise coprime")
    e = 0
    assumed = False
    all_lines: list[Line] | None = []
    for h in factors:
        ne, na, lines = _factor_components(h)
        e += ne
        assumed = assumed or na
        if all_lines is not None and lines is not None:
            all_lines.extend(lines)
        else:
            all_lines = None
    if assume_components is not None:
        e = assume_components
        assumed = False
    arrangement = None
    if all_lines is not None and len(all_lines) == poly.degree and poly.degree >= 1:
        arrangement = Arrangement(all_lines, poly=poly.content_normalized())
    return CurveInput(text, poly, factors, e, assumed, arrangement)


# ---------------------------------------------------------------------------
# Arrangement files: one projective line per row, "alpha beta gamma"


def parse_lines_file(text: str) -> Arrangement:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        parts = body.split()
        if len(parts) != 3:
            raise ParseError(f"line {lineno}: expected three rationals, got {len(parts)}")
        try:
            rows.append([Fraction(p) for p in parts])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise InputError("arrangement file contains no lines")
    return Arrangement.from_coeff_rows(rows)
