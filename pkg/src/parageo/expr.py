"""Exact scalar expressions: multivariate rational functions over Q.

An Expr is a quotient num/den of multivariate polynomials with Fraction
coefficients, attached to a fixed tuple of coordinate names.  The stored
form is canonical:

  * terms are kept sorted in descending lexicographic order on the
    exponent tuples (lex order follows the declared coordinate order),
  * coefficients are nonzero Fractions, zero terms are dropped,
  * gcd(num, den) = 1, with den scaled to a primitive integer polynomial
    whose leading coefficient is positive (den == 1 for polynomials).

Because the form is canonical, two Exprs are mathematically equal iff
they are structurally identical, and is_zero reduces to an exact check
on the numerator.  No floating point is used anywhere.

Polynomials are handled internally as dicts mapping exponent tuples to
Fraction coefficients; only frozen canonical tuples are stored on Expr.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Iterator, Mapping, Sequence

EXP_LIMIT = 2**63 - 1  # exponents stay machine-word sized


class ExprError(Exception):
    """Base class for expression errors."""


class ExprSyntaxError(ExprError):
    """Parse-time error; carries the 0-based offset into the source text."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExprDomainError(ExprError):
    """Division by zero, chart mismatch, evaluation at a pole, overflow."""


# ---------------------------------------------------------------------------
# term-map helpers: dict[tuple[int, ...], Fraction], zero coefficients absent
# ---------------------------------------------------------------------------

def _tm_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for mono, c in b.items():
        s = out.get(mono, Fraction(0)) + c
        if s:
            out[mono] = s
        else:
            out.pop(mono, None)
    return out


def _tm_neg(a: dict) -> dict:
    return {mono: -c for mono, c in a.items()}


def _tm_scale(a: dict, c: Fraction) -> dict:
    if not c:
        return {}
    return {mono: coef * c for mono, coef in a.items()}


def _mono_mul(m1: tuple, m2: tuple) -> tuple:
    out = tuple(e1 + e2 for e1, e2 in zip(m1, m2))
    if any(e > EXP_LIMIT for e in out):
        raise ExprDomainError("exponent overflow")
    return out


def _tm_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            mono = _mono_mul(m1, m2)
            s = out.get(mono, Fraction(0)) + c1 * c2
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return out


def _tm_pow(a: dict, k: int) -> dict:
    if k < 0:
        raise ExprDomainError("negative exponent")
    if k > EXP_LIMIT:
        raise ExprDomainError("exponent overflow")
    nvars = len(next(iter(a))) if a else 0
    out = {(0,) * nvars: Fraction(1)} if a or k == 0 else {}
    base = dict(a)
    while k:
        if k & 1:
            out = _tm_mul(out, base)
        k >>= 1
        if k:
            base = _tm_mul(base, base)
    return out


def _tm_lead(a: dict) -> tuple:
    # lex-greatest monomial; lex order compares exponent tuples directly
    return max(a)


def _tm_diff(a: dict, var: int) -> dict:
    out: dict = {}
    for mono, c in a.items():
        e = mono[var]
        if e:
            m = mono[:var] + (e - 1,) + mono[var + 1:]
            s = out.get(m, Fraction(0)) + c * e
            if s:
                out[m] = s
            else:
                out.pop(m, None)
    return out


def _tm_eval(a: dict, point: Sequence[Fraction]) -> Fraction:
    total = Fraction(0)
    for mono, c in a.items():
        v = c
        for e, p in zip(mono, point):
            if e:
                v *= p**e
        total += v
    return total


def _tm_degree(a: dict, var: int) -> int:
    return max((mono[var] for mono in a), default=0)


# ---------------------------------------------------------------------------
# multivariate gcd over Q, via primitive PRS on integer-primitive polynomials
# ---------------------------------------------------------------------------

def _tm_rational_content(a: dict) -> Fraction:
    """Positive rational c such that a/c has coprime integer coefficients."""
    assert a
    num_gcd = 0
    den_lcm = 1
    for c in a.values():
        num_gcd = math.gcd(num_gcd, abs(c.numerator))
        den_lcm = den_lcm * c.denominator // math.gcd(den_lcm, c.denominator)
    return Fraction(num_gcd, den_lcm)


def _tm_int_primitive(a: dict) -> dict:
    """Scale to integer coefficients with content 1 and positive lex-leading coeff."""
    if not a:
        return {}
    c = _tm_rational_content(a)
    if a[_tm_lead(a)] < 0:
        c = -c
    return {mono: coef / c for mono, coef in a.items()}


def _tm_divexact(a: dict, b: dict) -> dict:
    """Exact multivariate division a/b; raises if the division is not exact."""
    if not b:
        raise ExprDomainError("polynomial division by zero")
    rem = dict(a)
    quot: dict = {}
    blead = _tm_lead(b)
    bc = b[blead]
    while rem:
        rlead = _tm_lead(rem)
        qmono = tuple(er - eb for er, eb in zip(rlead, blead))
        if any(e < 0 for e in qmono):
            raise ExprDomainError("inexact polynomial division")
        qc = rem[rlead] / bc
        quot[qmono] = quot.get(qmono, Fraction(0)) + qc
        rem = _tm_add(rem, _tm_neg(_tm_mul({qmono: qc}, b)))
    return {m: c for m, c in quot.items() if c}


def _to_univariate(a: dict, var: int) -> dict:
    """View as a polynomial in coordinate `var` with term-map coefficients."""
    out: dict = {}
    for mono, c in a.items():
        e = mono[var]
        rest = mono[:var] + (0,) + mono[var + 1:]
        coeff = out.setdefault(e, {})
        s = coeff.get(rest, Fraction(0)) + c
        if s:
            coeff[rest] = s
        else:
            coeff.pop(rest, None)
    return {e: coeff for e, coeff in out.items() if coeff}


def _from_univariate(u: dict, var: int) -> dict:
    out: dict = {}
    for e, coeff in u.items():
        for mono, c in coeff.items():
            m = mono[:var] + (mono[var] + e,) + mono[var + 1:]
            out[m] = out.get(m, Fraction(0)) + c
    return {m: c for m, c in out.items() if c}


def _uni_content(u: dict) -> dict:
    g: dict = {}
    for coeff in u.values():
        g = _tm_gcd_int(g, coeff)
    return g


def _uni_primitive(u: dict) -> tuple[dict, dict]:
    cont = _uni_content(u)
    prim = {e: _tm_divexact(c, cont) for e, c in u.items()}
    # also strip the rational content; over Q the polynomial content is a
    # unit in the base case, and without this step pseudo-remainder
    # coefficients double in bit size every round
    num_gcd = 0
    den_lcm = 1
    for coeff in prim.values():
        for c in coeff.values():
            num_gcd = math.gcd(num_gcd, abs(c.numerator))
            den_lcm = den_lcm * c.denominator // math.gcd(den_lcm,
                                                          c.denominator)
    rc = Fraction(num_gcd, den_lcm)
    if rc != 0 and rc != 1:
        prim = {e: _tm_scale(c, 1 / rc) for e, c in prim.items()}
    return prim, cont


def _uni_mul_coeff(u: dict, k: dict) -> dict:
    return {e: _tm_mul(c, k) for e, c in u.items()}


def _uni_sub(a: dict, b: dict) -> dict:
    out = {e: dict(c) for e, c in a.items()}
    for e, c in b.items():
        cur = out.setdefault(e, {})
        merged = _tm_add(cur, _tm_neg(c))
        if merged:
            out[e] = merged
        else:
            out.pop(e, None)
    return out


def _uni_shift_mul(u: dict, k: int, var: int, coeff: dict) -> dict:
    """u * coeff * x_var^k in univariate view."""
    out: dict = {}
    for e, c in u.items():
        out[e + k] = _tm_mul(c, coeff)
    return out


def _tm_gcd_int(a: dict, b: dict) -> dict:
    """Gcd of integer-primitive polynomials; result integer-primitive, lc > 0."""
    if not a:
        return _tm_int_primitive(b)
    if not b:
        return _tm_int_primitive(a)
    nvars = len(_tm_lead(a))
    var = next((v for v in range(nvars)
                if _tm_degree(a, v) or _tm_degree(b, v)), None)
    if var is None:
        return {(0,) * nvars: Fraction(1)}  # both constant: units of Q
    if _tm_degree(a, var) == 0:
        ub = _to_univariate(b, var)
        return _tm_gcd_int(a, _uni_content(ub))
    if _tm_degree(b, var) == 0:
        ua = _to_univariate(a, var)
        return _tm_gcd_int(_uni_content(ua), b)

    ua = _to_univariate(a, var)
    ub = _to_univariate(b, var)
    pa, ca = _uni_primitive(ua)
    pb, cb = _uni_primitive(ub)
    cg = _tm_gcd_int(ca, cb)
    # primitive PRS: pseudo-remainders with primitive parts taken each round
    while pb:
        da, db = max(pa), max(pb)
        if da < db:
            pa, pb = pb, pa
            continue
        r = dict(pa)
        lead_b = pb[db]
        while r and max(r) >= db:
            dr = max(r)
            lead_r = r[dr]
            r = _uni_sub(_uni_mul_coeff(r, lead_b),
                         _uni_shift_mul(pb, dr - db, var, lead_r))
        pa, pb = pb, (_uni_primitive(r)[0] if r else {})
    g = _from_univariate(_uni_mul_coeff(pa, cg), var)
    return _tm_int_primitive(g)


def _tm_gcd(a: dict, b: dict) -> dict:
    if not a:
        return _tm_int_primitive(b)
    if not b:
        return _tm_int_primitive(a)
    return _tm_gcd_int(_tm_int_primitive(a), _tm_int_primitive(b))


def _tm_sqrt(a: dict) -> dict | None:
    """Polynomial square root if one exists, else None."""
    if not a:
        return {}
    lead = _tm_lead(a)
    if any(e % 2 for e in lead):
        return None
    lc = a[lead]
    if lc < 0:
        return None
    rn, rd = math.isqrt(lc.numerator), math.isqrt(lc.denominator)
    if rn * rn != lc.numerator or rd * rd != lc.denominator:
        return None
    half = tuple(e // 2 for e in lead)
    s = {half: Fraction(rn, rd)}
    two_lead = {half: 2 * Fraction(rn, rd)}
    for _ in range(len(a) * len(a) + 2):
        r = _tm_add(a, _tm_neg(_tm_mul(s, s)))
        if not r:
            return s
        rlead = _tm_lead(r)
        qmono = tuple(er - eh for er, eh in zip(rlead, half))
        if any(e < 0 for e in qmono):
            return None
        s[qmono] = s.get(qmono, Fraction(0)) + r[rlead] / two_lead[half]
    return None


# ---------------------------------------------------------------------------
# Expr
# ---------------------------------------------------------------------------

def _freeze(a: dict) -> tuple:
    return tuple(sorted(a.items(), key=lambda t: t[0], reverse=True))


def _thaw(t: tuple) -> dict:
    return dict(t)


class Expr:
    """Canonical exact rational function over the chart's coordinates."""

    __slots__ = ("coords", "num", "den")

    def __init__(self, coords: tuple, num: tuple, den: tuple):
        # internal: use the factory methods / operators, not this constructor
        self.coords = coords
        self.num = num
        self.den = den

    # -- construction -------------------------------------------------------

    @staticmethod
    def _make(coords: tuple, num: dict, den: dict) -> "Expr":
        if not den:
            raise ExprDomainError("division by zero")
        if not num:
            one = {(0,) * len(coords): Fraction(1)}
            return Expr(coords, (), _freeze(one))
        g = _tm_gcd(num, den)
        if len(g) > 1 or _tm_lead(g) != (0,) * len(coords):
            num = _tm_divexact(num, g)
            den = _tm_divexact(den, g)
        # scale so den is an integer-primitive polynomial with positive lc
        c = _tm_rational_content(den)
        if den[_tm_lead(den)] < 0:
            c = -c
        if c != 1:
            num = _tm_scale(num, 1 / c)
            den = _tm_scale(den, 1 / c)
        return Expr(coords, _freeze(num), _freeze(den))

    @staticmethod
    def const(coords: Sequence[str], value) -> "Expr":
        coords = tuple(coords)
        v = Fraction(value)
        num = {(0,) * len(coords): v} if v else {}
        den = {(0,) * len(coords): Fraction(1)}
        return Expr(coords, _freeze(num), _freeze(den))

    @staticmethod
    def zero(coords: Sequence[str]) -> "Expr":
        return Expr.const(coords, 0)

    @staticmethod
    def one(coords: Sequence[str]) -> "Expr":
        return Expr.const(coords, 1)

    @staticmethod
    def var(coords: Sequence[str], name: str) -> "Expr":
        coords = tuple(coords)
        if name not in coords:
            raise ExprDomainError(f"unknown coordinate {name!r}")
        i = coords.index(name)
        mono = tuple(1 if j == i else 0 for j in range(len(coords)))
        den = {(0,) * len(coords): Fraction(1)}
        return Expr(coords, _freeze({mono: Fraction(1)}), _freeze(den))

    # -- predicates ----------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.num

    @property
    def is_polynomial(self) -> bool:
        return len(self.den) == 1 and self.den[0][0] == (0,) * len(self.coords)

    @property
    def is_constant(self) -> bool:
        zero_mono = (0,) * len(self.coords)
        return (self.is_polynomial
                and (not self.num
                     or (len(self.num) == 1 and self.num[0][0] == zero_mono)))

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ExprDomainError(f"not a constant: {self}")
        if not self.num:
            return Fraction(0)
        return self.num[0][1] / self.den[0][1]

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Expr":
        if isinstance(other, Expr):
            if other.coords != self.coords:
                raise ExprDomainError("coordinate charts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return Expr.const(self.coords, other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        n1, d1 = _thaw(self.num), _thaw(self.den)
        n2, d2 = _thaw(o.num), _thaw(o.den)
        return Expr._make(self.coords,
                          _tm_add(_tm_mul(n1, d2), _tm_mul(n2, d1)),
                          _tm_mul(d1, d2))

    __radd__ = __add__

    def __neg__(self):
        return Expr(self.coords, _freeze(_tm_neg(_thaw(self.num))), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return Expr._make(self.coords,
                          _tm_mul(_thaw(self.num), _thaw(o.num)),
                          _tm_mul(_thaw(self.den), _thaw(o.den)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero:
            raise ExprDomainError("division by zero")
        return Expr._make(self.coords,
                          _tm_mul(_thaw(self.num), _thaw(o.den)),
                          _tm_mul(_thaw(self.den), _thaw(o.num)))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ExprDomainError("negative exponent")
        if k == 0:
            return Expr.one(self.coords)
        if self.is_zero:
            return self
        return Expr._make(self.coords,
                          _tm_pow(_thaw(self.num), k),
                          _tm_pow(_thaw(self.den), k))

    # -- structure -----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Expr.const(self.coords, other)
        if not isinstance(other, Expr):
            return NotImplemented
        return (self.coords == other.coords and self.num == other.num
                and self.den == other.den)

    def __hash__(self):
        return hash((self.coords, self.num, self.den))

    def __bool__(self):
        return not self.is_zero

    # -- calculus ------------------------------------------------------------

    def diff(self, name: str) -> "Expr":
        if name not in self.coords:
            raise ExprDomainError(f"unknown coordinate {name!r}")
        v = self.coords.index(name)
        n, d = _thaw(self.num), _thaw(self.den)
        if self.is_polynomial:
            one = {(0,) * len(self.coords): Fraction(1)}
            return Expr._make(self.coords, _tm_diff(n, v), one)
        # quotient rule: (n'd - nd') / d^2
        num = _tm_add(_tm_mul(_tm_diff(n, v), d),
                      _tm_neg(_tm_mul(n, _tm_diff(d, v))))
        return Expr._make(self.coords, num, _tm_mul(d, d))

    def eval(self, point) -> Fraction:
        """Evaluate at a point given as a mapping name->value or a sequence."""
        if isinstance(point, Mapping):
            vals = [Fraction(point[c]) for c in self.coords]
        else:
            if len(point) != len(self.coords):
                raise ExprDomainError("point arity mismatch")
            vals = [Fraction(p) for p in point]
        den = _tm_eval(_thaw(self.den), vals)
        if den == 0:
            raise ExprDomainError("evaluation at a pole of the denominator")
        return _tm_eval(_thaw(self.num), vals) / den

    def sqrt_poly(self):
        """Exact square root if this is the square of a polynomial, else None."""
        if not self.is_polynomial:
            return None
        r = _tm_sqrt(_thaw(self.num))
        if r is None:
            return None
        one = {(0,) * len(self.coords): Fraction(1)}
        return Expr._make(self.coords, r, one)

    # -- printing ------------------------------------------------------------

    def _poly_str(self, terms: tuple) -> str:
        if not terms:
            return "0"
        parts = []
        for idx, (mono, coef) in enumerate(terms):
            factors = [f"{n}^{e}" if e > 1 else n
                       for n, e in zip(self.coords, mono) if e]
            mag = abs(coef)
            if factors:
                body = "*".join(([] if mag == 1 else [str(mag)]) + factors)
            else:
                body = str(mag)
            if idx == 0:
                parts.append(body if coef > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coef > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self):
        num = self._poly_str(self.num)
        if self.is_polynomial:
            return num
        return f"({num})/({self._poly_str(self.den)})"

    def __repr__(self):
        return f"Expr({self})"


# ---------------------------------------------------------------------------
# parser: see grammar.ebnf at the package root
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                       r"|(?P<op>[-+*/^()]))")


class _Parser:
    def __init__(self, text: str, coords: tuple):
        self.text = text
        self.coords = coords
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None or m.end() == pos:
                stripped = text[pos:].lstrip()
                if not stripped:
                    break
                at = len(text) - len(stripped)
                raise ExprSyntaxError(f"unexpected character {text[at]!r}", at)
            if m.lastgroup is not None:
                self.tokens.append((m.lastgroup, m.group(m.lastgroup),
                                    m.start(m.lastgroup)))
            pos = m.end()
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        if tok is not None:
            self.i += 1
        return tok

    def expect_op(self, op: str):
        tok = self.next()
        if tok is None:
            raise ExprSyntaxError(f"expected {op!r}, found end of input",
                                  len(self.text))
        if tok[0] != "op" or tok[1] != op:
            raise ExprSyntaxError(f"expected {op!r}, found {tok[1]!r}", tok[2])

    def parse(self) -> Expr:
        e = self.sum()
        tok = self.peek()
        if tok is not None:
            raise ExprSyntaxError(f"unexpected token {tok[1]!r}", tok[2])
        return e

    def sum(self) -> Expr:
        e = self.product()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "+-":
                return e
            self.next()
            rhs = self.product()
            e = e + rhs if tok[1] == "+" else e - rhs

    def product(self) -> Expr:
        e = self.unary()
        while True:
            tok = self.peek()
            if tok is None or tok[0] != "op" or tok[1] not in "*/":
                return e
            self.next()
            rhs = self.unary()
            if tok[1] == "*":
                e = e * rhs
            else:
                if not rhs.is_constant:
                    raise ExprSyntaxError(
                        "division is only allowed by a nonzero constant",
                        tok[2])
                if rhs.is_zero:
                    raise ExprSyntaxError("division by zero", tok[2])
                e = e / rhs

    def unary(self) -> Expr:
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] in "+-":
            self.next()
            e = self.unary()
            return e if tok[1] == "+" else -e
        return self.power()

    def power(self) -> Expr:
        e = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "op" and tok[1] == "^":
            self.next()
            etok = self.next()
            if etok is None:
                raise ExprSyntaxError("expected exponent, found end of input",
                                      len(self.text))
            if etok[0] != "int":
                raise ExprSyntaxError(
                    "exponent must be a nonnegative integer literal", etok[2])
            k = int(etok[1])
            if k > EXP_LIMIT:
                raise ExprSyntaxError("exponent overflow", etok[2])
            e = e**k
        return e

    def atom(self) -> Expr:
        tok = self.next()
        if tok is None:
            raise ExprSyntaxError("unexpected end of input", len(self.text))
        kind, val, pos = tok
        if kind == "int":
            return Expr.const(self.coords, int(val))
        if kind == "name":
            if val not in self.coords:
                raise ExprSyntaxError(f"unknown coordinate {val!r}", pos)
            return Expr.var(self.coords, val)
        if kind == "op" and val == "(":
            e = self.sum()
            self.expect_op(")")
            return e
        raise ExprSyntaxError(f"unexpected token {val!r}", pos)


def parse_expr(text: str, coords: Sequence[str]) -> Expr:
    """Parse `text` over the given coordinate names into a canonical Expr."""
    coords = tuple(coords)
    if len(set(coords)) != len(coords):
        raise ExprDomainError("duplicate coordinate names")
    return _Parser(text, coords).parse()
