"""Exact sparse multivariate polynomials over the rationals.

Representation
--------------
A polynomial is stored as ``(vars, den, coeffs)`` where ``vars`` is the
ordered tuple of variable names, ``den`` is a positive integer, and
``coeffs`` maps a packed exponent key to an integer numerator; the
polynomial is (1/den) * sum(c * X^e).  Canonical form: no zero
coefficients, den > 0, and gcd(den, content(coeffs)) == 1.  The zero
polynomial is ``({}, den=1)``.

Exponent keys pack 16 bits per variable (variable 0 lowest), so the
product of monomials is integer addition of keys; the hot double loop
lives in :mod:`blowcube.kernel`.  Individual exponents must stay below
2**16, which the degree caps guarantee with a wide margin.

Term order is graded lexicographic (total degree first, then the exponent
of vars[0], vars[1], ...).  ``str()`` prints terms in descending order and
``parse_poly(str(p), p.vars) == p`` exactly.

Factorization, gcd and resultants are delegated to sympy; everything else
is native.
"""

from __future__ import annotations

import heapq
import math
import re
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

import sympy

from blowcube.errors import ParseError
from blowcube.kernel import add_scaled_packed, mul_packed

WIDTH = 16
MASK = (1 << WIDTH) - 1
EXP_LIMIT = 1 << WIDTH

Exponents = tuple[int, ...]


def pack(exps: Sequence[int]) -> int:
    key = 0
    for i, e in enumerate(exps):
        if not 0 <= e < EXP_LIMIT:
            raise ValueError(f"exponent {e} out of range")
        key |= e << (WIDTH * i)
    return key


def unpack(key: int, nvars: int) -> Exponents:
    return tuple((key >> (WIDTH * i)) & MASK for i in range(nvars))


def _key_total(key: int) -> int:
    total = 0
    while key:
        total += key & MASK
        key >>= WIDTH
    return total


def _normalize(den: int, coeffs: dict) -> tuple[int, dict]:
    coeffs = {k: c for k, c in coeffs.items() if c}
    if not coeffs:
        return 1, {}
    if den < 0:
        den = -den
        coeffs = {k: -c for k, c in coeffs.items()}
    g = den
    for c in coeffs.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    if g > 1:
        den //= g
        coeffs = {k: c // g for k, c in coeffs.items()}
    return den, coeffs


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "den", "coeffs", "_hash")

    def __init__(self, vars: tuple[str, ...], den: int, coeffs: dict):
        den, coeffs = _normalize(den, coeffs)
        object.__setattr__(self, "vars", tuple(vars))
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    # -- construction ------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "Poly":
        return cls(tuple(vars), 1, {})

    @classmethod
    def const(cls, vars: Sequence[str], q) -> "Poly":
        q = Fraction(q)
        if q == 0:
            return cls.zero(vars)
        return cls(tuple(vars), q.denominator, {0: q.numerator})

    @classmethod
    def var(cls, vars: Sequence[str], name: str) -> "Poly":
        vars = tuple(vars)
        i = vars.index(name)
        return cls(vars, 1, {pack([0] * i + [1]): 1})

    @classmethod
    def from_terms(cls, vars: Sequence[str], terms: Iterable[tuple[Sequence[int], object]]) -> "Poly":
        """Build from (exponents, coefficient) pairs; coefficients may repeat."""
        vars = tuple(vars)
        acc: dict[int, Fraction] = {}
        for exps, q in terms:
            if len(exps) != len(vars):
                raise ValueError("exponent tuple length does not match variables")
            key = pack(exps)
            acc[key] = acc.get(key, Fraction(0)) + Fraction(q)
        den = math.lcm(*(q.denominator for q in acc.values())) if acc else 1
        return cls(vars, den, {k: int(q * den) for k, q in acc.items()})

    # -- basic queries -----------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_constant(self) -> bool:
        return not self.coeffs or (len(self.coeffs) == 1 and 0 in self.coeffs)

    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError("not a constant polynomial")
        return Fraction(self.coeffs.get(0, 0), self.den)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return max(_key_total(k) for k in self.coeffs)

    def degree_in(self, name: str) -> int:
        i = self.vars.index(name)
        if not self.coeffs:
            return -1
        shift = WIDTH * i
        return max((k >> shift) & MASK for k in self.coeffs)

    def is_homogeneous(self) -> bool:
        if not self.coeffs:
            return True
        degs = {_key_total(k) for k in self.coeffs}
        return len(degs) == 1

    def terms(self) -> Iterator[tuple[Exponents, Fraction]]:
        """Terms in descending graded lexicographic order."""
        n = len(self.vars)
        keyed = [(_key_total(k), unpack(k, n), k) for k in self.coeffs]
        keyed.sort(reverse=True)
        for _, exps, k in keyed:
            yield exps, Fraction(self.coeffs[k], self.den)

    def leading(self) -> tuple[Exponents, Fraction]:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self.terms()))

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return Fraction(self.coeffs.get(pack(exps), 0), self.den)

    # -- arithmetic --------------------------------------------------

    def _check_same_vars(self, other: "Poly"):
        if self.vars != other.vars:
            raise ValueError(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            return self + Poly.const(self.vars, other)
        self._check_same_vars(other)
        L = math.lcm(self.den, other.den)
        a = self.coeffs if L == self.den else {k: c * (L // self.den) for k, c in self.coeffs.items()}
        return Poly(self.vars, L, add_scaled_packed(a, other.coeffs, L // other.den))

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.vars, self.den, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(self.vars, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            q = Fraction(other)
            return Poly(self.vars, self.den * q.denominator,
                        {k: c * q.numerator for k, c in self.coeffs.items()})
        self._check_same_vars(other)
        return Poly(self.vars, self.den * other.den, mul_packed(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        if n == 0:
            return Poly.const(self.vars, 1)
        if self.coeffs and n * self.degree() >= EXP_LIMIT:
            raise ValueError("power would overflow the exponent packing")
        result = None
        base = self
        while True:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if not n:
                return result
            base = base * base

    def __truediv__(self, other):
        q = Fraction(other)
        return self * Fraction(q.denominator, q.numerator)

    # -- comparisons -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Poly):
            if isinstance(other, (int, Fraction)):
                return self == Poly.const(self.vars, other)
            return NotImplemented
        return (self.vars == other.vars and self.den == other.den
                and self.coeffs == other.coeffs)

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, self.den, frozenset(self.coeffs.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def key(self) -> tuple:
        """Hashable canonical key (useful for caches and sorting)."""
        return (self.vars, self.den, tuple(sorted(self.coeffs.items())))

    # -- calculus / evaluation ---------------------------------------

    def derivative(self, name: str) -> "Poly":
        i = self.vars.index(name)
        shift = WIDTH * i
        step = 1 << shift
        out = {}
        for k, c in self.coeffs.items():
            e = (k >> shift) & MASK
            if e:
                out[k - step] = out.get(k - step, 0) + c * e
        return Poly(self.vars, self.den, out)

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != len(self.vars):
            raise ValueError("point arity does not match variables")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        n = len(self.vars)
        for k, c in self.coeffs.items():
            term = Fraction(c)
            for i in range(n):
                e = (k >> (WIDTH * i)) & MASK
                if e:
                    term *= point[i] ** e
            total += term
        return total / self.den

    # -- substitutions -----------------------------------------------

    def compose(self, entries: Sequence["Poly"]) -> "Poly":
        """Substitute entries[i] for vars[i]; entries share one variable set."""
        if len(entries) != len(self.vars):
            raise ValueError("need one entry per variable")
        if not entries:
            raise ValueError("cannot compose a polynomial in no variables")
        out_vars = entries[0].vars
        for e in entries:
            if e.vars != out_vars:
                raise ValueError("substitution entries must share variables")
        powers: list[dict[int, Poly]] = [dict() for _ in entries]
        one = Poly.const(out_vars, 1)

        def power(i: int, e: int) -> Poly:
            cache = powers[i]
            got = cache.get(e)
            if got is None:
                got = entries[i] ** e
                cache[e] = got
            return got

        result = Poly.zero(out_vars)
        for exps, q in self.terms():
            t = one * q
            for i, e in enumerate(exps):
                if e:
                    t = t * power(i, e)
            result = result + t
        return result

    def translate(self, shifts: Sequence) -> "Poly":
        """p(x0 + s0, x1 + s1, ...) for rational shifts (zero entries skipped)."""
        result = self
        for i, s in enumerate(shifts):
            s = Fraction(s)
            if s != 0:
                result = result._translate_one(i, s)
        return result

    def _translate_one(self, i: int, s: Fraction) -> "Poly":
        # Binomial expansion per term, in integer arithmetic over the
        # common denominator den * sd^E:
        #   c*x^e -> sum_j c * C(e,j) * sn^(e-j) * sd^(E-e+j) * x^j.
        if not self.coeffs:
            return self
        shift = WIDTH * i
        sn, sd = s.numerator, s.denominator
        E = max((k >> shift) & MASK for k in self.coeffs)
        if E == 0:
            return self
        sn_pow = [1] * (E + 1)
        sd_pow = [1] * (E + 1)
        for j in range(1, E + 1):
            sn_pow[j] = sn_pow[j - 1] * sn
            sd_pow[j] = sd_pow[j - 1] * sd
        out: dict[int, int] = {}
        for k, c in self.coeffs.items():
            e = (k >> shift) & MASK
            if e == 0:
                out[k] = out.get(k, 0) + c * sd_pow[E]
                continue
            base = k - (e << shift)
            for j in range(e + 1):
                coef = c * math.comb(e, j) * sn_pow[e - j] * sd_pow[E - e + j]
                key = base | (j << shift)
                out[key] = out.get(key, 0) + coef
        return Poly(self.vars, self.den * sd_pow[E], out)

    def subs_monomial(self, images: Sequence[Sequence[int]]) -> "Poly":
        """Substitute vars[i] -> monomial with exponent vector images[i].

        Used for blow-up chart maps like (u, v) -> (u, u*v): each term's
        exponent vector is remapped linearly, coefficients are untouched.
        """
        n = len(self.vars)
        if len(images) != n:
            raise ValueError("need one image per variable")
        out = {}
        for k, c in self.coeffs.items():
            new = [0] * n
            for i in range(n):
                e = (k >> (WIDTH * i)) & MASK
                if e:
                    img = images[i]
                    for j in range(n):
                        new[j] += e * img[j]
            nk = pack(new)
            out[nk] = out.get(nk, 0) + c
        return Poly(self.vars, self.den, out)

    def min_exponent(self, name: str) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial")
        i = self.vars.index(name)
        shift = WIDTH * i
        return min((k >> shift) & MASK for k in self.coeffs)

    def order(self) -> int:
        """Smallest total degree of a term (the vanishing order at the
        origin); -1 for the zero polynomial."""
        if not self.coeffs:
            return -1
        return min(_key_total(k) for k in self.coeffs)

    def truncate_total(self, bound: int) -> "Poly":
        """Drop every term of total degree above ``bound``."""
        kept = {k: c for k, c in self.coeffs.items() if _key_total(k) <= bound}
        if len(kept) == len(self.coeffs):
            return self
        return Poly(self.vars, self.den, kept)

    def strip_power(self, name: str) -> tuple["Poly", int]:
        """Divide out the largest power of a variable; returns (quotient, power)."""
        if self.is_zero:
            return self, 0
        m = self.min_exponent(name)
        if m == 0:
            return self, 0
        i = self.vars.index(name)
        step = m << (WIDTH * i)
        return Poly(self.vars, self.den, {k - step: c for k, c in self.coeffs.items()}), m

    def set_var(self, name: str, value) -> "Poly":
        """Substitute a rational constant for one variable."""
        i = self.vars.index(name)
        value = Fraction(value)
        shift = WIDTH * i
        if not self.coeffs:
            return self
        if value == 0:
            out = {k: c for k, c in self.coeffs.items() if not ((k >> shift) & MASK)}
            return Poly(self.vars, self.den, out)
        vn, vd = value.numerator, value.denominator
        E = max((k >> shift) & MASK for k in self.coeffs)
        if E == 0:
            return self
        vn_pow = [1] * (E + 1)
        vd_pow = [1] * (E + 1)
        for j in range(1, E + 1):
            vn_pow[j] = vn_pow[j - 1] * vn
            vd_pow[j] = vd_pow[j - 1] * vd
        out: dict[int, int] = {}
        for k, c in self.coeffs.items():
            e = (k >> shift) & MASK
            base = k - (e << shift)
            out[base] = out.get(base, 0) + c * vn_pow[e] * vd_pow[E - e]
        return Poly(self.vars, self.den * vd_pow[E], out)

    def drop_var(self, name: str) -> "Poly":
        """Remove an unused variable from the variable tuple."""
        i = self.vars.index(name)
        if self.degree_in(name) > 0:
            raise ValueError(f"variable {name} still occurs")
        lo = (1 << (WIDTH * i)) - 1
        out = {}
        for k, c in self.coeffs.items():
            out[(k & lo) | ((k >> WIDTH) & ~lo)] = c
        new_vars = self.vars[:i] + self.vars[i + 1:]
        return Poly(new_vars, self.den, out)

    def with_vars(self, vars: Sequence[str]) -> "Poly":
        """Reinterpret over a larger/reordered variable tuple."""
        vars = tuple(vars)
        positions = [vars.index(v) for v in self.vars]
        out = {}
        n = len(self.vars)
        for k, c in self.coeffs.items():
            nk = 0
            for i in range(n):
                e = (k >> (WIDTH * i)) & MASK
                nk |= e << (WIDTH * positions[i])
            out[nk] = c
        return Poly(vars, self.den, out)

    def homogenize(self, name: str, degree: int | None = None) -> "Poly":
        """Insert ``name`` (appended to the variables) to reach equal term degree."""
        if name in self.vars:
            raise ValueError(f"variable {name} already present")
        vars = self.vars + (name,)
        d = self.degree() if degree is None else degree
        if d < self.degree():
            raise ValueError("target degree below actual degree")
        j = len(self.vars)
        out = {}
        for k, c in self.coeffs.items():
            out[k | ((d - _key_total(k)) << (WIDTH * j))] = c
        return Poly(vars, self.den, out)

    # -- printing ----------------------------------------------------

    def __str__(self) -> str:
        return poly_str(self)

    def __repr__(self) -> str:
        return f"Poly({str(self)!r}, vars={self.vars})"


# ---------------------------------------------------------------------------
# printing / parsing
# ---------------------------------------------------------------------------

def _monomial_str(vars: tuple[str, ...], exps: Exponents) -> str:
    parts = []
    for name, e in zip(vars, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p: Poly) -> str:
    """Canonical text form; ``parse_poly(poly_str(p), p.vars) == p``."""
    if p.is_zero:
        return "0"
    pieces = []
    for exps, q in p.terms():
        mon = _monomial_str(p.vars, exps)
        aq = abs(q)
        if not mon:
            body = str(aq)
        elif aq == 1:
            body = mon
        else:
            body = f"{aq}*{mon}"
        pieces.append((q < 0, body))
    first_neg, first = pieces[0]
    out = ("-" if first_neg else "") + first
    for neg, body in pieces[1:]:
        out += (" - " if neg else " + ") + body
    return out


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9]*)|([()+\-*/^]))")

_VAR_NAME = re.compile(r"^(?:[xyzw]|x\d+)$")


class _RatParser:
    """Recursive-descent parser producing (numerator, denominator) pairs.

    Division is an ordinary operator on rational functions, so "3/4" and
    "x/(y-1)" both parse; callers that need a polynomial reject nonconstant
    denominators afterwards.
    """

    def __init__(self, text: str, vars: tuple[str, ...]):
        self.text = text
        self.vars = vars
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if not m:
                if text[pos:].strip():
                    raise ParseError("unexpected character", text, pos)
                break
            if m.group(1):
                self.tokens.append(("num", m.group(1), m.start(1)))
            elif m.group(2):
                self.tokens.append(("name", m.group(2), m.start(2)))
            else:
                self.tokens.append(("op", m.group(3), m.start(3)))
            pos = m.end()
        self.i = 0

    def peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.text, len(self.text))
        self.i += 1
        return tok

    # rational function arithmetic on (num, den) pairs ---------------

    def parse(self) -> tuple[Poly, Poly]:
        result = self.expr()
        tok = self.peek()
        if tok is not None:
            raise ParseError(f"trailing input {tok[1]!r}", self.text, tok[2])
        return result

    def expr(self):
        acc = self.term()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                an, ad = acc
                bn, bd = rhs
                if tok[1] == "+":
                    acc = (an * bd + bn * ad, ad * bd)
                else:
                    acc = (an * bd - bn * ad, ad * bd)
            else:
                return acc

    def term(self):
        acc = self.unary()
        while True:
            tok = self.peek()
            if tok and tok[0] == "op" and tok[1] in "*/":
                self.take()
                rhs = self.unary()
                an, ad = acc
                bn, bd = rhs
                if tok[1] == "*":
                    acc = (an * bn, ad * bd)
                else:
                    if bn.is_zero:
                        raise ParseError("division by zero", self.text, tok[2])
                    acc = (an * bd, ad * bn)
            else:
                return acc

    def unary(self):
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "-":
            self.take()
            n, d = self.unary()
            return (-n, d)
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok and tok[0] == "op" and tok[1] == "^":
            self.take()
            etok = self.take()
            if etok[0] != "num":
                raise ParseError("exponent must be a nonnegative integer", self.text, etok[2])
            e = int(etok[1])
            if e >= EXP_LIMIT:
                raise ParseError(f"exponent {e} too large", self.text, etok[2])
            n, d = base
            return (n ** e, d ** e)
        return base

    def atom(self):
        tok = self.take()
        kind, val, pos = tok
        one = Poly.const(self.vars, 1)
        if kind == "num":
            return (Poly.const(self.vars, int(val)), one)
        if kind == "name":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", self.text, pos)
            return (Poly.var(self.vars, val), one)
        if kind == "op" and val == "(":
            inner = self.expr()
            closing = self.take()
            if closing[:2] != ("op", ")"):
                raise ParseError("expected ')'", self.text, closing[2])
            return inner
        raise ParseError(f"unexpected token {val!r}", self.text, pos)


def _infer_vars(text: str) -> tuple[str, ...]:
    names = set()
    for m in re.finditer(r"[A-Za-z][A-Za-z0-9]*", text):
        if not _VAR_NAME.match(m.group()):
            raise ParseError(f"unknown variable {m.group()!r}", text, m.start())
        names.add(m.group())

    def order(name: str):
        if len(name) == 1:
            return (0, "xyzw".index(name))
        return (1, int(name[1:]))

    return tuple(sorted(names, key=order))


def parse_ratfunc(text: str, vars: Sequence[str]) -> tuple[Poly, Poly]:
    """Parse a rational-function expression; returns (numerator, denominator)."""
    return _RatParser(text, tuple(vars)).parse()


def parse_poly(text: str, vars: Sequence[str] | None = None) -> Poly:
    """Parse polynomial text.

    Variables may be supplied explicitly; otherwise they are inferred from
    the names occurring in the text (recognized names: x, y, z, w, x0, x1,
    ...), ordered canonically.
    """
    if vars is None:
        vars = _infer_vars(text)
    num, den = parse_ratfunc(text, vars)
    if not den.is_constant:
        raise ParseError("expression is not a polynomial (nonconstant denominator)", text, 0)
    return num / den.constant_value()


# ---------------------------------------------------------------------------
# tuple-level operations
# ---------------------------------------------------------------------------

def compose_tuple(outer: Sequence[Poly], inner: Sequence[Poly]) -> tuple[Poly, ...]:
    """Substitute the inner tuple into each entry of the outer tuple."""
    inner = tuple(inner)
    return tuple(p.compose(inner) for p in outer)


def content_gcd(polys: Sequence[Poly]) -> Poly:
    """Polynomial gcd of a sequence (canonical primitive, positive leading)."""
    nz = [p for p in polys if not p.is_zero]
    if not nz:
        raise ValueError("gcd of all-zero sequence")
    acc = nz[0]
    for p in nz[1:]:
        acc = poly_gcd(acc, p)
        if acc.is_constant:
            break
    return acc


def primitive_tuple(polys: Sequence[Poly]) -> tuple[Poly, ...]:
    """Divide out the common polynomial factor and normalize signs.

    The result is integer-primitive with the first nonzero entry having a
    positive leading coefficient; applying it twice is the identity.
    """
    polys = tuple(polys)
    g = content_gcd(polys)
    if not g.is_constant:
        polys = tuple(poly_exact_div(p, g) for p in polys)
    # clear rational content jointly
    nums = [c for p in polys for c in p.coeffs.values()]
    dens = [p.den for p in polys]
    L = math.lcm(*dens)
    scaled = [c * (L // p.den) for p in polys for c in p.coeffs.values()]
    g_int = 0
    for c in scaled:
        g_int = math.gcd(g_int, c)
    scale = Fraction(L, g_int) if g_int else Fraction(1)
    polys = tuple(p * scale for p in polys)
    for p in polys:
        if not p.is_zero:
            if p.leading()[1] < 0:
                polys = tuple(-q for q in polys)
            break
    return polys


def jacobian_det(polys: Sequence[Poly]) -> Poly:
    """Determinant of the matrix of partial derivatives."""
    polys = tuple(polys)
    if not polys:
        raise ValueError("empty tuple")
    vars = polys[0].vars
    if len(polys) != len(vars):
        raise ValueError("need as many entries as variables")
    rows = [[p.derivative(v) for v in vars] for p in polys]
    return _det(rows, vars)


def _det(rows: list[list[Poly]], vars: tuple[str, ...]) -> Poly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = Poly.zero(vars)
    for j in range(n):
        if rows[0][j].is_zero:
            continue
        minor = [[row[k] for k in range(n) if k != j] for row in rows[1:]]
        term = rows[0][j] * _det(minor, vars)
        total = total + term if j % 2 == 0 else total - term
    return total


# ---------------------------------------------------------------------------
# sympy bridge: gcd, exact division, factorization, resultants
# ---------------------------------------------------------------------------

_SYMBOLS: dict[tuple[str, ...], tuple] = {}


def _symbols(vars: tuple[str, ...]):
    syms = _SYMBOLS.get(vars)
    if syms is None:
        syms = sympy.symbols(vars) if len(vars) > 1 else (sympy.Symbol(vars[0]),)
        _SYMBOLS[vars] = tuple(syms)
    return syms


def to_sympy(p: Poly) -> "sympy.Poly":
    syms = _symbols(p.vars)
    n = len(p.vars)
    data = {unpack(k, n): sympy.Rational(c, p.den) for k, c in p.coeffs.items()}
    return sympy.Poly.from_dict(data, *syms, domain=sympy.QQ)


def from_sympy(sp, vars: tuple[str, ...]) -> Poly:
    terms = []
    for exps, coeff in sp.terms():
        q = sympy.Rational(coeff)
        terms.append((tuple(int(e) for e in exps), Fraction(int(q.p), int(q.q))))
    return Poly.from_terms(vars, terms)


def canonical_factor(p: Poly) -> Poly:
    """Scale to integer-primitive form with positive leading coefficient."""
    if p.is_zero:
        return p
    (_, lead) = p.leading()
    content = Fraction(math.gcd(*[abs(c) for c in p.coeffs.values()]), p.den)
    q = p / content
    if lead < 0:
        q = -q
    return q


def _affine_part(p: Poly, name: str) -> Poly:
    """Set ``name`` to 1 and remove it from the variable tuple."""
    return p.set_var(name, 1).drop_var(name)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    if a.vars != b.vars:
        raise ValueError("variable mismatch")
    if a.is_zero:
        return canonical_factor(b)
    if b.is_zero:
        return canonical_factor(a)
    if len(a.vars) >= 2 and a.is_homogeneous() and b.is_homogeneous():
        # dehomogenizing saves a nesting level in the dense recursion;
        # minimal rehomogenization is exact because stripping the last
        # variable makes it a multiplicative bijection
        name = a.vars[-1]
        sa, ka = a.strip_power(name)
        sb, kb = b.strip_power(name)
        g_aff = poly_gcd(_affine_part(sa, name), _affine_part(sb, name))
        g = g_aff.homogenize(name)
        k = min(ka, kb)
        if k:
            g = g * Poly.var(a.vars, name) ** k
        return canonical_factor(g)
    g = sympy.gcd(to_sympy(a), to_sympy(b))
    return canonical_factor(from_sympy(g, a.vars))


def poly_exact_div(a: Poly, b: Poly) -> Poly:
    """Quotient a/b when b divides a exactly."""
    if b.is_constant:
        return a / b.constant_value()
    if a.is_zero:
        return a
    if len(a.vars) >= 2 and a.is_homogeneous() and b.is_homogeneous():
        name = a.vars[-1]
        sa, ka = a.strip_power(name)
        sb, kb = b.strip_power(name)
        if ka < kb or a.degree() < b.degree():
            raise ValueError("not an exact division")
        aff_q = poly_exact_div(_affine_part(sa, name), _affine_part(sb, name))
        q = aff_q.homogenize(name)
        if ka > kb:
            q = q * Poly.var(a.vars, name) ** (ka - kb)
        return q
    q, r = sympy.div(to_sympy(a), to_sympy(b))
    if not r.is_zero:
        raise ValueError("not an exact division")
    return from_sympy(q, a.vars)


def poly_mod(a: Poly, b: Poly) -> Poly:
    """Normal form of a modulo b: no term of the result is divisible by the
    graded-lex leading term of b, and a - result is a multiple of b.

    The result does not depend on the reduction order (one divisor is its
    own Groebner basis), so reducible terms are cancelled from a worklist.
    """
    if a.vars != b.vars:
        raise ValueError("variable mismatch")
    if b.is_zero:
        raise ValueError("mod by the zero polynomial")
    if b.is_constant:
        return Poly.zero(a.vars)
    n = len(a.vars)
    bt = sorted(b.coeffs.items(),
                key=lambda kv: (_key_total(kv[0]), unpack(kv[0], n)),
                reverse=True)
    bk = bt[0][0]
    bc = Fraction(bt[0][1], b.den)
    tail = [(k, Fraction(c, b.den)) for k, c in bt[1:]]
    shifts = [WIDTH * i for i in range(n)]
    bexp = [(bk >> s) & MASK for s in shifts]
    def hkey(k: int):
        return (-_key_total(k), tuple(-e for e in unpack(k, n)))

    cur = {k: Fraction(c, a.den) for k, c in a.coeffs.items()}
    heap = [(hkey(k), k) for k in cur]
    heapq.heapify(heap)
    while heap:
        _, t = heapq.heappop(heap)
        c = cur.get(t)
        if c is None:
            continue
        if not all(((t >> s) & MASK) >= e for s, e in zip(shifts, bexp)):
            continue
        ratio = c / bc
        del cur[t]
        base = t - bk
        for tk, tc in tail:
            nk = base + tk
            nv = cur.get(nk, Fraction(0)) - ratio * tc
            if nv:
                cur[nk] = nv
                heapq.heappush(heap, (hkey(nk), nk))
            else:
                cur.pop(nk, None)
    return Poly.from_terms(a.vars, [(unpack(k, n), c) for k, c in cur.items()])


def factor_q(p: Poly) -> tuple[Fraction, tuple[tuple[Poly, int], ...]]:
    """Factor over the rationals.

    Returns (unit, ((factor, multiplicity), ...)) with each factor
    irreducible, integer-primitive, positive leading coefficient, sorted
    by (degree, text) for determinism.  unit * prod(factor^mult) == p.
    """
    if p.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if p.is_constant:
        return p.constant_value(), ()
    coeff, factors = sympy.factor_list(to_sympy(p))
    q = sympy.Rational(coeff)
    unit = Fraction(int(q.p), int(q.q))
    out = []
    for f, mult in factors:
        fp = from_sympy(sympy.Poly(f, *_symbols(p.vars), domain=sympy.QQ), p.vars)
        canon = canonical_factor(fp)
        # fold the normalization back into the unit
        ratio = _leading_ratio(fp, canon)
        unit *= ratio ** mult
        out.append((canon, int(mult)))
    out.sort(key=lambda t: (t[0].degree(), poly_str(t[0])))
    return unit, tuple(out)


def _leading_ratio(a: Poly, b: Poly) -> Fraction:
    (_, la) = a.leading()
    (_, lb) = b.leading()
    return la / lb


def resultant(a: Poly, b: Poly, name: str) -> Poly:
    if a.vars != b.vars:
        raise ValueError("variable mismatch")
    syms = _symbols(a.vars)
    var = syms[a.vars.index(name)]
    r = sympy.resultant(to_sympy(a).as_expr(), to_sympy(b).as_expr(), var)
    rp = sympy.Poly(r, *syms, domain=sympy.QQ)
    return from_sympy(rp, a.vars)


def squarefree_part(p: Poly) -> Poly:
    """Product of the distinct irreducible factors (no multiplicities)."""
    if p.is_zero or p.is_constant:
        return canonical_factor(p) if not p.is_zero else p
    out = Poly.const(p.vars, 1)
    for f, _ in factor_q(p)[1]:
        out = out * f
    return out
