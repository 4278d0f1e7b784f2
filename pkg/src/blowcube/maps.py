"""Rational self-maps of projective space, their composition and inverses.

A :class:`ProjMap` is a tuple of homogeneous polynomials of one common
degree with no common polynomial factor (the tuple is kept primitive and
sign-normalized, so equal maps compare equal structurally).  Affine maps of
the plane enter as pairs of rational functions and are homogenized; monomial
maps enter as integer exponent matrices.

Inverses are never guessed silently: ``inverse`` runs a short list of
strategies (supplied candidate, linear adjugate, monomial matrix inverse,
involution check, triangular back-substitution) and every strategy's output
is verified by composing both ways before it is attached to the map.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Sequence

from blowcube.config import DEFAULTS, RunConfig
from blowcube.errors import DegreeCapExceeded, InverseUnavailable, MapError, ParseError
from blowcube.poly import (
    Poly,
    compose_tuple,
    parse_poly,
    parse_ratfunc,
    poly_gcd,
    poly_exact_div,
    poly_str,
    primitive_tuple,
)

P2_VARS = ("x", "y", "z")

ProjPoint = tuple[int, ...]


def normalize_point(coords: Sequence) -> ProjPoint:
    """Canonical integer representative: primitive, first nonzero positive."""
    fracs = [Fraction(c) for c in coords]
    if all(f == 0 for f in fracs):
        raise ValueError("all coordinates zero")
    L = math.lcm(*(f.denominator for f in fracs))
    ints = [int(f * L) for f in fracs]
    g = 0
    for v in ints:
        g = math.gcd(g, v)
    ints = [v // g for v in ints]
    for v in ints:
        if v:
            if v < 0:
                ints = [-w for w in ints]
            break
    return tuple(ints)


def point_str(pt: ProjPoint) -> str:
    return "[" + " : ".join(str(c) for c in pt) + "]"


def pn_vars(dim: int) -> tuple[str, ...]:
    if dim == 2:
        return P2_VARS
    return tuple(f"x{i}" for i in range(dim + 1))


class ProjMap:
    """Dominant rational self-map of projective space, canonical form."""

    def __init__(self, entries: Sequence[Poly], name: str | None = None):
        entries = tuple(entries)
        if len(entries) < 2:
            raise MapError("a projective map needs at least two coordinates")
        vars = entries[0].vars
        if len(entries) != len(vars):
            raise MapError(
                f"{len(entries)} coordinates but {len(vars)} variables; "
                "expected a self-map")
        degs = set()
        for p in entries:
            if p.vars != vars:
                raise MapError("coordinate entries must share variables")
            if p.is_zero:
                raise MapError("zero coordinate entry")
            if not p.is_homogeneous():
                raise MapError(f"coordinate {poly_str(p)!r} is not homogeneous")
            degs.add(p.degree())
        if len(degs) != 1:
            raise MapError(f"coordinate degrees differ: {sorted(degs)}")
        self.entries: tuple[Poly, ...] = primitive_tuple(entries)
        self.vars = vars
        self.name = name
        self._inverse: "ProjMap | None" = None
        self._monomial_matrix: tuple[tuple[int, ...], ...] | None = None
        self._key = tuple(p.key() for p in self.entries)

    # -- basics -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.entries) - 1

    def degree(self) -> int:
        return self.entries[0].degree()

    def is_identity(self) -> bool:
        return self.entries == identity(self.dim).entries

    def is_monomial(self) -> bool:
        return all(len(p.coeffs) == 1 for p in self.entries)

    @property
    def inverse(self) -> "ProjMap":
        if self._inverse is None:
            raise InverseUnavailable(
                f"map {self} has no verified inverse attached; call inverse()")
        return self._inverse

    @property
    def has_inverse(self) -> bool:
        return self._inverse is not None

    def key(self) -> tuple:
        return self._key

    def __eq__(self, other):
        if not isinstance(other, ProjMap):
            return NotImplemented
        return self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def apply(self, pt: Sequence) -> ProjPoint | None:
        """Image of a point; None when the point is in the base locus."""
        pt = list(pt)
        if len(pt) != len(self.vars):
            raise MapError("point arity mismatch")
        vals = [p.evaluate(pt) for p in self.entries]
        if all(v == 0 for v in vals):
            return None
        return normalize_point(vals)

    def __str__(self):
        inner = " : ".join(poly_str(p) for p in self.entries)
        return f"[{inner}]"

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"ProjMap{label} {self}"


def _attach(f: ProjMap, g: ProjMap) -> ProjMap:
    """Record f and g as mutual inverses."""
    f._inverse = g
    g._inverse = f
    return f


def identity(dim: int = 2) -> ProjMap:
    vars = pn_vars(dim)
    f = ProjMap([Poly.var(vars, v) for v in vars], name="id")
    f._inverse = f
    return f


def linear_map(matrix: Sequence[Sequence], dim: int | None = None) -> ProjMap:
    """Projective linear map from an invertible rational matrix."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MapError("linear map needs a square matrix")
    if dim is not None and dim != n - 1:
        raise MapError("matrix size does not match dimension")
    vars = pn_vars(n - 1)
    det = _det_frac(rows)
    if det == 0:
        raise MapError("singular matrix does not define a projective map")
    entries = []
    for row in rows:
        p = Poly.zero(vars)
        for j, c in enumerate(row):
            p = p + Poly.var(vars, vars[j]) * Fraction(c)
        entries.append(p)
    f = ProjMap(entries)
    adj = _adjugate_frac(rows)
    g_entries = []
    for row in adj:
        p = Poly.zero(vars)
        for j, c in enumerate(row):
            p = p + Poly.var(vars, vars[j]) * c
        g_entries.append(p)
    return _attach(f, ProjMap(g_entries))


def _det_frac(rows: list[list]) -> Fraction:
    n = len(rows)
    m = [[Fraction(c) for c in row] for row in rows]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                for c in range(col, n):
                    m[r][c] -= factor * m[col][c]
    return det


def _adjugate_frac(rows: list[list]) -> list[list[Fraction]]:
    n = len(rows)
    m = [[Fraction(c) for c in row] for row in rows]
    det = _det_frac(rows)
    inv = _mat_inverse_frac(m)
    return [[inv[i][j] * det for j in range(n)] for i in range(n)]


def _mat_inverse_frac(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise MapError("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        scale = 1 / aug[col][col]
        aug[col] = [v * scale for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# ---------------------------------------------------------------------------
# composition and iteration
# ---------------------------------------------------------------------------

def _compose_raw(f: ProjMap, g: ProjMap, cfg: RunConfig) -> ProjMap:
    if f.vars != g.vars:
        raise MapError("cannot compose maps of different spaces")
    bound = f.degree() * g.degree()
    if bound > cfg.degree_cap:
        raise DegreeCapExceeded(
            f"composition degree bound {bound} exceeds cap {cfg.degree_cap}")
    return ProjMap(compose_tuple(f.entries, g.entries))


def compose(f: ProjMap, g: ProjMap, cfg: RunConfig = DEFAULTS) -> ProjMap:
    """f after g, reduced to canonical form.

    If both factors carry verified inverses the composite gets one too
    (g^-1 after f^-1), without re-verification.
    """
    h = _compose_raw(f, g, cfg)
    if f._inverse is not None and g._inverse is not None and h._inverse is None:
        try:
            _attach(h, _compose_raw(g._inverse, f._inverse, cfg))
        except DegreeCapExceeded:
            pass
    return h


_ITERATES: dict[tuple, list[ProjMap]] = {}


def iterate(f: ProjMap, n: int, cfg: RunConfig = DEFAULTS) -> ProjMap:
    """f^n (n >= 1) with caching across calls."""
    if n < 1:
        raise MapError("iterate exponent must be >= 1")
    chain = _ITERATES.setdefault(f.key(), [f])
    while len(chain) < n:
        chain.append(compose(f, chain[-1], cfg))
    return chain[n - 1]


def degree_sequence(f: ProjMap, n: int, cfg: RunConfig = DEFAULTS) -> list[int]:
    """[deg f, deg f^2, ..., deg f^n] of the reduced iterates.

    On hitting the degree cap the partial list is attached to the raised
    DegreeCapExceeded as ``.completed`` entries.
    """
    degs: list[int] = []
    for k in range(1, n + 1):
        try:
            degs.append(iterate(f, k, cfg).degree())
        except DegreeCapExceeded as exc:
            exc.completed = k - 1
            exc.partial = degs  # type: ignore[attr-defined]
            raise
    return degs


def conjugate(f: ProjMap, a: ProjMap, cfg: RunConfig = DEFAULTS) -> ProjMap:
    """a^-1 after f after a (a must carry a verified inverse)."""
    return compose(compose(a.inverse, f, cfg), a, cfg)


# ---------------------------------------------------------------------------
# monomial maps
# ---------------------------------------------------------------------------

def _monomial_entries(rows: Sequence[Sequence[int]]) -> list[Poly]:
    n = len(rows)
    vars = pn_vars(n)
    # smallest monomial multiplier making every affine image polynomial
    a = [0] * (n + 1)
    for j in range(1, n + 1):
        a[j] = max(0, max(-rows[i][j - 1] for i in range(n)))
    a[0] = max(0, max(sum(r) for r in rows))
    entries = [Poly.from_terms(vars, [(list(a), 1)])]
    for i in range(n):
        e = list(a)
        e[0] -= sum(rows[i])
        for j in range(1, n + 1):
            e[j] += rows[i][j - 1]
        entries.append(Poly.from_terms(vars, [(e, 1)]))
    return entries


def monomial_map(matrix: Sequence[Sequence[int]]) -> ProjMap:
    """The monomial self-map of P^n whose action on affine coordinates
    t_i = x_i/x_0 is t_i -> prod_j t_j^{M[i][j]}."""
    rows = [tuple(int(c) for c in r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise MapError("monomial map needs a square integer matrix")
    det = _det_frac([list(r) for r in rows])
    if det == 0:
        raise MapError("monomial matrix is singular")
    f = ProjMap(_monomial_entries(rows))
    f._monomial_matrix = tuple(rows)
    if abs(det) == 1:
        inv_rows = tuple(tuple(int(c) for c in r) for r in
                         _mat_inverse_frac([[Fraction(c) for c in r] for r in rows]))
        g = ProjMap(_monomial_entries(inv_rows))
        g._monomial_matrix = inv_rows
        _attach(f, g)
    return f


def monomial_matrix_of(f: ProjMap) -> tuple[tuple[int, ...], ...]:
    """Recover the affine exponent matrix of a monomial projective map."""
    if f._monomial_matrix is not None:
        return f._monomial_matrix
    if not f.is_monomial():
        raise MapError("not a monomial map")
    n = f.dim
    exps = [next(iter(p.terms()))[0] for p in f.entries]
    rows = []
    for i in range(1, n + 1):
        rows.append(tuple(exps[i][j] - exps[0][j] for j in range(1, n + 1)))
    f._monomial_matrix = tuple(rows)
    return f._monomial_matrix


def mat_mul(A, B):
    n = len(A)
    return [[sum(A[i][k] * B[k][j] for k in range(n)) for j in range(n)] for i in range(n)]


def mat_pow(M, n: int):
    size = len(M)
    R = [[int(i == j) for j in range(size)] for i in range(size)]
    B = [list(r) for r in M]
    while n:
        if n & 1:
            R = mat_mul(R, B)
        B = mat_mul(B, B)
        n >>= 1
    return R


def monomial_degree_sequence(matrix: Sequence[Sequence[int]], n: int) -> list[int]:
    """Degrees of the reduced iterates computed through integer matrix powers."""
    return [monomial_map(mat_pow(matrix, k)).degree() for k in range(1, n + 1)]


# ---------------------------------------------------------------------------
# affine plane maps
# ---------------------------------------------------------------------------

A2_VARS = ("x", "y")

RatFunc = tuple[Poly, Poly]


def _rf_reduce(n: Poly, d: Poly) -> RatFunc:
    if d.is_zero:
        raise MapError("zero denominator")
    if n.is_zero:
        return Poly.zero(n.vars), Poly.const(n.vars, 1)
    g = poly_gcd(n, d)
    if not g.is_constant:
        n = poly_exact_div(n, g)
        d = poly_exact_div(d, g)
    if d.is_constant:
        return n / d.constant_value(), Poly.const(n.vars, 1)
    lead = d.leading()[1]
    return n / lead, d / lead


class AffineMap2:
    """Rational self-map of the affine plane, a pair of rational functions."""

    def __init__(self, fx: RatFunc, fy: RatFunc, name: str | None = None):
        self.fx = _rf_reduce(*fx)
        self.fy = _rf_reduce(*fy)
        self.name = name

    def apply(self, pt: Sequence) -> tuple[Fraction, Fraction] | None:
        x, y = (Fraction(c) for c in pt)
        dx = self.fx[1].evaluate((x, y))
        dy = self.fy[1].evaluate((x, y))
        if dx == 0 or dy == 0:
            return None
        return (self.fx[0].evaluate((x, y)) / dx, self.fy[0].evaluate((x, y)) / dy)

    def __str__(self):
        def side(rf):
            n, d = rf
            if d.is_constant and d.constant_value() == 1:
                return poly_str(n)
            return f"({poly_str(n)})/({poly_str(d)})"
        return f"({side(self.fx)}, {side(self.fy)})"


def homogenize(aff: AffineMap2) -> ProjMap:
    """Projective closure on [x : y : z], affine chart z = 1."""
    (n1, d1), (n2, d2) = aff.fx, aff.fy
    g = poly_gcd(d1, d2)
    L = poly_exact_div(d1 * d2, g) if not g.is_constant else d1 * d2
    e1 = n1 * poly_exact_div(L, d1)
    e2 = n2 * poly_exact_div(L, d2)
    deg = max(e1.degree(), e2.degree(), L.degree())
    entries = [p.homogenize("z", deg) for p in (e1, e2, L)]
    f = ProjMap(entries, name=aff.name)
    return f


def dehomogenize(f: ProjMap) -> AffineMap2:
    """Restriction of a plane map to the chart z = 1 as rational functions."""
    if f.dim != 2:
        raise MapError("dehomogenize expects a plane map")
    chart = []
    for p in f.entries:
        q = p.set_var("z", 1).drop_var("z")
        chart.append(q)
    e0, e1, e2 = chart
    if e2.is_zero:
        raise MapError("map contracts the affine chart to the line at infinity")
    return AffineMap2((e0, e2), (e1, e2), name=f.name)


# ---------------------------------------------------------------------------
# inverse strategies
# ---------------------------------------------------------------------------

def verify_inverse(f: ProjMap, g: ProjMap, cfg: RunConfig = DEFAULTS) -> bool:
    if f.vars != g.vars:
        return False
    return (_compose_raw(f, g, cfg).is_identity()
            and _compose_raw(g, f, cfg).is_identity())


def inverse(f: ProjMap, candidate: ProjMap | None = None,
            cfg: RunConfig = DEFAULTS) -> ProjMap:
    """Verified inverse of f, or raise InverseUnavailable.

    Strategies, in order: supplied candidate, linear adjugate, monomial
    matrix inverse, involution check, triangular back-substitution for
    plane maps.  Whatever a strategy produces is verified by composing
    both ways before being accepted.
    """
    if f._inverse is not None and candidate is None:
        return f._inverse
    tried = []
    if candidate is not None:
        if verify_inverse(f, candidate, cfg):
            _attach(f, candidate)
            return candidate
        raise MapError(f"candidate inverse rejected: {candidate} does not invert {f}")
    if f.degree() == 1:
        tried.append("linear")
        matrix = [[p.coefficient([int(j == i) for i in range(len(f.vars))])
                   for j in range(len(f.vars))] for p in f.entries]
        try:
            g = linear_map(matrix).inverse
        except MapError:
            g = None
        if g is not None and verify_inverse(f, g, cfg):
            _attach(f, g)
            return g
    if f.is_monomial():
        tried.append("monomial")
        M = monomial_matrix_of(f)
        det = _det_frac([list(r) for r in M])
        if abs(det) == 1:
            inv_rows = _mat_inverse_frac([[Fraction(c) for c in r] for r in M])
            g = monomial_map([[int(c) for c in r] for r in inv_rows])
            if verify_inverse(f, g, cfg):
                _attach(f, g)
                return g
    tried.append("involution")
    try:
        if _compose_raw(f, f, cfg).is_identity():
            f._inverse = f
            return f
    except DegreeCapExceeded:
        pass
    if f.dim == 2:
        tried.append("triangular")
        g = _triangular_inverse(f, cfg)
        if g is not None and verify_inverse(f, g, cfg):
            _attach(f, g)
            return g
    raise InverseUnavailable(
        f"no inverse strategy applies to {f} (tried: {', '.join(tried)})")


def _rf_add(a: RatFunc, b: RatFunc) -> RatFunc:
    return (a[0] * b[1] + b[0] * a[1], a[1] * b[1])


def _rf_mul(a: RatFunc, b: RatFunc) -> RatFunc:
    return (a[0] * b[0], a[1] * b[1])


def _rf_scale(a: RatFunc, s: Fraction) -> RatFunc:
    return (a[0] * s, a[1])


def _eval_univar_at_rf(p: Poly, sname: str, val: RatFunc, out_one: Poly) -> RatFunc:
    """Evaluate a univariate polynomial at a rational function."""
    m = max(p.degree_in(sname), 0)
    N, D = val
    num = Poly.zero(N.vars)
    svals: dict[int, Fraction] = {}
    for exps, q in p.terms():
        e = exps[p.vars.index(sname)]
        svals[e] = svals.get(e, Fraction(0)) + q
    for e, q in svals.items():
        num = num + (N ** e) * (D ** (m - e)) * q
    return (num, D ** m)


def _triangular_inverse(f: ProjMap, cfg: RunConfig) -> ProjMap | None:
    """Back-substitution for maps whose one component is a Mobius function
    of a single variable and whose other component has degree <= 1 in the
    remaining variable."""
    try:
        aff = dehomogenize(f)
    except MapError:
        return None
    comps = [aff.fx, aff.fy]
    for a_idx in (0, 1):
        for sname in A2_VARS:
            tname = A2_VARS[1 - A2_VARS.index(sname)]
            na, da = comps[a_idx]
            if na.degree_in(tname) > 0 or da.degree_in(tname) > 0:
                continue
            if na.degree_in(sname) > 1 or da.degree_in(sname) > 1:
                continue
            # na = alpha*s + beta, da = gamma*s + delta
            alpha = na.derivative(sname).constant_value() if na.degree_in(sname) == 1 else Fraction(0)
            beta = na.set_var(sname, 0).constant_value()
            gamma = da.derivative(sname).constant_value() if da.degree_in(sname) == 1 else Fraction(0)
            delta = da.set_var(sname, 0).constant_value()
            if alpha * delta - beta * gamma == 0:
                continue
            nb, db = comps[1 - a_idx]
            if nb.degree_in(tname) > 1 or db.degree_in(tname) > 1:
                continue
            one = Poly.const(A2_VARS, 1)
            P = Poly.var(A2_VARS, "x" if a_idx == 0 else "y")
            Q = Poly.var(A2_VARS, "y" if a_idx == 0 else "x")
            # s = (delta*P - beta) / (alpha - gamma*P)
            s_rf = (P * delta - one * beta, one * alpha - P * gamma)
            if s_rf[1].is_zero:
                continue
            A_n = nb.derivative(tname)       # coefficient of t in nb (poly in s)
            B_n = nb.set_var(tname, 0)
            C_d = db.derivative(tname)
            D_d = db.set_var(tname, 0)
            A_rf = _eval_univar_at_rf(A_n, sname, s_rf, one)
            B_rf = _eval_univar_at_rf(B_n, sname, s_rf, one)
            C_rf = _eval_univar_at_rf(C_d, sname, s_rf, one)
            D_rf = _eval_univar_at_rf(D_d, sname, s_rf, one)
            # t = (D*Q - B) / (A - C*Q)
            t_num = _rf_add(_rf_mul(D_rf, (Q, one)), _rf_scale(B_rf, Fraction(-1)))
            t_den = _rf_add(A_rf, _rf_scale(_rf_mul(C_rf, (Q, one)), Fraction(-1)))
            if t_den[0].is_zero:
                continue
            t_rf = (t_num[0] * t_den[1], t_num[1] * t_den[0])
            try:
                pair = {sname: s_rf, tname: t_rf}
                g_aff = AffineMap2(pair["x"], pair["y"])
                return homogenize(g_aff)
            except MapError:
                continue
    return None


# ---------------------------------------------------------------------------
# map-spec grammar and named built-ins
# ---------------------------------------------------------------------------

def _split_top(text: str, sep: str) -> list[str]:
    """Split on a separator, ignoring separators nested inside parentheses
    or brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
            if depth < 0:
                raise ParseError("unbalanced brackets", text, 0)
        if ch == sep and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return parts


def parse_map(text: str) -> ProjMap:
    """Parse a map specification.

    Forms:
      ``P2:[p0 : p1 : p2]``       homogeneous coordinates on [x : y : z]
      ``A2:(e1, e2)``             affine plane, rational-function entries
      ``MON:d:[[r11,...],...]``   monomial map of P^d from a d x d matrix
    """
    text = text.strip()
    if text.startswith("P2:"):
        body = text[3:].strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ParseError("P2 map must be bracketed: P2:[p0 : p1 : p2]", text, 3)
        parts = _split_top(body[1:-1], ":")
        if len(parts) != 3:
            raise ParseError(f"P2 map needs 3 coordinates, got {len(parts)}", text, 3)
        entries = [parse_poly(part, P2_VARS) for part in parts]
        return ProjMap(entries)
    if text.startswith("A2:"):
        body = text[3:].strip()
        if not (body.startswith("(") and body.endswith(")")):
            raise ParseError("A2 map must be parenthesized: A2:(e1, e2)", text, 3)
        parts = _split_top(body[1:-1], ",")
        if len(parts) != 2:
            raise ParseError(f"A2 map needs 2 entries, got {len(parts)}", text, 3)
        rfs = [parse_ratfunc(part, A2_VARS) for part in parts]
        return homogenize(AffineMap2(rfs[0], rfs[1]))
    if text.startswith("MON:"):
        m = re.match(r"MON:(\d+):(.*)$", text, re.S)
        if not m:
            raise ParseError("monomial map must look like MON:d:[[...],...]", text, 0)
        d = int(m.group(1))
        rows_text = m.group(2).strip()
        if not (rows_text.startswith("[") and rows_text.endswith("]")):
            raise ParseError("monomial matrix must be bracketed", text, 4)
        rows = _split_top(rows_text[1:-1], ",")
        matrix = []
        for row in rows:
            row = row.strip()
            if not (row.startswith("[") and row.endswith("]")):
                raise ParseError(f"matrix row {row!r} must be bracketed", text, 4)
            matrix.append([int(v.strip()) for v in row[1:-1].split(",")])
        if len(matrix) != d or any(len(r) != d for r in matrix):
            raise ParseError(f"monomial matrix must be {d}x{d}", text, 4)
        return monomial_map(matrix)
    raise ParseError("map spec must start with P2:, A2: or MON:", text, 0)


_BUILTIN_SPECS: dict[str, tuple[str, str | None]] = {
    # name -> (spec, candidate inverse spec or None for automatic strategies)
    "sigma": ("P2:[y*z : x*z : x*y]", None),
    "henon": ("P2:[y*z : y^2 + x*z : z^2]", None),
    "jonq1": ("A2:(x*y, y)", None),
    "jonq2": ("A2:(x*y, y + 1)", None),
    "hen2": ("A2:(y, x + y^2)", None),
    "lox1": ("A2:(x^2*y, x*y + 1)", "A2:(x/(y - 1), (y - 1)^2/x)"),
    "mon3": ("MON:3:[[-1,1,0],[-1,0,1],[1,0,0]]", None),
}

_BUILT: dict[str, ProjMap] = {}


def builtin_names() -> tuple[str, ...]:
    return tuple(_BUILTIN_SPECS)


def builtin(name: str) -> ProjMap:
    """Named bundled map, with its verified inverse attached."""
    got = _BUILT.get(name)
    if got is not None:
        return got
    if name not in _BUILTIN_SPECS:
        raise MapError(f"unknown built-in map {name!r} "
                       f"(available: {', '.join(_BUILTIN_SPECS)})")
    spec, cand_spec = _BUILTIN_SPECS[name]
    f = parse_map(spec)
    f.name = name
    cand = parse_map(cand_spec) if cand_spec else None
    inverse(f, candidate=cand)
    _BUILT[name] = f
    return f


def resolve_map_argument(text: str) -> ProjMap:
    """CLI map argument: a built-in name or a grammar string."""
    text = text.strip()
    if text in _BUILTIN_SPECS:
        return builtin(text)
    return parse_map(text)
