"""Base-point towers of plane birational maps via chart-by-chart blow-ups.

A base point is either a point of P^2 or an infinitely-near point reached by
a finite chain of blow-ups.  Towers are computed in explicit affine charts:
blowing up the origin produces two charts, (u, t) -> (u, u*t) and
(u, t) -> (u*t, t); new base points sit on the exceptional line u = 0 of the
first chart (one per rational slope) plus possibly the origin of the second
chart (the vertical direction).

Completeness of the rational search is certified by exact multiplicity
accounting: writing m_p for the vanishing order of the (properly
transformed) system at each tower point, a degree-d birational plane map
satisfies sum(m_p) = 3(d-1) and sum(m_p^2) = d^2-1 over the full tower.
A deficit proves the base locus has members outside the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .config import DEFAULTS, RunConfig
from .errors import (HeightCapExceeded, IrrationalBaseLocus, MapError,
                     ResolutionError, TransportUnsupported)
from .maps import (ProjMap, ProjPoint, degree_sequence, inverse,
                   normalize_point, point_str)
from .poly import (WIDTH, Poly, factor_q, jacobian_det, poly_exact_div,
                   poly_gcd, poly_mod, primitive_tuple)
from .zeros import projective_rational_zeros

CHART_VARS = ("u", "t")


# ---------------------------------------------------------------------------
# bubble points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BubbleStep:
    """One blow-up hop: land at slope ``value`` on the new exceptional line,
    or at its point at infinity (the vertical direction)."""

    kind: str  # "s" or "v"
    value: Fraction | None = None

    def sort_key(self):
        return (0, self.value) if self.kind == "s" else (1, Fraction(0))

    def to_json(self):
        return ["s", str(self.value)] if self.kind == "s" else ["v"]

    def __str__(self):
        return f"s={self.value}" if self.kind == "s" else "v"


@dataclass(frozen=True)
class BubblePoint:
    """A point of some iterated blow-up of P^2: a proper point of the plane
    together with the chain of exceptional-line positions above it."""

    root: ProjPoint
    steps: tuple[BubbleStep, ...] = ()

    @property
    def height(self) -> int:
        return len(self.steps)

    @property
    def is_proper(self) -> bool:
        return not self.steps

    def parent(self) -> "BubblePoint | None":
        if not self.steps:
            return None
        return BubblePoint(self.root, self.steps[:-1])

    def sort_key(self):
        return (self.root, tuple(s.sort_key() for s in self.steps))

    def __str__(self):
        parts = [point_str(self.root)] + [str(s) for s in self.steps]
        return "; ".join(parts)


def parent_closed(points: Iterable[BubblePoint]) -> bool:
    """Whether every infinitely-near member has its parent in the set."""
    s = set(points)
    return all(p.parent() in s for p in s if not p.is_proper)


# ---------------------------------------------------------------------------
# charts
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Chart:
    """An affine chart of an iterated blow-up, recorded as the substitution
    (u, t) -> [sub0 : sub1 : sub2] into the plane."""

    sub: tuple[Poly, Poly, Poly]
    label: str

    def __str__(self):
        return "[" + " : ".join(str(p) for p in self.sub) + "]"


def standard_chart(i: int) -> Chart:
    u = Poly.var(CHART_VARS, "u")
    t = Poly.var(CHART_VARS, "t")
    one = Poly.const(CHART_VARS, 1)
    sub = {0: (one, u, t), 1: (u, one, t), 2: (u, t, one)}[i]
    return Chart(sub, ("x=1", "y=1", "z=1")[i])


def blow_up_point(chart: Chart, center: Sequence) -> tuple[Chart, Chart]:
    """The two charts covering the blow-up of a rational chart point."""
    a, b = (Fraction(c) for c in center)
    u = Poly.var(CHART_VARS, "u")
    t = Poly.var(CHART_VARS, "t")
    first = tuple(p.compose((u + a, u * t + b)) for p in chart.sub)
    second = tuple(p.compose((u * t + a, t + b)) for p in chart.sub)
    label = f"{chart.label}; bl({a},{b})"
    return Chart(first, label + "#0"), Chart(second, label + "#1")


# ---------------------------------------------------------------------------
# towers
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BaseNode:
    point: BubblePoint
    chart: Chart
    coords: tuple[Fraction, Fraction]
    multiplicity: int
    children: tuple["BaseNode", ...]

    def walk(self) -> Iterator["BaseNode"]:
        yield self
        for c in self.children:
            yield from c.walk()

    def to_dict(self) -> dict:
        return {
            "point": point_str(self.point.root),
            "steps": [s.to_json() for s in self.point.steps],
            "chart": self.chart.label,
            "coords": [str(c) for c in self.coords],
            "height": self.point.height,
            "multiplicity": self.multiplicity,
            "children": [c.to_dict() for c in self.children],
        }


@dataclass(frozen=True)
class BasePointTree:
    degree: int
    roots: tuple[BaseNode, ...]

    def nodes(self) -> Iterator[BaseNode]:
        for r in self.roots:
            yield from r.walk()

    @property
    def count(self) -> int:
        return sum(1 for _ in self.nodes())

    def all_points(self) -> frozenset[BubblePoint]:
        return frozenset(n.point for n in self.nodes())

    def multiplicities(self) -> dict[BubblePoint, int]:
        return {n.point: n.multiplicity for n in self.nodes()}

    @property
    def max_height(self) -> int:
        return max((n.point.height for n in self.nodes()), default=-1)

    def to_dict(self) -> dict:
        mults = [n.multiplicity for n in self.nodes()]
        return {
            "degree": self.degree,
            "count": self.count,
            "accounting": {
                "multiplicity_sum": sum(mults),
                "multiplicity_sum_expected": 3 * (self.degree - 1),
                "square_sum": sum(m * m for m in mults),
                "square_sum_expected": self.degree * self.degree - 1,
            },
            "roots": [r.to_dict() for r in self.roots],
        }


def _order_at_origin(polys: Sequence[Poly]) -> int:
    orders = [p.order() for p in polys if not p.is_zero]
    if not orders:
        raise ResolutionError("identically zero local system")
    return min(orders)


def _strip_common_power(polys: Sequence[Poly], name: str) -> tuple[list[Poly], int]:
    k = min(p.min_exponent(name) for p in polys if not p.is_zero)
    if k == 0:
        return list(polys), 0
    i = polys[0].vars.index(name)
    shift = k << (WIDTH * i)
    out = [Poly(p.vars, p.den, {key - shift: c for key, c in p.coeffs.items()})
           for p in polys]
    return out, k


def _slope_roots(g: Poly, parent: BubblePoint) -> list[Fraction]:
    roots = []
    _, facs = factor_q(g)
    for fac, _m in facs:
        if fac.degree() == 1:
            a = fac.coefficient((0, 1))
            c = fac.coefficient((0, 0))
            roots.append(-c / a)
        else:
            raise IrrationalBaseLocus(
                f"infinitely near points over {parent} come in a conjugate "
                f"cluster of degree {fac.degree()} ({fac} = 0)")
    return sorted(roots)


def _resolve_node(system: Sequence[Poly], bubble: BubblePoint, chart: Chart,
                  coords: tuple[Fraction, Fraction], cfg: RunConfig,
                  budget: int) -> BaseNode:
    """Tower above one base point.

    ``system`` is the local form of the map in ``chart`` recentered so the
    point sits at the origin (all entries vanish there).  ``budget`` bounds
    the multiplicities still to be consumed on any chain through this node;
    terms of higher total degree cannot reach the lowest form of any
    descendant (each blow-up lowers residual degree by exactly the local
    multiplicity), so they are dropped.  This keeps the carried systems
    small on long chains where the raw transforms grow without bound.
    """
    system = [p.truncate_total(budget) for p in system]
    mult = _order_at_origin(system)
    assert 1 <= mult <= budget

    chart0, chart1 = blow_up_point(chart, coords)

    alpha = [p.subs_monomial(((1, 0), (1, 1))) for p in system]  # u->u, t->u*t
    alpha, k0 = _strip_common_power(alpha, "u")
    assert k0 == mult, "stripped exceptional power must equal the local multiplicity"
    on_line = [p.set_var("u", 0) for p in alpha]
    nz = [p for p in on_line if not p.is_zero]
    if not nz:
        raise ResolutionError(
            f"the exceptional line over {bubble} lies in the base locus")
    g = nz[0]
    for p in nz[1:]:
        g = poly_gcd(g, p)
        if g.is_constant:
            break
    slopes = [] if g.is_constant else _slope_roots(g, bubble)

    beta = [p.subs_monomial(((1, 1), (0, 1))) for p in system]  # u->u*t, t->t
    beta, k1 = _strip_common_power(beta, "t")
    assert k1 == mult
    vertical = all(p.coefficient((0, 0)) == 0 for p in beta)

    children = []
    if slopes or vertical:
        if bubble.height + 1 > cfg.height_cap:
            raise HeightCapExceeded(
                f"tower over {point_str(bubble.root)} exceeds height cap "
                f"{cfg.height_cap}")
    for t0 in slopes:
        child_system = [p.translate((Fraction(0), t0)) for p in alpha]
        child = _resolve_node(child_system,
                              BubblePoint(bubble.root, bubble.steps + (BubbleStep("s", t0),)),
                              chart0, (Fraction(0), t0), cfg, budget - mult)
        children.append(child)
    if vertical:
        child = _resolve_node(beta,
                              BubblePoint(bubble.root, bubble.steps + (BubbleStep("v"),)),
                              chart1, (Fraction(0), Fraction(0)), cfg, budget - mult)
        children.append(child)
    return BaseNode(bubble, chart, coords, mult, tuple(children))


_BASE_CACHE: dict[tuple, BasePointTree] = {}


def base_points(f: ProjMap, cfg: RunConfig = DEFAULTS) -> BasePointTree:
    """The tree of base points of a plane birational map, with multiplicities.

    Requires a verified inverse (the map must be birational for the
    accounting identities that certify completeness).  Raises
    IrrationalBaseLocus when the base locus has non-rational members and
    HeightCapExceeded when a tower climbs past ``cfg.height_cap``.
    """
    if f.dim != 2:
        raise ResolutionError("base-point towers are only computed for plane maps")
    inverse(f, cfg=cfg)
    key = (f.key(), cfg.height_cap)
    cached = _BASE_CACHE.get(key)
    if cached is not None:
        return cached

    d = f.degree()
    if d == 1:
        tree = BasePointTree(d, ())
        _BASE_CACHE[key] = tree
        return tree

    points, flag = projective_rational_zeros(f.entries)
    if flag:
        raise IrrationalBaseLocus(
            f"the base locus of {f} contains points outside the rationals")

    roots = []
    for P in points:
        i = next(j for j, c in enumerate(P) if c != 0)
        chart = standard_chart(i)
        rest = [j for j in range(3) if j != i]
        center = (Fraction(P[rest[0]], P[i]), Fraction(P[rest[1]], P[i]))
        local = [e.compose(chart.sub).translate(center) for e in f.entries]
        roots.append(_resolve_node(local, BubblePoint(P), chart, center, cfg,
                                   3 * (d - 1)))

    tree = BasePointTree(d, tuple(roots))
    mults = [n.multiplicity for n in tree.nodes()]
    got1, got2 = sum(mults), sum(m * m for m in mults)
    want1, want2 = 3 * (d - 1), d * d - 1
    if got1 < want1 or got2 < want2:
        raise IrrationalBaseLocus(
            f"rational towers of {f} account for multiplicity sum {got1} of "
            f"{want1} and square sum {got2} of {want2}: the remaining base "
            "points are not defined over the rationals")
    if got1 > want1 or got2 > want2:
        raise ResolutionError(
            f"multiplicity accounting for {f} exceeds the birational bounds "
            f"({got1} vs {want1}, {got2} vs {want2}); this indicates an "
            "internal inconsistency")
    _BASE_CACHE[key] = tree
    return tree


def indeterminacy_points(f: ProjMap, cfg: RunConfig = DEFAULTS) -> tuple[ProjPoint, ...]:
    """The proper plane points where f is undefined."""
    return tuple(r.point.root for r in base_points(f, cfg).roots)


# ---------------------------------------------------------------------------
# contracted curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExcComponent:
    curve: Poly
    order: int  # multiplicity of the curve in the Jacobian
    image: ProjPoint

    def to_dict(self) -> dict:
        return {"curve": str(self.curve), "order": self.order,
                "image": point_str(self.image)}





def _rational_points_on(C: Poly, max_slices: int) -> Iterator[ProjPoint]:
    """Distinct rational points on the curve C from a bounded deterministic
    sweep of the vertical lines x = t*z plus the line at infinity."""
    seen: set[ProjPoint] = set()
    at_inf = C.set_var("z", 0)
    if not at_inf.is_zero:
        _, facs = factor_q(at_inf)
        for fac, _m in facs:
            if fac.degree() == 1:
                a = fac.coefficient((1, 0, 0))
                b = fac.coefficient((0, 1, 0))
                pt = normalize_point((-b, a, Fraction(0)))
                if pt not in seen:
                    seen.add(pt)
                    yield pt

    def rationals() -> Iterator[Fraction]:
        yield Fraction(0)
        k = 1
        while True:
            yield Fraction(k)
            yield Fraction(-k)
            yield Fraction(1, k + 1)
            yield Fraction(-1, k + 1)
            k += 1

    for _slice, t in zip(range(max_slices), rationals()):
        sliced = C.set_var("x", t).set_var("z", 1)
        if sliced.is_zero or sliced.is_constant:
            continue
        _, facs = factor_q(sliced)
        for fac, _m in facs:
            if fac.degree() == 1:
                a = fac.coefficient((0, 1, 0))
                c = fac.coefficient((0, 0, 0))
                pt = normalize_point((t, -c / a, Fraction(1)))
                if pt not in seen:
                    seen.add(pt)
                    yield pt


def _divisible(p: Poly, d: Poly) -> bool:
    if p.is_zero:
        return True
    try:
        poly_exact_div(p, d)
        return True
    except ValueError:
        return False


def _is_image_point(f: ProjMap, C: Poly, q: ProjPoint) -> bool:
    """Exact test that f maps all of C to the single point q: every 2x2
    minor of f against q must vanish modulo C."""
    pairs = ((0, 1), (0, 2), (1, 2))
    for i, j in pairs:
        minor = f.entries[i] * q[j] - f.entries[j] * q[i]
        if not _divisible(minor, C):
            return False
    return True


def curve_image(f: ProjMap, C: Poly, cfg: RunConfig = DEFAULTS) -> ProjPoint | None:
    """The point C is contracted to by f, or None when C is not contracted.

    Strategy: image candidates come cheaply from rational points of C.  Two
    sample points with different images reject outright; an agreeing
    candidate is confirmed by exact divisibility of the coordinate minors.
    Curves where the point sweep finds nothing usable fall back to an exact
    remainder test: C is contracted exactly when every coordinate of f is,
    modulo C, a fixed rational multiple of one pivot coordinate.
    """
    candidate: ProjPoint | None = None
    hits = 0
    for pt in _rational_points_on(C, max_slices=2 * C.degree() + 24):
        q = f.apply(pt)
        if q is None:
            continue
        if candidate is None:
            candidate = q
        elif q != candidate:
            return None
        hits += 1
        if hits >= 2:
            break
    if candidate is not None:
        return candidate if _is_image_point(f, C, candidate) else None

    rem = [poly_mod(e, C) for e in f.entries]
    pivot = next((j for j, r in enumerate(rem) if not r.is_zero), None)
    if pivot is None:
        raise ResolutionError(
            f"{C} divides every coordinate of {f}; the map is not reduced")
    base = rem[pivot]
    key, lead = base.leading()
    coords: list[Fraction] = []
    for i, r in enumerate(rem):
        if i == pivot:
            coords.append(Fraction(1))
            continue
        ratio = r.coefficient(key) / lead
        if r != base * ratio:
            return None
        coords.append(ratio)
    return normalize_point(coords)


_EXC_CACHE: dict[tuple, tuple[ExcComponent, ...]] = {}


def exc_components(f: ProjMap, cfg: RunConfig = DEFAULTS) -> tuple[ExcComponent, ...]:
    """The irreducible curves contracted by f, with Jacobian multiplicities
    and image points."""
    if f.dim != 2:
        raise ResolutionError("contracted curves are only computed for plane maps")
    cached = _EXC_CACHE.get(f.key())
    if cached is not None:
        return cached
    jac = jacobian_det(f.entries)
    if jac.is_zero:
        raise MapError(f"{f} is not dominant: its Jacobian vanishes identically")
    comps: list[ExcComponent] = []
    if not jac.is_constant:
        _, facs = factor_q(jac)
        for fac, mult in facs:
            img = curve_image(f, fac, cfg)
            if img is not None:
                comps.append(ExcComponent(fac, mult, img))
    result = tuple(comps)
    _EXC_CACHE[f.key()] = result
    return result


# ---------------------------------------------------------------------------
# stability and transport
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilityReport:
    stable: bool
    witness: int | None
    degrees: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"stable": self.stable, "witness": self.witness,
                "degrees": list(self.degrees)}


def is_algebraically_stable(f: ProjMap, n: int, cfg: RunConfig = DEFAULTS) -> StabilityReport:
    """Degree multiplicativity test: deg(f^k) = deg(f)^k for k <= n.

    The first k where multiplicativity fails (a curve was contracted into
    the indeterminacy locus) is reported as the witness.
    """
    degs = degree_sequence(f, n, cfg)
    for k in range(2, n + 1):
        if degs[k - 1] != degs[0] * degs[k - 2]:
            return StabilityReport(False, k, tuple(degs))
    return StabilityReport(True, None, tuple(degs))


def bubble_transport(h: ProjMap, points: Iterable[BubblePoint],
                     cfg: RunConfig = DEFAULTS) -> dict[BubblePoint, BubblePoint]:
    """Move bubble points along h by evaluation.

    Only proper points off the contracted curves of h move this way; other
    inputs raise TransportUnsupported (they would require resolving h).
    """
    comps = exc_components(h, cfg)
    out: dict[BubblePoint, BubblePoint] = {}
    for p in points:
        if not p.is_proper:
            raise TransportUnsupported(
                f"{p} is infinitely near; evaluation only moves proper points")
        for comp in comps:
            if comp.curve.evaluate(p.root) == 0:
                raise TransportUnsupported(
                    f"{p} lies on {comp.curve} = 0, which {h} contracts")
        q = h.apply(p.root)
        if q is None:
            raise TransportUnsupported(f"{p} is a base point of the transport map")
        out[p] = BubblePoint(q)
    return out
