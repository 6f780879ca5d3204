"""Exact polytopes: V- and H-representations, slack matrices, 2-levelness.

Coordinates are ``fractions.Fraction``; inequality systems are stored as
primitive integer rows.  Facet and vertex enumeration go through the
integer double description engine in :mod:`twolevel.dd`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from . import dd
from .errors import (
    DimensionGuardExceeded,
    DimensionMismatch,
    EmptyInput,
    InvalidPair,
    NonInjectiveOnHull,
    NotAVertex,
    OriginNotInterior,
    Unbounded,
    VerificationError,
)
from .linalg import (
    common_denominator,
    dot,
    integer_row,
    nullspace,
    primitive,
    rank,
    rref,
    solve_affine,
)

DEFAULT_MAX_DIM = 14
_settings = {"max_dim": DEFAULT_MAX_DIM}


def set_max_dim(value: int) -> None:
    """Change the dimension guard used by facet enumeration."""
    _settings["max_dim"] = int(value)


def get_max_dim() -> int:
    return _settings["max_dim"]


Point = tuple[Fraction, ...]
Ineq = tuple[tuple[int, ...], int]


def _as_point(p: Iterable, dim: int) -> Point:
    pt = tuple(Fraction(x) for x in p)
    if len(pt) != dim:
        raise DimensionMismatch(f"point {p!r} has length {len(pt)}, expected {dim}")
    return pt


@dataclass(frozen=True)
class VPolytope:
    """Convex hull of a finite list of vertices.

    The constructor only canonicalizes (dedup + lexicographic sort); use
    :func:`convex_hull` to drop points that are not vertices.  Facet
    enumeration raises :class:`NotAVertex` when a listed point is redundant.
    """

    dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        pts = sorted({_as_point(p, self.dim) for p in self.vertices})
        object.__setattr__(self, "vertices", tuple(pts))

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def is_empty(self) -> bool:
        return not self.vertices

    @cached_property
    def scaled(self) -> tuple[int, list[tuple[int, ...]]]:
        """``(L, W)`` with ``W[i] = L * vertices[i]`` integral."""
        den = common_denominator(x for v in self.vertices for x in v)
        return den, [tuple(int(x * den) for x in v) for v in self.vertices]

    @cached_property
    def affine_dim(self) -> int:
        if not self.vertices:
            return -1
        base = self.vertices[0]
        return rank([[a - b for a, b in zip(v, base)] for v in self.vertices[1:]]) if len(self) > 1 else 0


def _canon_ineq(a: Sequence, b) -> Ineq:
    row = integer_row(list(a) + [b])
    return row[:-1], row[-1]


def _canon_eq(c: Sequence, d) -> Ineq:
    row = integer_row(list(c) + [d])
    lead = next((x for x in row if x), 0)
    if lead < 0:
        row = tuple(-x for x in row)
    return row[:-1], row[-1]


@dataclass(frozen=True)
class HPolytope:
    """``{x : a.x <= b for (a, b) in inequalities, c.x = d for (c, d) in equations}``."""

    dim: int
    inequalities: tuple[Ineq, ...]
    equations: tuple[Ineq, ...] = ()
    irredundant: bool = False

    def __post_init__(self):
        ineqs = set()
        for a, b in self.inequalities:
            if len(a) != self.dim:
                raise DimensionMismatch(f"inequality of length {len(a)} in dimension {self.dim}")
            ineqs.add(_canon_ineq(a, b))
        eqs = set()
        for c, d in self.equations:
            if len(c) != self.dim:
                raise DimensionMismatch(f"equation of length {len(c)} in dimension {self.dim}")
            if any(c) or d:
                eqs.add(_canon_eq(c, d))
        object.__setattr__(self, "inequalities", tuple(sorted(ineqs)))
        object.__setattr__(self, "equations", tuple(sorted(eqs)))

    def contains(self, x: Sequence) -> bool:
        x = [Fraction(v) for v in x]
        return all(dot(a, x) <= b for a, b in self.inequalities) and all(
            dot(c, x) == d for c, d in self.equations
        )


@dataclass(frozen=True)
class SlackMatrix:
    """Rows indexed by facets, columns by vertices."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.entries), (len(self.entries[0]) if self.entries else 0)

    @cached_property
    def scaled(self) -> tuple[tuple[Fraction, ...], ...]:
        # Each row divided by its smallest nonzero entry.
        out = []
        for row in self.entries:
            nz = [x for x in row if x]
            m = min(nz) if nz else Fraction(1)
            out.append(tuple(x / m for x in row))
        return tuple(out)

    @property
    def is_zero_one(self) -> bool:
        return all(x in (0, 1) for row in self.scaled for x in row)

    def levels(self, i: int) -> list[Fraction]:
        return sorted(set(self.entries[i]))


@dataclass(frozen=True)
class FSummary:
    d: int
    f0: int
    fd1: int
    product: int
    bound: int
    satisfies: bool
    equality: bool
    # "enumerated" when fd1 came from facet enumeration, else "formula-only"
    method: str = "enumerated"

    @classmethod
    def of(cls, d: int, f0: int, fd1: int, method: str = "enumerated") -> "FSummary":
        product = f0 * fd1
        bound = d * 2 ** (d + 1)
        return cls(d, f0, fd1, product, bound, product <= bound, product == bound, method)

    def as_dict(self) -> dict:
        return {
            "d": self.d,
            "f0": self.f0,
            "fd1": self.fd1,
            "product": self.product,
            "bound": self.bound,
            "satisfies": self.satisfies,
            "equality": self.equality,
            "method": self.method,
        }


# ---------------------------------------------------------------------------
# facet enumeration


@dataclass
class _Hull:
    ineqs: list[Ineq]
    eqs: list[Ineq]
    # facet index -> bitset of tight points, point index -> bitset of facets
    facet_points: list[int] = field(default_factory=list)
    point_facets: list[int] = field(default_factory=list)
    is_vertex: list[bool] = field(default_factory=list)


def _affine_hull(points: Sequence[Point], dim: int):
    """Equations of the affine hull in reduced echelon form, plus free coordinates."""
    rows = [list(p) + [Fraction(-1)] for p in points]
    ns = nullspace(rows, dim + 1)
    red, pivots = rref(ns) if ns else ([], [])
    free = [c for c in range(dim) if c not in pivots]
    return red, pivots, free


def _hull(points: Sequence[Point], dim: int, max_dim: int | None) -> _Hull:
    if not points:
        raise EmptyInput("polytope has no points")
    red, pivots, free = _affine_hull(points, dim)
    eqs = [_canon_eq(r[:dim], r[dim]) for r in red]
    k = len(free)
    limit = get_max_dim() if max_dim is None else max_dim
    if k > limit:
        raise DimensionGuardExceeded(f"affine dimension {k} exceeds guard {limit}")
    npts = len(points)
    if k == 0:
        return _Hull([], eqs, [], [0] * npts, [True] + [False] * (npts - 1))

    den = common_denominator(p[c] for p in points for c in free)
    w = [tuple(int(p[c] * den) for c in free) for p in points]
    rows = [tuple(-x for x in wi) + (den,) for wi in w]
    rays = dd.extreme_rays(rows)

    ineqs: list[Ineq] = []
    for ray in rays:
        a_free, b = ray[:-1], ray[-1]
        if not any(a_free):
            continue
        a = [0] * dim
        for c, x in zip(free, a_free):
            a[c] = x
        ineqs.append((tuple(a), b))
    ineqs.sort()

    facet_points = []
    point_facets = [0] * npts
    for fi, (a, b) in enumerate(ineqs):
        af = [a[c] for c in free]
        bits = 0
        for pi, wi in enumerate(w):
            if dot(af, wi) == b * den:
                bits |= 1 << pi
                point_facets[pi] |= 1 << fi
        facet_points.append(bits)

    everything = (1 << npts) - 1
    is_vertex = []
    for pi in range(npts):
        m = everything
        fs = point_facets[pi]
        while fs and m != 1 << pi:
            low = fs & -fs
            m &= facet_points[low.bit_length() - 1]
            fs ^= low
        is_vertex.append(m == 1 << pi)
    return _Hull(ineqs, eqs, facet_points, point_facets, is_vertex)


def facets_of(v: VPolytope, max_dim: int | None = None) -> HPolytope:
    """Irredundant H-description of a V-polytope.

    Inequalities are written in the coordinates left free by the affine
    hull equations, which makes the representation canonical.
    """
    return _facets_cached(v, max_dim)[0]


def _facets_cached(v: VPolytope, max_dim: int | None):
    cache = v.__dict__.setdefault("_facet_cache", {})
    if "hull" not in cache:
        hull = _hull(v.vertices, v.dim, max_dim)
        bad = [v.vertices[i] for i, ok in enumerate(hull.is_vertex) if not ok]
        if bad:
            raise NotAVertex(f"{len(bad)} listed points are not vertices, e.g. {_fmt(bad[0])}")
        h = HPolytope(v.dim, tuple(hull.ineqs), tuple(hull.eqs), irredundant=True)
        # HPolytope sorts identically to hull.ineqs, so bitsets stay aligned
        assert list(h.inequalities) == hull.ineqs
        cache["hull"] = (h, hull)
    return cache["hull"]


def _fmt(p: Point) -> str:
    return "(" + ", ".join(str(x) for x in p) + ")"


def convex_hull(points: Iterable[Sequence], dim: int | None = None, max_dim: int | None = None) -> VPolytope:
    """V-polytope of the vertices of ``conv(points)``; non-vertices are dropped."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    if not pts:
        if dim is None:
            raise EmptyInput("no points")
        return VPolytope(dim, ())
    if dim is None:
        dim = len(pts[0])
    v = VPolytope(dim, tuple(pts))
    hull = _hull(v.vertices, dim, max_dim)
    keep = tuple(p for p, ok in zip(v.vertices, hull.is_vertex) if ok)
    return VPolytope(dim, keep)


def reduce_modulo(ineq: Ineq, equations: Sequence[Ineq], dim: int) -> Ineq:
    """Canonical form of an inequality modulo the given affine equations.

    Coefficients on the pivot coordinates of the reduced echelon form of the
    equations are eliminated, matching the form produced by :func:`facets_of`.
    """
    if not equations:
        return _canon_ineq(*ineq)
    red, pivots = rref([list(c) + [d] for c, d in equations])
    a = [Fraction(x) for x in ineq[0]]
    b = Fraction(ineq[1])
    for row, p in zip(red, pivots):
        f = a[p]
        if f:
            a = [x - f * y for x, y in zip(a, row[:dim])]
            b -= f * row[dim]
    return _canon_ineq(a, b)


# ---------------------------------------------------------------------------
# vertex enumeration


def vertices_of(h: HPolytope) -> VPolytope:
    """Vertices of a bounded H-polytope; an empty V-polytope if infeasible."""
    n = h.dim
    sol = solve_affine([c for c, _ in h.equations], [d for _, d in h.equations], n)
    if sol is None:
        return VPolytope(n, ())
    x0, basis = sol
    k = len(basis)
    if k == 0:
        return VPolytope(n, (tuple(x0),) if h.contains(x0) else ())

    a_red = []
    b_red = []
    for a, b in h.inequalities:
        a_red.append([dot(a, col) for col in basis])
        b_red.append(b - dot(a, x0))
    rows = []
    for ar, br in zip(a_red, b_red):
        if not any(ar):
            if br < 0:
                return VPolytope(n, ())
            continue
        rows.append(integer_row([br] + [-x for x in ar]))
    rows.append((1,) + (0,) * k)

    if rank([r[1:] for r in rows]) < k:
        # Nontrivial lineality: either empty or unbounded.
        rowspace, _ = rref([r[1:] for r in rows[:-1]])
        proj = [integer_row([r[0]] + [dot(r[1:], s) for s in rowspace]) for r in rows[:-1]]
        proj.append((1,) + (0,) * len(rowspace))
        rays = dd.extreme_rays(proj) if rowspace else [(1,)] if all(r[0] >= 0 for r in proj) else []
        if any(r[0] > 0 for r in rays):
            raise Unbounded("polyhedron has a nontrivial lineality space")
        return VPolytope(n, ())

    rays = dd.extreme_rays(rows)
    pts = []
    unbounded = False
    for r in rays:
        t = r[0]
        if t > 0:
            z = [Fraction(x, t) for x in r[1:]]
            pts.append(tuple(x0[i] + sum(z[j] * basis[j][i] for j in range(k)) for i in range(n)))
        else:
            unbounded = True
    if not pts:
        return VPolytope(n, ())
    if unbounded:
        raise Unbounded("polyhedron has recession directions")
    return VPolytope(n, tuple(pts))


# ---------------------------------------------------------------------------
# slack matrices and 2-levelness


def _int_slacks(v: VPolytope, h: HPolytope) -> list[list[int]]:
    """Slack rows scaled by the common vertex denominator."""
    den, w = v.scaled
    out = []
    for a, b in h.inequalities:
        out.append([b * den - dot(a, wi) for wi in w])
    return out


def slack(v: VPolytope, h: HPolytope) -> SlackMatrix:
    den, w = v.scaled
    for c, d in h.equations:
        if any(dot(c, wi) != d * den for wi in w):
            raise InvalidPair("a vertex violates an equation")
    rows = _int_slacks(v, h)
    if any(x < 0 for r in rows for x in r):
        raise InvalidPair("a vertex violates an inequality")
    return SlackMatrix(tuple(tuple(Fraction(x, den) for x in r) for r in rows))


def is_two_level(v: VPolytope, max_dim: int | None = None):
    """``(True, None)`` or ``(False, certificate)`` naming a facet with 3+ slack levels."""
    h = facets_of(v, max_dim)
    den = v.scaled[0]
    for (a, b), row in zip(h.inequalities, _int_slacks(v, h)):
        levels = set(row)
        if len(levels) > 2:
            return False, {"facet": (a, b), "levels": sorted(Fraction(x, den) for x in levels)}
    return True, None


def summary(v: VPolytope, max_dim: int | None = None) -> FSummary:
    h = facets_of(v, max_dim)
    return FSummary.of(v.affine_dim, len(v), len(h.inequalities))


def edges(v: VPolytope, max_dim: int | None = None) -> list[tuple[int, int]]:
    """Index pairs of adjacent vertices."""
    h, hull = _facets_cached(v, max_dim)
    n = len(v)
    full = (1 << n) - 1
    out = []
    for i, j in combinations(range(n), 2):
        common = hull.point_facets[i] & hull.point_facets[j]
        target = (1 << i) | (1 << j)
        m = full
        while common and m != target:
            low = common & -common
            m &= hull.facet_points[low.bit_length() - 1]
            common ^= low
        if m == target:
            out.append((i, j))
    return out


def count_edges(v: VPolytope, max_dim: int | None = None) -> int:
    if len(v) == 2:
        return 1
    return len(edges(v, max_dim))


def equality_shape(v: VPolytope, max_dim: int | None = None) -> str | None:
    """``"cube"``/``"cross-polytope"`` if the combinatorics match, else None.

    Cube: simple, 2^d vertices, and the 2d facets split into d pairs of
    disjoint facets.  Each vertex then picks one facet from every pair and
    the incidences are those of [0,1]^d.  The cross-polytope test is the
    dual one on vertices.
    """
    d = v.affine_dim
    if d <= 0:
        return "cube" if d == 0 else None
    h, hull = _facets_cached(v, max_dim)
    f0, fd1 = len(v), len(h.inequalities)
    if (f0 == 2**d and fd1 == 2 * d and all(b.bit_count() == d for b in hull.point_facets)
            and _opposite_pairs(hull.facet_points)):
        return "cube"
    if (f0 == 2 * d and fd1 == 2**d and all(b.bit_count() == d for b in hull.facet_points)
            and _opposite_pairs(hull.point_facets)):
        return "cross-polytope"
    return None


def _opposite_pairs(masks) -> bool:
    """Every mask is disjoint from exactly one other mask."""
    return all(sum(1 for j, b in enumerate(masks) if j != i and not a & b) == 1 for i, a in enumerate(masks))


# ---------------------------------------------------------------------------
# constructions


def polar(v: VPolytope, max_dim: int | None = None) -> VPolytope:
    if v.affine_dim != v.dim:
        raise OriginNotInterior("polar needs a full-dimensional polytope")
    h = facets_of(v, max_dim)
    if any(b <= 0 for _, b in h.inequalities):
        raise OriginNotInterior("origin is not in the interior")
    return VPolytope(v.dim, tuple(tuple(Fraction(x, b) for x in a) for a, b in h.inequalities))


def product(p: VPolytope, q: VPolytope) -> VPolytope:
    return VPolytope(p.dim + q.dim, tuple(x + y for x in p.vertices for y in q.vertices))


def twisted_prism(p: VPolytope) -> VPolytope:
    one = Fraction(1)
    pts = [x + (one,) for x in p.vertices] + [tuple(-c for c in x) + (-one,) for x in p.vertices]
    return VPolytope(p.dim + 1, tuple(pts))


def affine_image(
    p: VPolytope,
    A: Sequence[Sequence[int]],
    t: Sequence[int] | None = None,
    expect_isomorphic: bool = False,
    max_dim: int | None = None,
) -> VPolytope:
    """Image of ``p`` under ``x -> A x + t``; vertexhood is re-verified."""
    if any(len(row) != p.dim for row in A):
        raise DimensionMismatch("matrix columns must match the polytope dimension")
    m = len(A)
    t = [0] * m if t is None else list(t)
    if len(t) != m:
        raise DimensionMismatch("translation length must match matrix rows")
    if expect_isomorphic and len(p) > 1:
        base = p.vertices[0]
        diffs = [[a - b for a, b in zip(x, base)] for x in p.vertices[1:]]
        images = [[dot(row, dvec) for row in A] for dvec in diffs]
        if rank(images) != p.affine_dim:
            raise NonInjectiveOnHull("map collapses the affine hull")
    pts = [tuple(dot(row, x) + c for row, c in zip(A, t)) for x in p.vertices]
    return convex_hull(pts, m, max_dim)


def cube(d: int) -> VPolytope:
    from itertools import product as iproduct

    return VPolytope(d, tuple(iproduct((0, 1), repeat=d)))


def is_valid_for(v: VPolytope, ineq: Ineq) -> bool:
    den, w = v.scaled
    a, b = ineq
    return all(dot(a, wi) <= b * den for wi in w)


def tight_vertices(v: VPolytope, ineq: Ineq) -> frozenset[int]:
    den, w = v.scaled
    a, b = ineq
    return frozenset(i for i, wi in enumerate(w) if dot(a, wi) == b * den)


def verify_description(v: VPolytope, h: HPolytope) -> None:
    """Raise VerificationError unless h is exactly the facet system of conv(v).

    Inequalities of h are first reduced modulo the affine hull equations, so
    any valid way of writing a facet is accepted.
    """
    f = facets_of(v)
    mine = {reduce_modulo(r, f.equations, v.dim) for r in h.inequalities}
    if mine != set(f.inequalities):
        extra = sorted(mine - set(f.inequalities))[:3]
        missing = sorted(set(f.inequalities) - mine)[:3]
        raise VerificationError(
            f"description has {len(mine)} rows, facet enumeration {len(f.inequalities)}; "
            f"extra {extra}, missing {missing}"
        )
    for c, d in h.equations:
        if not all(dot(c, x) == d for x in v.vertices):
            raise VerificationError(f"equation {(c, d)} not satisfied by all vertices")
    if rank([list(c) for c, _ in h.equations] or [[0] * v.dim]) != len(f.equations):
        raise VerificationError("equations do not span the affine hull complement")


def facet_polytopes(v: VPolytope, max_dim: int | None = None) -> list[VPolytope]:
    """V-representations of all facets of ``v``."""
    h, hull = _facets_cached(v, max_dim)
    out = []
    for bits in hull.facet_points:
        pts = tuple(v.vertices[i] for i in range(len(v)) if bits >> i & 1)
        out.append(VPolytope(v.dim, pts))
    return out


__all__ = [
    "VPolytope",
    "HPolytope",
    "SlackMatrix",
    "FSummary",
    "facets_of",
    "vertices_of",
    "convex_hull",
    "slack",
    "is_two_level",
    "summary",
    "edges",
    "count_edges",
    "polar",
    "product",
    "twisted_prism",
    "affine_image",
    "reduce_modulo",
    "equality_shape",
    "facet_polytopes",
    "verify_description",
    "cube",
    "set_max_dim",
    "primitive",
]
