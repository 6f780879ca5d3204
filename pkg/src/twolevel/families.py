"""Generators for graph-based and classical 2-level polytope families."""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, permutations
from math import factorial

from .errors import BadParams, DimensionGuardExceeded, InputError, NotPerfect, VerificationError
from .graphs import Graph, enumerate_cliques, enumerate_stable_sets, is_perfect, maximal_cliques
from .polytope import (
    FSummary,
    HPolytope,
    VPolytope,
    facets_of,
    polar,
    product,
    summary,
    twisted_prism,
    verify_description,
)

HANSEN_VERIFY_DIM = 10


def _indicator(n: int, members, value=1) -> tuple[int, ...]:
    x = [0] * n
    for i in members:
        x[i] = value
    return tuple(x)


# ---------------------------------------------------------------------------
# stable set and Hansen polytopes


def stab(g: Graph) -> tuple[VPolytope, HPolytope]:
    """STAB(g) with nonnegativity and maximal clique inequalities."""
    if not is_perfect(g):
        raise NotPerfect("stable set polytope description needs a perfect graph")
    n = g.n
    v = VPolytope(n, tuple(_indicator(n, s) for s in enumerate_stable_sets(g, include_empty=True)))
    rows = [(_indicator(n, [i], -1), 0) for i in range(n)]
    rows += [(_indicator(n, c), 1) for c in maximal_cliques(g)]
    h = HPolytope(n, tuple(rows), irredundant=True)
    verify_description(v, h)
    return v, h


@dataclass(frozen=True)
class HansenCounts:
    stable_sets: int  # including the empty set
    cliques: int  # including the empty set


def hansen(g: Graph, verify_dim: int = HANSEN_VERIFY_DIM) -> tuple[VPolytope, FSummary]:
    """Twisted prism over STAB(g), in dimension g.n + 1.

    f0 = 2|S'| and fd1 = 2|C'|; the facet count is checked by enumeration
    up to ``verify_dim`` and reported as formula-only above that.
    """
    d = g.n + 1
    if d > 12:
        raise DimensionGuardExceeded(f"Hansen polytope of dimension {d} exceeds 12")
    if not is_perfect(g):
        raise NotPerfect("Hansen polytopes are only 2-level for perfect graphs")
    n = g.n
    base = VPolytope(n, tuple(_indicator(n, s) for s in enumerate_stable_sets(g, include_empty=True)))
    v = twisted_prism(base)
    s_count = len(base)
    c_count = len(enumerate_cliques(g, include_empty=True))
    if d <= verify_dim:
        s = summary(v)
        if s.f0 != 2 * s_count or s.fd1 != 2 * c_count or s.d != d:
            raise VerificationError(f"Hansen counts {s} differ from 2|S'|={2 * s_count}, 2|C'|={2 * c_count}")
        return v, s
    return v, FSummary.of(d, len(v), 2 * c_count, method="formula-only")


# ---------------------------------------------------------------------------
# min up/down polytopes


def updown_graph(d: int, l: int) -> Graph:
    """G_{d,l}: vertices 1..d-1 stored as 0..d-2, edges when |i-j| <= l-1."""
    return Graph(d - 1, frozenset((i, j) for i, j in combinations(range(d - 1), 2) if j - i <= l - 1))


def switch_indices(x) -> tuple[int, ...]:
    """1-based indices i with x_i != x_{i+1}."""
    return tuple(i + 1 for i in range(len(x) - 1) if x[i] != x[i + 1])


def _check_params(d: int, l: int):
    if not (0 < l < d):
        raise BadParams(f"need 0 < l < d, got d={d}, l={l}")
    if d > 14:
        raise DimensionGuardExceeded(f"min up/down dimension {d} exceeds 14")


def updown_vertices(d: int, l: int) -> list[tuple[int, ...]]:
    out = []
    for bits in range(1 << d):
        x = tuple(bits >> (d - 1 - i) & 1 for i in range(d))
        sw = switch_indices(x)
        if all(b - a >= l for a, b in zip(sw, sw[1:])):
            out.append(x)
    return out


def updown_index_sets(d: int, l: int) -> list[tuple[int, ...]]:
    """Odd subsets {i_1 < ... < i_k} of [d] (1-based) with i_k - i_1 <= l."""
    out = []
    for i1 in range(1, d + 1):
        rest = list(range(i1 + 1, min(i1 + l, d) + 1))
        for k in range(0, len(rest) + 1, 2):
            for tail in combinations(rest, k):
                out.append((i1,) + tail)
    return sorted(out, key=lambda t: (len(t), t))


def index_set_to_clique(I: tuple[int, ...], d: int, l: int) -> tuple[int, ...]:
    i = I[0]
    j = min(i + l, d)
    return tuple(x for x in I if x != j)


def clique_to_index_set(C: tuple[int, ...], d: int, l: int) -> tuple[int, ...]:
    if len(C) % 2 == 1:
        return C
    if not C:
        return (d,)
    j = min(C[0] + l, d)
    return tuple(sorted(set(C) | {j}))


def updown_bijection_check(d: int, l: int) -> int:
    """Verify that index sets correspond one-to-one with cliques of G_{d,l}
    (empty clique included); returns the common count."""
    _check_params(d, l)
    sets = updown_index_sets(d, l)
    g = updown_graph(d, l)
    cliques = {tuple(c + 1 for c in cl) for cl in enumerate_cliques(g, include_empty=True)}
    image = {index_set_to_clique(I, d, l) for I in sets}
    if image != cliques or len(image) != len(sets):
        raise VerificationError("index set to clique map is not a bijection")
    for I in sets:
        if clique_to_index_set(index_set_to_clique(I, d, l), d, l) != I:
            raise VerificationError(f"inverse map fails on {I}")
    return len(sets)


def updown_switch_check(d: int, l: int) -> int:
    """The switch-index map from vertices onto stable sets is exactly 2-to-1."""
    _check_params(d, l)
    g = updown_graph(d, l)
    stable = {tuple(s + 1 for s in st) for st in enumerate_stable_sets(g, include_empty=True)}
    fibres: dict[tuple, int] = {}
    for x in updown_vertices(d, l):
        fibres[switch_indices(x)] = fibres.get(switch_indices(x), 0) + 1
    if set(fibres) != stable or any(k != 2 for k in fibres.values()):
        raise VerificationError("switch map is not 2-to-1 onto stable sets")
    return len(stable)


def min_updown(d: int, l: int, verify_dim: int = 10) -> tuple[VPolytope, HPolytope]:
    _check_params(d, l)
    v = VPolytope(d, tuple(updown_vertices(d, l)))
    rows = []
    for I in updown_index_sets(d, l):
        c = [0] * d
        for pos, i in enumerate(I):
            c[i - 1] = 1 if pos % 2 == 0 else -1
        rows.append((tuple(c), 1))
        rows.append((tuple(-x for x in c), 0))
    h = HPolytope(d, tuple(rows), irredundant=True)
    n_sets = updown_bijection_check(d, l)
    n_stable = updown_switch_check(d, l)
    if len(v) != 2 * n_stable or len(h.inequalities) != 2 * n_sets:
        raise VerificationError("min up/down counts disagree with 2|S'| / 2|C'|")
    if d <= verify_dim:
        verify_description(v, h)
    return v, h


# ---------------------------------------------------------------------------
# Birkhoff polytopes


def birkhoff(n: int) -> tuple[VPolytope, FSummary]:
    """Permutation matrices of order n, flattened row by row."""
    if not (2 <= n <= 5):
        raise BadParams(f"Birkhoff polytope needs 2 <= n <= 5, got {n}")
    verts = []
    for perm in permutations(range(n)):
        x = [0] * (n * n)
        for r, c in enumerate(perm):
            x[r * n + c] = 1
        verts.append(tuple(x))
    v = VPolytope(n * n, tuple(verts))
    expected = FSummary.of((n - 1) ** 2, factorial(n), n * n if n >= 3 else 2, method="formula-only")
    if n <= 4:
        s = summary(v)
        if (s.d, s.f0, s.fd1) != (expected.d, expected.f0, expected.fd1):
            raise VerificationError(f"Birkhoff B{n}: enumerated {s} vs formula {expected}")
        return v, s
    return v, expected


# ---------------------------------------------------------------------------
# Hanner polytopes


@dataclass(frozen=True)
class HannerExpr:
    kind: str  # "segment" | "product" | "polar"
    children: tuple["HannerExpr", ...] = ()

    def __post_init__(self):
        if self.kind == "segment" and self.children:
            raise InputError("segment takes no arguments")
        if self.kind == "polar" and len(self.children) != 1:
            raise InputError("polar takes exactly one argument")
        if self.kind == "product" and not self.children:
            raise InputError("product needs at least one factor")
        if self.kind not in ("segment", "product", "polar"):
            raise InputError(f"unknown Hanner node {self.kind!r}")

    @property
    def dim(self) -> int:
        if self.kind == "segment":
            return 1
        return sum(c.dim for c in self.children)

    def __str__(self) -> str:
        if self.kind == "segment":
            return "segment"
        return f"{self.kind}(" + ",".join(str(c) for c in self.children) + ")"


SEGMENT = HannerExpr("segment")


def parse_hanner(text: str) -> HannerExpr:
    """Parse e.g. ``polar(product(segment,segment,segment))``."""
    tokens = re.findall(r"[a-z]+|[(),]", text.replace(" ", ""))
    pos = 0

    def parse() -> HannerExpr:
        nonlocal pos
        if pos >= len(tokens):
            raise InputError("unexpected end of Hanner expression")
        name = tokens[pos]
        pos += 1
        if name == "segment":
            return SEGMENT
        if pos >= len(tokens) or tokens[pos] != "(":
            raise InputError(f"expected '(' after {name}")
        pos += 1
        kids = [parse()]
        while tokens[pos] == ",":
            pos += 1
            kids.append(parse())
        if tokens[pos] != ")":
            raise InputError("expected ')'")
        pos += 1
        return HannerExpr(name, tuple(kids))

    try:
        e = parse()
    except IndexError:
        raise InputError("unbalanced Hanner expression") from None
    if pos != len(tokens):
        raise InputError("trailing tokens in Hanner expression")
    return e


def _build(e: HannerExpr) -> VPolytope:
    if e.kind == "segment":
        return VPolytope(1, ((-1,), (1,)))
    if e.kind == "polar":
        return polar(_build(e.children[0]))
    out = _build(e.children[0])
    for c in e.children[1:]:
        out = product(out, _build(c))
    return out


def hanner(e: HannerExpr | str) -> tuple[VPolytope, FSummary]:
    if isinstance(e, str):
        e = parse_hanner(e)
    if e.dim > 10:
        raise DimensionGuardExceeded(f"Hanner polytope of dimension {e.dim} exceeds 10")
    v = _build(e)
    return v, summary(v)


__all__ = [
    "stab",
    "hansen",
    "min_updown",
    "updown_graph",
    "updown_vertices",
    "updown_index_sets",
    "updown_bijection_check",
    "updown_switch_check",
    "switch_indices",
    "birkhoff",
    "HannerExpr",
    "SEGMENT",
    "parse_hanner",
    "hanner",
]
