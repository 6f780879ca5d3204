"""Polytopes beyond the 2-level world that break the f0*fd1 bound, and a few
facts about 0/1 matrices that generalize slack matrices.

Counts that come from lower-bound arguments are flagged as such in the
returned :class:`BoundReport`; the ``violated`` flag is only meaningful as a
certificate when it is computed from lower bounds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product as iproduct
from math import comb, floor, ceil
from typing import Sequence

from . import dd
from .errors import (
    BadParams,
    Disconnected,
    InputError,
    NonBinaryIntegerPoints,
    NotReduced,
    SizeGuardExceeded,
    VerificationError,
)
from .graphs import Graph, _clique_masks, _complement_adj, _to_tuple, tradeoff_check
from .linalg import dot, integer_row, rank, rref
from .polytope import (
    HPolytope,
    VPolytope,
    convex_hull,
    facets_of,
    get_max_dim,
    is_two_level,
    vertices_of,
)


@dataclass(frozen=True)
class BoundReport:
    label: str
    d: int
    f0: int
    fd1: int
    product: int
    bound: int
    violated: bool
    f0_lower: bool = False  # True when f0 is only a lower bound
    fd1_lower: bool = False
    details: dict = field(default_factory=dict, compare=False)

    @classmethod
    def of(cls, label, d, f0, fd1, f0_lower=False, fd1_lower=False, details=None) -> "BoundReport":
        prod = f0 * fd1
        bound = d * 2 ** (d + 1)
        return cls(label, d, f0, fd1, prod, bound, prod > bound, f0_lower, fd1_lower, dict(details or {}))

    def as_dict(self) -> dict:
        out = {k: getattr(self, k) for k in
               ("label", "d", "f0", "fd1", "product", "bound", "violated", "f0_lower", "fd1_lower")}
        out["details"] = dict(self.details)
        return out


# ---------------------------------------------------------------------------
# small graph helpers (bitmask based)


def _connected(mask: int, adj: Sequence[int]) -> bool:
    if not mask:
        return False
    seen = mask & -mask
    frontier = seen
    while frontier:
        nxt = 0
        for v in _to_tuple(frontier):
            nxt |= adj[v]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def _two_connected(mask: int, adj: Sequence[int]) -> bool:
    """Connected on >= 2 vertices with no cut vertex (K2 counts)."""
    k = mask.bit_count()
    if k < 2 or not _connected(mask, adj):
        return False
    if k == 2:
        return True
    return all(_connected(mask & ~(1 << v), adj) for v in _to_tuple(mask))


def _contract(mask: int, adj: Sequence[int], n: int) -> list[int]:
    """Adjacency of G/S on n+1 vertices; the contracted node is ``n``."""
    s = 1 << n
    out = []
    merged = 0
    for v in range(n):
        if mask >> v & 1:
            merged |= adj[v]
            out.append(0)
        else:
            out.append((adj[v] & ~mask) | (s if adj[v] & mask else 0))
    out.append(merged & ~mask)
    return out


def _blocks(g: Graph) -> list[int]:
    """Biconnected components (bridges included) as vertex bitmasks."""
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return [sum(1 << v for v in comp) for comp in nx.biconnected_components(G)]


# ---------------------------------------------------------------------------
# forests of K_{2,n}


def k2n(n: int) -> Graph:
    """K_{2,n} with the two hubs 0 and 1 and middle nodes 2..n+1."""
    return Graph(n + 2, frozenset((h, k) for h in (0, 1) for k in range(2, n + 2)))


def _acyclic(n_vertices: int, edge_list) -> bool:
    parent = list(range(n_vertices))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edge_list:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


def count_forests(g: Graph) -> int:
    """Number of acyclic edge subsets (the empty one included)."""
    es = g.sorted_edges()
    if len(es) > 24:
        raise SizeGuardExceeded(f"forest scan over 2^{len(es)} subsets")
    total = 0
    for bits in range(1 << len(es)):
        if _acyclic(g.n, [es[i] for i in range(len(es)) if bits >> i & 1]):
            total += 1
    return total


def forest_family_sound(n: int) -> bool:
    """Every subgraph of K_{2,n} with at most one edge at each middle node is
    a forest; there are 3^n of them."""
    seen = 0
    for choice in iproduct((None, 0, 1), repeat=n):
        es = [(h, k + 2) for k, h in enumerate(choice) if h is not None]
        if not _acyclic(n + 2, es):
            return False
        seen += 1
    return seen == 3**n


def forest_study(n: int) -> BoundReport:
    """Forest polytope of K_{2,n}: d = 2n, f0 >= 3^n, fd1 >= 2^n - (n+1)."""
    if not (3 <= n <= 12):
        raise BadParams(f"forest study needs 3 <= n <= 12, got {n}")
    details = {}
    if n <= 6:
        exact = count_forests(k2n(n))
        if exact < 3**n or not forest_family_sound(n):
            raise VerificationError("forest lower-bound family is unsound")
        details["forests_exact"] = exact
    return BoundReport.of(f"forests(K_2,{n})", 2 * n, 3**n, 2**n - (n + 1), True, True, details)


# ---------------------------------------------------------------------------
# spanning trees


def kirchhoff(g: Graph) -> int:
    """Spanning tree count as a reduced Laplacian determinant (Bareiss)."""
    n = g.n
    if n <= 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v in g.edges:
        lap[u][u] += 1
        lap[v][v] += 1
        lap[u][v] -= 1
        lap[v][u] -= 1
    a = [row[1:] for row in lap[1:]]
    m = n - 1
    sign, prev = 1, 1
    for k in range(m - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, m) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[m - 1][m - 1]


def spanning_trees(g: Graph) -> list[tuple[int, ...]]:
    """Incidence vectors (over sorted edges) of all spanning trees."""
    es = g.sorted_edges()
    if len(es) > 20:
        raise SizeGuardExceeded("spanning tree enumeration limited to 20 edges")
    out = []
    for c in combinations(range(len(es)), g.n - 1):
        if _acyclic(g.n, [es[i] for i in c]):
            chosen = set(c)
            out.append(tuple(1 if i in chosen else 0 for i in range(len(es))))
    return out


def _block_facets(g: Graph, block: int) -> tuple[int, int]:
    """(subset facets, nonnegativity facets) for one 2-connected block."""
    adj = [a & block for a in g.adj]
    n = g.n
    subset = 0
    # enumerate S as submasks of the block with |S| >= 2 and S != block
    sub = (block - 1) & block
    while sub:
        if sub.bit_count() >= 2 and _two_connected(sub, adj):
            cadj = _contract(sub, adj, n)
            if _two_connected((block & ~sub) | 1 << n, cadj):
                subset += 1
        sub = (sub - 1) & block
    nonneg = 0
    for u, v in g.edges:
        if block >> u & 1 and block >> v & 1:
            a2 = list(adj)
            a2[u] &= ~(1 << v)
            a2[v] &= ~(1 << u)
            if _two_connected(block, a2):
                nonneg += 1
    return subset, nonneg


def spanning_tree_facets(g: Graph) -> int:
    """Facet count of the spanning tree polytope from the 2-connectivity
    criterion, summed over the blocks of g."""
    total = 0
    for b in _blocks(g):
        if b.bit_count() >= 3:
            s, z = _block_facets(g, b)
            total += s + z
    return total


def spanning_tree_study(g: Graph, cross_check_edges: int = 12) -> BoundReport:
    if g.n > 16:
        raise SizeGuardExceeded(f"spanning tree study limited to 16 vertices, got {g.n}")
    if g.n == 0 or not _connected((1 << g.n) - 1, g.adj):
        raise Disconnected("graph is not connected")
    f0 = kirchhoff(g)
    blocks = _blocks(g) if g.edges else []
    d = len(g.edges) - len(blocks)
    fd1 = spanning_tree_facets(g)
    details = {"vertices": g.n, "edges": len(g.edges), "blocks": len(blocks)}
    exact = False
    if len(g.edges) <= cross_check_edges:
        trees = spanning_trees(g)
        if len(trees) != f0:
            raise VerificationError(f"Kirchhoff count {f0} differs from enumeration {len(trees)}")
        v = VPolytope(len(g.edges), tuple(trees))
        if v.affine_dim != d:
            raise VerificationError(f"dimension {v.affine_dim} differs from |E| - #blocks = {d}")
        if d <= 10:
            n_fac = len(facets_of(v).inequalities)
            if n_fac != fd1:
                raise VerificationError(f"criterion gives {fd1} facets, enumeration {n_fac}")
            exact = True
    return BoundReport.of(f"spanning-trees(n={g.n},m={len(g.edges)})", d, f0, fd1, False, not exact, details)


def hypercube_graph(k: int) -> Graph:
    n = 1 << k
    return Graph(n, frozenset((u, u ^ (1 << i)) for u in range(n) for i in range(k) if u < u ^ (1 << i)))


def wheel(k: int) -> Graph:
    """Cycle on 0..k-1 plus a hub k joined to every rim vertex."""
    rim = [(i, (i + 1) % k) for i in range(k)]
    return Graph.from_edges(k + 1, rim + [(i, k) for i in range(k)])


# ---------------------------------------------------------------------------
# a 3-level relative of the min up/down polytopes


def three_level_vertices(d: int) -> list[tuple[int, ...]]:
    """0/1 strings with at most one block of consecutive ones."""
    out = [(0,) * d]
    for i in range(d):
        for j in range(i, d):
            out.append(tuple(1 if i <= k <= j else 0 for k in range(d)))
    return out


def three_level_minupdown(d: int, geometric_limit: int = 8) -> BoundReport:
    if d < 3:
        raise BadParams(f"need d >= 3, got {d}")
    f0 = comb(d + 1, 2) + 1
    fd1 = 2 ** (d - 1) + d
    details = {}
    if d <= geometric_limit:
        v = VPolytope(d, tuple(three_level_vertices(d)))
        h = facets_of(v)
        if len(v) != f0 or len(h.inequalities) != fd1 or v.affine_dim != d:
            raise VerificationError(f"hull gives f0={len(v)}, fd1={len(h.inequalities)}")
        ok, cert = is_two_level(v)
        if ok or len(cert["levels"]) != 3:
            raise VerificationError("expected a facet with exactly three slack levels")
        details["witness"] = {"a": list(cert["facet"][0]), "b": cert["facet"][1],
                              "levels": [str(x) for x in cert["levels"]]}
    rep = BoundReport.of(f"three-level(d={d})", d, f0, fd1, details=details)
    if not rep.violated:
        raise VerificationError(f"{rep.label} should exceed the bound")
    return rep


# ---------------------------------------------------------------------------
# fractional stable set polytope of the complete graph


def fractional_stab_h(d: int) -> HPolytope:
    rows = []
    for i in range(d):
        a = [0] * d
        a[i] = -1
        rows.append((a, 0))
    for i, j in combinations(range(d), 2):
        a = [0] * d
        a[i] = a[j] = 1
        rows.append((a, 1))
    return HPolytope(d, tuple(rows))


def fractional_stab_clique(d: int, geometric_limit: int = 7) -> BoundReport:
    if not (3 <= d <= 10):
        raise BadParams(f"need 3 <= d <= 10, got {d}")
    v = vertices_of(fractional_stab_h(d))
    f0 = 2**d - comb(d, 2)
    if len(v) != f0:
        raise VerificationError(f"vertices_of found {len(v)} vertices, expected {f0}")
    integral = sum(1 for p in v.vertices if all(x.denominator == 1 for x in p))
    if integral != d + 1:
        raise VerificationError(f"{integral} integral vertices, expected {d + 1}")
    fd1 = d + comb(d, 2)
    if d <= geometric_limit and len(facets_of(v).inequalities) != fd1:
        raise VerificationError("facet count differs from d + C(d,2)")
    return BoundReport.of(f"fractional-stab(K_{d})", d, f0, fd1, details={"integral": integral})


# ---------------------------------------------------------------------------
# integer hulls


def _bounding_box(h: HPolytope) -> list[tuple[int, int]]:
    v = vertices_of(h)
    if not v.vertices:
        return []
    box = []
    for i in range(h.dim):
        col = [p[i] for p in v.vertices]
        box.append((ceil(min(col)), floor(max(col))))
    return box


def integer_points(h: HPolytope, max_dim: int | None = None) -> list[tuple[int, ...]]:
    """Every lattice point of h, by pruned search inside its bounding box."""
    limit = get_max_dim() if max_dim is None else max_dim
    if h.dim > limit:
        raise SizeGuardExceeded(f"integer hull in dimension {h.dim} exceeds {limit}")
    box = _bounding_box(h)
    if not box or any(lo > hi for lo, hi in box):
        return []
    rows = [(list(a), b) for a, b in h.inequalities]
    for c, d in h.equations:
        rows.append((list(c), d))
        rows.append(([-x for x in c], -d))
    n = h.dim
    # suffix minima of a.x over the box, for pruning
    tails = []
    for a, b in rows:
        t = [0] * (n + 1)
        for i in range(n - 1, -1, -1):
            lo, hi = box[i]
            t[i] = t[i + 1] + min(a[i] * lo, a[i] * hi)
        tails.append(t)
    out = []
    x = [0] * n
    partial = [0] * len(rows)

    def rec(i: int):
        if i == n:
            out.append(tuple(x))
            return
        lo, hi = box[i]
        for val in range(lo, hi + 1):
            ok = True
            for r, (a, b) in enumerate(rows):
                s = partial[r] + a[i] * val
                if s + tails[r][i + 1] > b:
                    ok = False
                    break
            if not ok:
                continue
            x[i] = val
            for r, (a, _) in enumerate(rows):
                partial[r] += a[i] * val
            rec(i + 1)
            for r, (a, _) in enumerate(rows):
                partial[r] -= a[i] * val

    rec(0)
    return out


def integer_hull(h: HPolytope, require_binary: bool = False, max_dim: int | None = None) -> VPolytope:
    pts = integer_points(h, max_dim)
    if require_binary:
        bad = [p for p in pts if any(x not in (0, 1) for x in p)]
        if bad:
            raise NonBinaryIntegerPoints(f"{len(bad)} integer points outside {{0,1}}^d, e.g. {bad[0]}")
    if not pts:
        return VPolytope(h.dim, ())
    return convex_hull(pts, h.dim, max_dim)


# ---------------------------------------------------------------------------
# 0/1 matrices


@dataclass(frozen=True)
class ZeroOneMatrix:
    rows: int
    cols: int
    bits: tuple[tuple[int, ...], ...]
    reduced: bool = False

    def __post_init__(self):
        bits = tuple(tuple(int(x) for x in r) for r in self.bits)
        if len(bits) != self.rows or any(len(r) != self.cols for r in bits):
            raise InputError("matrix shape does not match rows/cols")
        if any(x not in (0, 1) for r in bits for x in r):
            raise InputError("entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)
        if self.reduced and self.repeats():
            raise NotReduced("matrix has a repeated row or column")

    @classmethod
    def of(cls, bits, reduced: bool = False) -> "ZeroOneMatrix":
        bits = [list(r) for r in bits]
        return cls(len(bits), len(bits[0]) if bits else 0, tuple(map(tuple, bits)), reduced)

    def transpose(self) -> "ZeroOneMatrix":
        return ZeroOneMatrix(self.cols, self.rows, tuple(zip(*self.bits)) if self.bits else (), self.reduced)

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.bits)

    def repeats(self) -> bool:
        cols = {self.column(j) for j in range(self.cols)}
        return len(set(self.bits)) != self.rows or len(cols) != self.cols


def _incomparable(vectors) -> bool:
    masks = [sum(1 << i for i, x in enumerate(v) if x) for v in vectors]
    for a, b in combinations(masks, 2):
        if a & b == a or a & b == b:
            return False
    return True


def _find_identity(m: ZeroOneMatrix, size: int):
    """Rows and columns spanning an identity submatrix of the given size."""
    rows = [sum(1 << j for j, x in enumerate(r) if x) for r in m.bits]
    cols = [sum(1 << i for i, r in enumerate(m.bits) if r[j]) for j in range(m.cols)]
    pick_r: list[int] = []
    pick_c: list[int] = []

    def rec(start: int, rmask: int, cmask: int) -> bool:
        if len(pick_c) == size:
            return True
        for j in range(start, m.cols):
            if cols[j] & rmask:
                continue
            for i in _to_tuple(cols[j]):
                if rows[i] & cmask:
                    continue
                pick_r.append(i)
                pick_c.append(j)
                if rec(j + 1, rmask | 1 << i, cmask | 1 << j):
                    return True
                pick_r.pop()
                pick_c.pop()
        return False

    if size == 0:
        return (), ()
    return (tuple(pick_r), tuple(pick_c)) if rec(0, 0, 0) else None


def _cone_condition(m: ZeroOneMatrix) -> bool:
    """cone(rows) == rowspace intersected with the nonnegative orthant."""
    red, piv = rref([list(r) for r in m.bits])
    r = len(red)
    if r == 0:
        return True
    basis = [integer_row(row) for row in red]
    # coordinates of each row of m in the basis: entries on pivot columns
    ys = [integer_row([Fraction(row[p]) for p in piv]) for row in m.bits if any(row)]
    ortho = [[basis[k][j] for k in range(r)] for j in range(m.cols)]
    big = dd.extreme_rays(ortho)
    normals = dd.extreme_rays(ys)
    return all(dot(z, y) >= 0 for y in big for z in normals)


@dataclass(frozen=True)
class SlackMatrixReport:
    rows: int
    cols: int
    rank: int
    ones_in_rowspace: bool
    cone_condition: bool | None
    rows_incomparable: bool
    cols_incomparable: bool
    identity: tuple | None
    size_bound: int  # (rank+1) * 2^rank
    size_bound_holds: bool
    conjecture_bound: int  # d * 2^(d+1) with d = rank - 1
    conjecture_holds: bool

    def as_dict(self) -> dict:
        out = dict(self.__dict__)
        out["identity"] = None if self.identity is None else [list(x) for x in self.identity]
        return out


def lemma_mapping(m: ZeroOneMatrix, ident) -> tuple[Graph, list, list]:
    """Graph on [rank] with columns as cliques and rows as stable sets."""
    r_idx, c_idx = ident
    d = len(c_idx)
    alphas = [tuple(m.bits[r][j] for r in r_idx) for j in range(m.cols)]
    for j, al in enumerate(alphas):
        combo = tuple(sum(al[k] * m.bits[i][c_idx[k]] for k in range(d)) for i in range(m.rows))
        if combo != m.column(j):
            raise VerificationError(f"column {j} is not the combination given by its identity rows")
    edges = set()
    for al in alphas:
        edges.update(combinations([k for k in range(d) if al[k]], 2))
    g = Graph(d, frozenset(edges))
    cliques = {tuple(k for k in range(d) if al[k]) for al in alphas}
    stables = {tuple(k for k in range(d) if m.bits[i][c_idx[k]]) for i in range(m.rows)}
    if len(cliques) != m.cols or len(stables) != m.rows:
        raise VerificationError("clique/stable set images are not injective")
    for s in stables:
        if any(g.has_edge(u, v) for u, v in combinations(s, 2)):
            raise VerificationError(f"row image {s} is not stable")
    return g, sorted(cliques), sorted(stables)


def slack_matrix_checks(m: ZeroOneMatrix, cone_limit: int = 64) -> SlackMatrixReport:
    if m.repeats():
        raise NotReduced("matrix has a repeated row or column")
    rk = rank([list(r) for r in m.bits]) if m.rows else 0
    # d = 1 is the one case where 2^d rows and 2^d columns can coexist (d + 1 = 2^d)
    if m.rows > 2**rk or m.cols > 2**rk or (m.rows == 2**rk and m.cols == 2**rk and rk >= 2):
        raise VerificationError(f"{m.rows}x{m.cols} reduced matrix of rank {rk} breaks the 2^d limits")
    ones = rk == rank([list(r) for r in m.bits] + [[1] * m.cols]) if m.rows else False
    cone = _cone_condition(m) if m.rows and max(m.rows, m.cols) <= cone_limit else None
    ident = _find_identity(m, rk)
    size = m.rows * m.cols
    lemma_bound = (rk + 1) * 2**rk
    if ident is not None:
        g, cl, st = lemma_mapping(m, ident)
        rep = tradeoff_check(g) if g.n else None
        c_all = rep.cliques_with_empty if rep else 1
        s_all = rep.stable_sets_with_empty if rep else 1
        if len(cl) > c_all or len(st) > s_all or c_all * s_all > lemma_bound or size > lemma_bound:
            raise VerificationError(f"size {size} exceeds (d+1)2^d = {lemma_bound}")
    dconj = rk - 1
    conj = dconj * 2 ** (dconj + 1) if dconj >= 0 else 0
    return SlackMatrixReport(
        rows=m.rows,
        cols=m.cols,
        rank=rk,
        ones_in_rowspace=ones,
        cone_condition=cone,
        rows_incomparable=_incomparable(m.bits),
        cols_incomparable=_incomparable(m.column(j) for j in range(m.cols)),
        identity=ident,
        size_bound=lemma_bound,
        size_bound_holds=size <= lemma_bound,
        conjecture_bound=conj,
        conjecture_holds=size <= conj,
    )


def cube_slack_matrix(d: int) -> ZeroOneMatrix:
    """Rows x_i >= 0 then x_i <= 1, columns the vertices of [0,1]^d."""
    verts = list(iproduct((0, 1), repeat=d))
    rows = [tuple(v[i] for v in verts) for i in range(d)]
    rows += [tuple(1 - v[i] for v in verts) for i in range(d)]
    return ZeroOneMatrix.of(rows)


def random_lemma_matrix(d: int, rng: random.Random | None = None) -> ZeroOneMatrix:
    """Reduced 0/1 matrix of rank d containing I_d: rows are stable sets and
    columns cliques of a random graph, entries |S & C|."""
    rng = rng or random.Random(0)
    edges = frozenset(e for e in combinations(range(d), 2) if rng.random() < 0.4)
    g = Graph(d, edges)
    cl = [m for m in _clique_masks(g.adj, True) if m.bit_count() != 1 and rng.random() < 0.5]
    st = [m for m in _clique_masks(_complement_adj(g.adj), True) if m.bit_count() != 1 and rng.random() < 0.5]
    singles = [1 << i for i in range(d)]
    cols = singles + cl
    rows = singles + st
    rng.shuffle(cols)
    rng.shuffle(rows)
    return ZeroOneMatrix.of([[(r & c).bit_count() for c in cols] for r in rows])


__all__ = [
    "BoundReport",
    "ZeroOneMatrix",
    "SlackMatrixReport",
    "forest_study",
    "count_forests",
    "forest_family_sound",
    "k2n",
    "spanning_tree_study",
    "spanning_tree_facets",
    "spanning_trees",
    "kirchhoff",
    "hypercube_graph",
    "wheel",
    "three_level_minupdown",
    "three_level_vertices",
    "fractional_stab_clique",
    "fractional_stab_h",
    "integer_points",
    "integer_hull",
    "slack_matrix_checks",
    "lemma_mapping",
    "cube_slack_matrix",
    "random_lemma_matrix",
]
