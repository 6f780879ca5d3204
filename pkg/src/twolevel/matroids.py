"""Matroids given by explicit base families, 2-sums and 2-sum trees of
uniform matroids, and the compact description of their base polytopes.

Elements are string names.  Bases are stored as bitmasks over the position
of each element in ``Matroid.elements``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadParams,
    Disconnected,
    InputError,
    NameClash,
    SharedElementInvalid,
    SizeGuardExceeded,
    VerificationError,
)
from .linalg import rank as matrix_rank
from .polytope import (
    FSummary,
    HPolytope,
    VPolytope,
    facets_of,
    product,
    reduce_modulo,
    tight_vertices,
    verify_description,
    vertices_of,
)

EXCHANGE_CHECK_LIMIT = 12
POLYTOPE_GUARD = 14
SEPARATION_GUARD = 12


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True, eq=False)
class Matroid:
    elements: tuple[str, ...]
    bases: frozenset[int]

    def __post_init__(self):
        els = tuple(str(e) for e in self.elements)
        if len(set(els)) != len(els):
            raise NameClash("duplicate element names")
        object.__setattr__(self, "elements", els)
        if not self.bases:
            raise InputError("a matroid needs at least one basis")
        sizes = {b.bit_count() for b in self.bases}
        if len(sizes) != 1:
            raise InputError("bases have different sizes")
        if any(b >> len(els) for b in self.bases):
            raise InputError("basis mentions an unknown element")
        if len(els) <= EXCHANGE_CHECK_LIMIT and not self._exchange_ok():
            raise InputError("base family violates the exchange axiom")

    @classmethod
    def from_sets(cls, elements: Sequence, bases: Iterable[Iterable]) -> "Matroid":
        els = tuple(str(e) for e in elements)
        pos = {e: i for i, e in enumerate(els)}
        masks = set()
        for b in bases:
            m = 0
            for e in b:
                if str(e) not in pos:
                    raise InputError(f"unknown element {e!r}")
                m |= 1 << pos[str(e)]
            masks.add(m)
        return cls(els, frozenset(masks))

    def _exchange_ok(self) -> bool:
        for a in self.bases:
            for b in self.bases:
                for x in _bits(a & ~b):
                    base = a & ~(1 << x)
                    if not any(base | 1 << y in self.bases for y in _bits(b & ~a)):
                        return False
        return True

    # -- basic queries ------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.elements)

    @cached_property
    def index(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def mask(self, F: Iterable[str]) -> int:
        m = 0
        for e in F:
            if e not in self.index:
                raise InputError(f"unknown element {e!r}")
            m |= 1 << self.index[e]
        return m

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in _bits(mask))

    @cached_property
    def full_rank(self) -> int:
        return next(iter(self.bases)).bit_count()

    def rank(self, F: Iterable[str] | int) -> int:
        m = F if isinstance(F, int) else self.mask(F)
        return max((b & m).bit_count() for b in self.bases)

    def base_sets(self) -> set[frozenset[str]]:
        return {frozenset(self.names(b)) for b in self.bases}

    def is_loop(self, e: str) -> bool:
        bit = 1 << self.index[e]
        return all(not b & bit for b in self.bases)

    def is_coloop(self, e: str) -> bool:
        bit = 1 << self.index[e]
        return all(b & bit for b in self.bases)

    def same_as(self, other: "Matroid") -> bool:
        return set(self.elements) == set(other.elements) and self.base_sets() == other.base_sets()

    def __eq__(self, other):
        return isinstance(other, Matroid) and self.same_as(other)

    def __hash__(self):
        return hash(frozenset(self.base_sets()))

    def reorder(self, elements: Sequence[str]) -> "Matroid":
        if set(elements) != set(self.elements) or len(elements) != self.size:
            raise InputError("reorder needs a permutation of the ground set")
        return Matroid.from_sets(elements, self.base_sets())

    def rename(self, mapping: dict[str, str]) -> "Matroid":
        els = [mapping.get(e, e) for e in self.elements]
        return Matroid(tuple(els), self.bases)

    def __repr__(self) -> str:
        return f"Matroid(|E|={self.size}, rank={self.full_rank}, bases={len(self.bases)})"


def uniform(n: int, k: int, names: Sequence | None = None) -> Matroid:
    if not (0 <= k <= n):
        raise BadParams(f"uniform matroid needs 0 <= k <= n, got n={n}, k={k}")
    names = [str(i + 1) for i in range(n)] if names is None else [str(x) for x in names]
    if len(names) != n:
        raise BadParams("need exactly n element names")
    bases = frozenset(sum(1 << i for i in c) for c in combinations(range(n), k))
    return Matroid(tuple(names), bases)


def direct_sum(m1: Matroid, m2: Matroid) -> Matroid:
    if set(m1.elements) & set(m2.elements):
        raise NameClash("direct sum needs disjoint ground sets")
    shift = m1.size
    bases = frozenset(a | b << shift for a in m1.bases for b in m2.bases)
    return Matroid(m1.elements + m2.elements, bases)


def delete(m: Matroid, e: str) -> Matroid:
    """M - e: restriction to E - e."""
    i = m.index[e]
    bit = 1 << i
    keep = [b for b in m.bases if not b & bit] or list(m.bases)  # coloop: drop it
    return _drop_position(m, i, {b & ~bit for b in keep})


def contract(m: Matroid, e: str) -> Matroid:
    """M / e."""
    i = m.index[e]
    bit = 1 << i
    keep = [b for b in m.bases if b & bit] or list(m.bases)  # loop: same as deletion
    return _drop_position(m, i, {b & ~bit for b in keep})


def _drop_position(m: Matroid, i: int, bases: set[int]) -> Matroid:
    low = (1 << i) - 1
    new = frozenset((b & low) | (b >> (i + 1)) << i for b in bases)
    return Matroid(m.elements[:i] + m.elements[i + 1 :], new)


def is_connected(m: Matroid) -> bool:
    """No proper nonempty S with r(S) + r(E - S) = r(E)."""
    n = m.size
    if n <= 1:
        return True
    full = (1 << n) - 1
    r = m.full_rank
    # S ranges over sets containing element 0 to halve the search
    for s in range(1, full, 2):
        if s == full:
            continue
        if m.rank(s) + m.rank(full & ~s) == r:
            return False
    return True


def two_sum(m1: Matroid, m2: Matroid, p: str) -> Matroid:
    p = str(p)
    common = set(m1.elements) & set(m2.elements)
    if common != {p}:
        raise SharedElementInvalid(f"ground sets must meet exactly in {p!r}, they meet in {sorted(common)}")
    for m in (m1, m2):
        if m.is_loop(p) or m.is_coloop(p):
            raise SharedElementInvalid(f"{p!r} is a loop or coloop of a summand")
    els = tuple(e for e in m1.elements if e != p) + tuple(e for e in m2.elements if e != p)
    pos = {e: i for i, e in enumerate(els)}
    i1, i2 = m1.index[p], m2.index[p]

    def lift(m: Matroid, b: int) -> int:
        out = 0
        for j in _bits(b):
            e = m.elements[j]
            if e != p:
                out |= 1 << pos[e]
        return out

    bases = set()
    for b1 in m1.bases:
        in1 = b1 >> i1 & 1
        l1 = lift(m1, b1)
        for b2 in m2.bases:
            if in1 != (b2 >> i2 & 1):
                bases.add(l1 | lift(m2, b2))
    return Matroid(els, frozenset(bases))


def two_sum_base_count(m1: Matroid, m2: Matroid, p: str) -> int:
    """|B(M1-p)||B(M2/p)| + |B(M1/p)||B(M2-p)|."""
    return len(delete(m1, p).bases) * len(contract(m2, p).bases) + len(contract(m1, p).bases) * len(
        delete(m2, p).bases
    )


# ---------------------------------------------------------------------------
# 2-sum trees


@dataclass(frozen=True)
class TreeNode:
    id: int
    n: int
    k: int
    elements: tuple[str, ...]


@dataclass(frozen=True)
class TreeEdge:
    nodes: tuple[int, int]
    shared: str


@dataclass(frozen=True)
class TwoSumTree:
    nodes: tuple[TreeNode, ...]
    edges: tuple[TreeEdge, ...] = ()

    def __post_init__(self):
        nodes = tuple(
            TreeNode(int(x.id), int(x.n), int(x.k), tuple(str(e) for e in x.elements)) for x in self.nodes
        )
        edges = tuple(TreeEdge((int(e.nodes[0]), int(e.nodes[1])), str(e.shared)) for e in self.edges)
        object.__setattr__(self, "nodes", nodes)
        object.__setattr__(self, "edges", edges)
        self._validate()

    @classmethod
    def from_json(cls, data: dict) -> "TwoSumTree":
        try:
            nodes = tuple(TreeNode(x["id"], x["n"], x["k"], tuple(x["elements"])) for x in data["nodes"])
            edges = tuple(TreeEdge(tuple(e["nodes"]), e["shared"]) for e in data.get("edges", []))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed tree: {exc}") from None
        return cls(nodes, edges)

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": x.id, "n": x.n, "k": x.k, "elements": list(x.elements)} for x in self.nodes],
            "edges": [{"nodes": list(e.nodes), "shared": e.shared} for e in self.edges],
        }

    def _validate(self):
        if not self.nodes:
            raise InputError("tree has no nodes")
        ids = [x.id for x in self.nodes]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate node ids")
        t = len(self.nodes)
        for x in self.nodes:
            if len(x.elements) != x.n or len(set(x.elements)) != x.n:
                raise InputError(f"node {x.id} must list n distinct elements")
            if not (0 <= x.k <= x.n):
                raise BadParams(f"node {x.id}: need 0 <= k <= n")
            if t > 1 and (x.n < 3 or not 0 < x.k < x.n):
                raise BadParams(f"node {x.id}: tree nodes need n >= 3 and 0 < k < n")
        if len(self.edges) != t - 1:
            raise InputError("a tree on t nodes needs t - 1 edges")
        by_id = {x.id: x for x in self.nodes}
        owners: dict[str, list[int]] = {}
        for x in self.nodes:
            for e in x.elements:
                owners.setdefault(e, []).append(x.id)
        shared = set()
        for ed in self.edges:
            a, b = ed.nodes
            if a not in by_id or b not in by_id or a == b:
                raise InputError(f"edge {ed} has bad endpoints")
            if sorted(owners.get(ed.shared, [])) != sorted([a, b]):
                raise SharedElementInvalid(f"shared element {ed.shared!r} must belong to exactly nodes {a}, {b}")
            if ed.shared in shared:
                raise SharedElementInvalid(f"element {ed.shared!r} shared by two edges")
            shared.add(ed.shared)
        for e, who in owners.items():
            if e not in shared and len(who) != 1:
                raise NameClash(f"element {e!r} appears in several nodes without an edge")
        # connectivity
        seen = {ids[0]}
        stack = [ids[0]]
        while stack:
            u = stack.pop()
            for ed in self.edges:
                if u in ed.nodes:
                    v = ed.nodes[1] if ed.nodes[0] == u else ed.nodes[0]
                    if v not in seen:
                        seen.add(v)
                        stack.append(v)
        if len(seen) != t:
            raise InputError("tree is not connected")

    @property
    def shared(self) -> set[str]:
        return {e.shared for e in self.edges}

    def ground_set(self) -> tuple[str, ...]:
        sh = self.shared
        return tuple(e for x in self.nodes for e in x.elements if e not in sh)

    def node(self, i: int) -> TreeNode:
        return next(x for x in self.nodes if x.id == i)

    def rank(self) -> int:
        return sum(x.k for x in self.nodes) - len(self.edges)

    def sides(self, edge: TreeEdge) -> tuple[list[int], list[int]]:
        """Node ids of the two components after removing ``edge``."""
        a, b = edge.nodes
        comp = {a}
        stack = [a]
        while stack:
            u = stack.pop()
            for ed in self.edges:
                if ed is edge or u not in ed.nodes:
                    continue
                v = ed.nodes[1] if ed.nodes[0] == u else ed.nodes[0]
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        other = [x.id for x in self.nodes if x.id not in comp]
        return sorted(comp), other


def single(n: int, k: int, names: Sequence | None = None) -> TwoSumTree:
    names = [str(i + 1) for i in range(n)] if names is None else [str(x) for x in names]
    return TwoSumTree((TreeNode(0, n, k, tuple(names)),))


def sample_tree() -> TwoSumTree:
    """U_{5,2} on 1..5 glued to U_{6,3} on 5..10 along element 5."""
    return TwoSumTree(
        (
            TreeNode(0, 5, 2, ("1", "2", "3", "4", "5")),
            TreeNode(1, 6, 3, ("5", "6", "7", "8", "9", "10")),
        ),
        (TreeEdge((0, 1), "5"),),
    )


def random_tree(rng: random.Random, max_nodes: int = 4, max_elements: int = 12) -> TwoSumTree:
    """A random 2-sum tree of uniform matroids with at most ``max_elements``
    elements in the composed ground set."""
    t = rng.randint(1, max_nodes)
    # every node gets n >= 3, and each tree edge removes two elements
    while t > 1 and t + 2 > max_elements:
        t -= 1
    sizes = [3] * t if t > 1 else [rng.randint(2, max_elements)]
    budget = max_elements - (sum(sizes) - 2 * (t - 1))
    while budget > 0 and rng.random() < 0.7:
        sizes[rng.randrange(t)] += 1
        budget -= 1
    names = iter(str(i) for i in range(1, 10 * max_elements))
    elems: list[list[str]] = [[] for _ in range(t)]
    edges = []
    for i in range(1, t):
        j = rng.randrange(i)
        e = next(names)
        elems[i].append(e)
        elems[j].append(e)
        edges.append(TreeEdge((j, i), e))
    nodes = []
    for i, n in enumerate(sizes):
        # a node may need more elements than its size if it has many neighbours
        n = max(n, len(elems[i]))
        while len(elems[i]) < n:
            elems[i].append(next(names))
        k = rng.randint(1, n - 1) if t > 1 else rng.randint(0, n)
        nodes.append(TreeNode(i, n, k, tuple(elems[i])))
    return TwoSumTree(tuple(nodes), tuple(edges))


def compose_tree(t: TwoSumTree, order: Sequence[int] | None = None) -> Matroid:
    """2-sum the node matroids by contracting tree edges in the given order
    (indices into ``t.edges``); the result is reordered to ``t.ground_set()``."""
    order = list(range(len(t.edges))) if order is None else list(order)
    if sorted(order) != list(range(len(t.edges))):
        raise InputError("order must be a permutation of the edge indices")
    label = {x.id: uniform(x.n, x.k, x.elements) for x in t.nodes}
    group = {x.id: x.id for x in t.nodes}

    def find(i):
        while group[i] != i:
            i = group[i]
        return i

    for idx in order:
        ed = t.edges[idx]
        ra, rb = find(ed.nodes[0]), find(ed.nodes[1])
        label[ra] = two_sum(label[ra], label[rb], ed.shared)
        group[rb] = ra
        del label[rb]
    (m,) = label.values()
    return m.reorder(t.ground_set())


def tree_base_count(t: TwoSumTree) -> int:
    """Number of bases from the 2-sum recursion, without building the matroid.

    Each subtree hanging off its parent element p reports the pair
    (|B(M - p)|, |B(M / p)|); a node combines its children through the
    generating polynomial of its k-subsets.
    """
    adj: dict[int, list[TreeEdge]] = {x.id: [] for x in t.nodes}
    for ed in t.edges:
        adj[ed.nodes[0]].append(ed)
        adj[ed.nodes[1]].append(ed)

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] += x * y
        return out

    def visit(u: int, parent_edge: TreeEdge | None):
        node = t.node(u)
        poly = [1]
        for e in node.elements:
            if parent_edge is not None and e == parent_edge.shared:
                continue
            child_edge = next((ed for ed in adj[u] if ed.shared == e), None)
            if child_edge is None:
                poly = poly_mul(poly, [1, 1])
            else:
                v = child_edge.nodes[1] if child_edge.nodes[0] == u else child_edge.nodes[0]
                without, with_ = visit(v, child_edge)
                # e in the node basis forces e out of the child basis
                poly = poly_mul(poly, [with_, without])
        k = node.k
        coef = lambda j: poly[j] if 0 <= j < len(poly) else 0  # noqa: E731
        if parent_edge is None:
            return coef(k)
        return coef(k), coef(k - 1)  # parent element out / in

    return visit(t.nodes[0].id, None)


def edge_side_elements(t: TwoSumTree, edge: TreeEdge) -> tuple[tuple[str, ...], tuple[str, ...]]:
    c1, c2 = t.sides(edge)
    sh = t.shared
    E1 = tuple(e for i in c1 for e in t.node(i).elements if e not in sh)
    E2 = tuple(e for i in c2 for e in t.node(i).elements if e not in sh)
    return E1, E2


def side_rank(t: TwoSumTree, component: Sequence[int]) -> int:
    """1 - |C| + sum of k over the nodes of C."""
    return 1 - len(component) + sum(t.node(i).k for i in component)


def base_polytope(m: Matroid) -> VPolytope:
    if m.size > POLYTOPE_GUARD:
        raise SizeGuardExceeded(f"{m.size} elements exceed the base polytope guard {POLYTOPE_GUARD}")
    n = m.size
    return VPolytope(n, tuple(tuple(b >> i & 1 for i in range(n)) for b in m.bases))


@dataclass(frozen=True)
class TreeDescription:
    h: HPolytope  # as written: box, cut inequalities, rank equation
    irredundant: HPolytope  # facet-defining rows only
    cut_ranks: tuple[tuple[tuple[str, ...], int], ...]


def tree_description(t: TwoSumTree, m: Matroid | None = None, check: bool = True) -> TreeDescription:
    """Box constraints, x(E) = rk(E), and x(F) <= rk(F) for both sides F of
    every tree edge.  Ranks come from the closed formula and are compared with
    the rank function of the composed matroid."""
    E = t.ground_set()
    n = len(E)
    pos = {e: i for i, e in enumerate(E)}
    m = m or compose_tree(t)
    rows = []
    for i in range(n):
        a = [0] * n
        a[i] = -1
        rows.append((tuple(a), 0))
        a = [0] * n
        a[i] = 1
        rows.append((tuple(a), 1))
    cuts = []
    for ed in t.edges:
        c1, c2 = t.sides(ed)
        for comp, F in zip((c1, c2), edge_side_elements(t, ed)):
            r = side_rank(t, comp)
            if check and m.rank(F) != r:
                raise VerificationError(f"rank formula gives {r} for {F}, rank oracle {m.rank(F)}")
            a = [0] * n
            for e in F:
                a[pos[e]] = 1
            rows.append((tuple(a), r))
            cuts.append((F, r))
    if m.full_rank != t.rank():
        raise VerificationError("tree rank formula disagrees with the composed matroid")
    eq = ((tuple([1] * n), t.rank()),)
    h = HPolytope(n, tuple(rows), eq)
    v = base_polytope(m)
    if check and vertices_of(h) != v:
        raise VerificationError("vertices of the tree description differ from the bases")
    if v.affine_dim == 0:
        # k = 0 or k = n on a single node: a point, every box row is an equation
        red = facets_of(v)
    else:
        red = _facet_rows(v, h)
    if check:
        verify_description(v, red)
    return TreeDescription(h, red, tuple(cuts))


def _facet_rows(v: VPolytope, h: HPolytope) -> HPolytope:
    """Keep the rows whose tight vertices span a facet; merge rows that agree
    modulo the equations."""
    d = v.affine_dim
    keep = {}
    for row in h.inequalities:
        tight = sorted(tight_vertices(v, row))
        if not tight:
            continue
        base = v.vertices[tight[0]]
        diffs = [[a - b for a, b in zip(v.vertices[i], base)] for i in tight[1:]]
        if (matrix_rank(diffs) if diffs else 0) == d - 1:
            keep.setdefault(reduce_modulo(row, h.equations, v.dim), row)
    return HPolytope(v.dim, tuple(keep.values()), h.equations, irredundant=True)


# ---------------------------------------------------------------------------
# separations and the conjecture check


def two_separation(m: Matroid) -> tuple[tuple[str, ...], tuple[str, ...]] | None:
    """A partition with both sides of size >= 2 and r(E1) + r(E2) = r(E) + 1.

    The side containing the first element is returned first; smaller sides
    are tried first.
    """
    if m.size > SEPARATION_GUARD:
        raise SizeGuardExceeded(f"{m.size} elements exceed the separation guard {SEPARATION_GUARD}")
    if not is_connected(m):
        raise Disconnected("2-separations are only searched in connected matroids")
    n = m.size
    full = (1 << n) - 1
    r = m.full_rank
    for size in range(2, n - 1):
        for combo in combinations(range(1, n), size - 1):
            s = 1 | sum(1 << i for i in combo)
            if m.rank(s) + m.rank(full & ~s) == r + 1:
                return m.names(s), m.names(full & ~s)
    return None


def conjecture_check_matroid(trees: TwoSumTree | Sequence[TwoSumTree], geometric: bool | None = None) -> FSummary:
    """Summary for the direct sum of the matroids encoded by ``trees``.

    f0 comes from the base-count recursion and fd1 from the irredundant tree
    descriptions.  With ``geometric`` (default when |E| <= 14) both are
    checked against facet enumeration of the actual base polytope.
    """
    if isinstance(trees, TwoSumTree):
        trees = [trees]
    f0, fd1, d = 1, 0, 0
    polys = []
    for t in trees:
        m = compose_tree(t)
        count = tree_base_count(t)
        if count != len(m.bases):
            raise VerificationError(f"base count recursion {count} vs enumeration {len(m.bases)}")
        desc = tree_description(t, m)
        f0 *= count
        fd1 += len(desc.irredundant.inequalities)
        v = base_polytope(m)
        d += v.affine_dim
        polys.append(v)
    total = sum(p.dim for p in polys)
    s = FSummary.of(d, f0, fd1)
    if geometric is None:
        geometric = total <= POLYTOPE_GUARD
    if geometric:
        whole = polys[0]
        for p in polys[1:]:
            whole = product(whole, p)
        h = facets_of(whole)
        if (whole.affine_dim, len(whole), len(h.inequalities)) != (s.d, s.f0, s.fd1):
            raise VerificationError(f"matroid summary {s} disagrees with facet enumeration")
    if not s.satisfies:
        raise VerificationError(f"conjecture bound violated: {s}")
    return s


def two_sum_projection_check(m1: Matroid, m2: Matroid, p: str) -> bool:
    """B(M1 (+)_2 M2) equals the projection of B(M1) x B(M2) cut by
    x_{p1} + x_{p2} = 1, computed from the facet systems of both factors."""
    if m1.size + m2.size > 10:
        raise SizeGuardExceeded("projection check limited to |E1| + |E2| <= 10")
    h1, h2 = facets_of(base_polytope(m1)), facets_of(base_polytope(m2))
    n1, n2 = m1.size, m2.size
    rows = [(tuple(a) + (0,) * n2, b) for a, b in h1.inequalities]
    rows += [((0,) * n1 + tuple(a), b) for a, b in h2.inequalities]
    eqs = [(tuple(c) + (0,) * n2, d) for c, d in h1.equations]
    eqs += [((0,) * n1 + tuple(c), d) for c, d in h2.equations]
    link = [0] * (n1 + n2)
    link[m1.index[p]] = 1
    link[n1 + m2.index[p]] = 1
    eqs.append((tuple(link), 1))
    q = vertices_of(HPolytope(n1 + n2, tuple(rows), tuple(eqs)))
    m = two_sum(m1, m2, p)
    keep = [i for i, e in enumerate(m1.elements) if e != p] + [n1 + i for i, e in enumerate(m2.elements) if e != p]
    projected = VPolytope(m.size, tuple(tuple(x[i] for i in keep) for x in q.vertices))
    return projected == base_polytope(m)


__all__ = [
    "Matroid",
    "uniform",
    "direct_sum",
    "delete",
    "contract",
    "is_connected",
    "two_sum",
    "two_sum_base_count",
    "TreeNode",
    "TreeEdge",
    "TwoSumTree",
    "single",
    "sample_tree",
    "random_tree",
    "compose_tree",
    "tree_base_count",
    "side_rank",
    "edge_side_elements",
    "base_polytope",
    "TreeDescription",
    "tree_description",
    "two_separation",
    "conjecture_check_matroid",
    "two_sum_projection_check",
]
