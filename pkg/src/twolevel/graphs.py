"""Simple graphs on vertices 0..n-1, clique/stable set enumeration and the
clique/stable-set trade-off.

Vertex sets are handled internally as int bitmasks; public functions return
sorted tuples so output is stable across runs.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import InputError, SizeGuardExceeded, VerificationError

CLIQUE_GUARD = 24
PERFECT_GUARD = 14


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative vertex count")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e!r} out of range")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> "Graph":
        return cls(n, frozenset(tuple(e) for e in edges))

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def complement(self) -> "Graph":
        return Graph(self.n, frozenset(e for e in combinations(range(self.n), 2) if e not in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        return Graph(len(vs), frozenset((index[u], index[v]) for u, v in self.edges if u in index and v in index))

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def complete(n: int) -> Graph:
    return Graph(n, frozenset(combinations(range(n), 2)))


def empty(n: int) -> Graph:
    return Graph(n)


def path(n: int) -> Graph:
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    return Graph(n, frozenset((i, (i + 1) % n) for i in range(n)))


def all_graphs(n: int) -> Iterator[Graph]:
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph(n, frozenset(p for i, p in enumerate(pairs) if mask >> i & 1))


def nonisomorphic_graphs(max_n: int) -> list[Graph]:
    """One representative per isomorphism class, n <= 7 (networkx atlas)."""
    from networkx.generators.atlas import graph_atlas_g

    if max_n > 7:
        raise SizeGuardExceeded("graph atlas only covers up to 7 vertices")
    out = []
    for g in graph_atlas_g():
        n = g.number_of_nodes()
        if 1 <= n <= max_n:
            out.append(Graph(n, frozenset(tuple(e) for e in g.edges())))
    return out


# ---------------------------------------------------------------------------
# cliques and stable sets


def _clique_masks(adj: tuple[int, ...], include_empty: bool) -> list[int]:
    n = len(adj)
    out: list[int] = [0] if include_empty else []

    def extend(mask: int, cand: int):
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            new = mask | low
            out.append(new)
            # only larger vertices keep the order canonical
            extend(new, cand & adj[v])

    extend(0, (1 << n) - 1)
    return out


def _complement_adj(adj: tuple[int, ...]) -> tuple[int, ...]:
    n = len(adj)
    full = (1 << n) - 1
    return tuple(full & ~adj[v] & ~(1 << v) for v in range(n))


def _to_tuple(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def _guard(g: Graph, limit: int):
    if g.n > limit:
        raise SizeGuardExceeded(f"graph has {g.n} vertices, guard is {limit}")


def enumerate_cliques(g: Graph, include_empty: bool = False) -> list[tuple[int, ...]]:
    _guard(g, CLIQUE_GUARD)
    return [_to_tuple(m) for m in _clique_masks(g.adj, include_empty)]


def enumerate_stable_sets(g: Graph, include_empty: bool = False) -> list[tuple[int, ...]]:
    _guard(g, CLIQUE_GUARD)
    return [_to_tuple(m) for m in _clique_masks(_complement_adj(g.adj), include_empty)]


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    masks = _clique_masks(g.adj, False)
    out = []
    for m in masks:
        # maximal iff no outside vertex is adjacent to all of m
        common = (1 << g.n) - 1
        for v in _to_tuple(m):
            common &= g.adj[v]
        if not common:
            out.append(_to_tuple(m))
    return out


@dataclass(frozen=True)
class TradeoffReport:
    n: int
    cliques: int
    stable_sets: int
    bound: int
    holds: bool
    equality: bool
    cliques_with_empty: int
    stable_sets_with_empty: int
    bound_with_empty: int
    holds_with_empty: bool
    equality_with_empty: bool
    trivial: bool  # g or its complement is complete

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def tradeoff_check(g: Graph) -> TradeoffReport:
    """Compare |C||S| with n(2^n - 1) and |C'||S'| with (n+1)2^n."""
    if g.n < 1:
        raise InputError("trade-off needs at least one vertex")
    _guard(g, CLIQUE_GUARD)
    c = len(_clique_masks(g.adj, False))
    s = len(_clique_masks(_complement_adj(g.adj), False))
    n = g.n
    b1 = n * (2**n - 1)
    b2 = (n + 1) * 2**n
    rep = TradeoffReport(
        n=n,
        cliques=c,
        stable_sets=s,
        bound=b1,
        holds=c * s <= b1,
        equality=c * s == b1,
        cliques_with_empty=c + 1,
        stable_sets_with_empty=s + 1,
        bound_with_empty=b2,
        holds_with_empty=(c + 1) * (s + 1) <= b2,
        equality_with_empty=(c + 1) * (s + 1) == b2,
        trivial=len(g.edges) in (0, n * (n - 1) // 2),
    )
    if not (rep.holds and rep.holds_with_empty):
        raise VerificationError(f"trade-off bound violated: {rep}")
    if rep.equality != rep.trivial or rep.equality_with_empty != rep.trivial:
        raise VerificationError(f"equality case mismatch: {rep}")
    return rep


def union_preimage_counts(g: Graph) -> dict[int, int]:
    """For each vertex set W (bitmask), the number of pairs (C, S) of nonempty
    clique and nonempty stable set with C | S = W."""
    cl = _clique_masks(g.adj, False)
    st = _clique_masks(_complement_adj(g.adj), False)
    return dict(Counter(c | s for c in cl for s in st))


def preimage_violations(g: Graph) -> list[tuple[int, int]]:
    """Sets W with |W| >= 2 whose pre-image exceeds 2|W|, as (mask, count)."""
    return [
        (w, k) for w, k in union_preimage_counts(g).items() if w.bit_count() >= 2 and k > 2 * w.bit_count()
    ]


# ---------------------------------------------------------------------------
# perfectness


def _has_odd_hole(adj: tuple[int, ...]) -> bool:
    n = len(adj)
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)  # vertices > s

        def grow(path: list[int], blocked: int) -> bool:
            last = path[-1]
            cand = adj[last] & allowed & ~blocked
            while cand:
                low = cand & -cand
                u = low.bit_length() - 1
                cand ^= low
                # u must not see any internal path vertex except last
                if any(adj[u] >> p & 1 for p in path[1:-1]):
                    continue
                if adj[u] >> s & 1:
                    if len(path) >= 4 and len(path) % 2 == 0:
                        return True
                    continue
                if grow(path + [u], blocked | low):
                    return True
            return False

        for v1 in _to_tuple(adj[s] & allowed):
            if grow([s, v1], (1 << s) | (1 << v1)):
                return True
    return False


def has_odd_hole(g: Graph) -> bool:
    """Whether g has an induced odd cycle of length at least 5."""
    return _has_odd_hole(g.adj)


def is_perfect(g: Graph) -> bool:
    """Strong perfect graph theorem: no odd hole in g or its complement."""
    _guard(g, PERFECT_GUARD)
    return not _has_odd_hole(g.adj) and not _has_odd_hole(_complement_adj(g.adj))


def induced_cycles(g: Graph) -> list[tuple[int, ...]]:
    """All induced cycles of length >= 4, each listed once from its smallest vertex."""
    adj = g.adj
    n = g.n
    found = set()
    for s in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (s + 1)) - 1)

        def grow(path):
            last = path[-1]
            cand = adj[last] & allowed
            for u in _to_tuple(cand):
                if u in path:
                    continue
                if any(adj[u] >> p & 1 for p in path[1:-1]):
                    continue
                if adj[u] >> s & 1:
                    if len(path) >= 3:
                        cyc = path + [u]
                        # canonical direction: second vertex smaller than last
                        if cyc[1] > cyc[-1]:
                            cyc = [cyc[0]] + cyc[1:][::-1]
                        found.add(tuple(cyc))
                    continue
                grow(path + [u])

        for v1 in _to_tuple(adj[s] & allowed):
            grow([s, v1])
    return sorted(found, key=lambda c: (len(c), c))


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _to_tuple(frontier):
            nxt |= g.adj[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1
