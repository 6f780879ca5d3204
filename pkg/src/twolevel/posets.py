"""Finite posets and the order, chain and double order polytopes."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import InputError, SizeGuardExceeded, VerificationError
from .graphs import Graph, _clique_masks, _complement_adj, _to_tuple
from .polytope import FSummary, HPolytope, VPolytope, facets_of, verify_description

POSET_GUARD = 20


@dataclass(frozen=True)
class Poset:
    """Partial order on 0..n-1; ``relations`` holds the strict pairs i < j of
    the transitive closure (reflexive pairs are implicit)."""

    n: int
    relations: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self):
        if self.n < 0:
            raise InputError("negative poset size")
        below = [0] * self.n  # below[j]: bitmask of i with i < j
        for i, j in self.relations:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InputError(f"relation {(i, j)!r} out of range")
            if i != j:
                below[j] |= 1 << i
        # Warshall closure on bitmasks
        for k in range(self.n):
            bk = 1 << k
            for j in range(self.n):
                if below[j] & bk:
                    below[j] |= below[k]
        for j in range(self.n):
            if below[j] >> j & 1:
                raise InputError("relation contains a cycle")
        pairs = frozenset((i, j) for j in range(self.n) for i in _to_tuple(below[j]))
        object.__setattr__(self, "relations", pairs)
        object.__setattr__(self, "_below", tuple(below))

    @classmethod
    def from_relations(cls, n: int, relations: Iterable[Iterable[int]]) -> "Poset":
        return cls(n, frozenset(tuple(r) for r in relations))

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.relations

    @cached_property
    def above(self) -> tuple[int, ...]:
        up = [0] * self.n
        for i, j in self.relations:
            up[i] |= 1 << j
        return tuple(up)

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Pairs (i, j) with i < j and nothing strictly between."""
        out = []
        for i, j in self.relations:
            if not (self.above[i] & self._below[j]):
                out.append((i, j))
        return tuple(sorted(out))

    def minimal(self) -> list[int]:
        return [j for j in range(self.n) if not self._below[j]]

    def maximal(self) -> list[int]:
        return [i for i in range(self.n) if not self.above[i]]


def chain(n: int) -> Poset:
    return Poset(n, frozenset((i, i + 1) for i in range(n - 1)))


def antichain(n: int) -> Poset:
    return Poset(n)


def random_poset(n: int, prob: float = 0.3, rng: random.Random | None = None) -> Poset:
    """Random DAG on a shuffled labelling, closed transitively."""
    rng = rng or random.Random(0)
    perm = list(range(n))
    rng.shuffle(perm)
    rel = [(perm[i], perm[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < prob]
    return Poset(n, frozenset(rel))


def _guard(p: Poset):
    if p.n > POSET_GUARD:
        raise SizeGuardExceeded(f"poset has {p.n} elements, guard is {POSET_GUARD}")


def _cmp_adj(p: Poset) -> tuple[int, ...]:
    return tuple(p.above[i] | p._below[i] for i in range(p.n))


def _order(masks: Iterable[int]) -> list[tuple[int, ...]]:
    return sorted((_to_tuple(m) for m in masks), key=lambda t: (len(t), t))


def comparability_graph(p: Poset) -> Graph:
    return Graph(p.n, frozenset((min(i, j), max(i, j)) for i, j in p.relations))


def antichains(p: Poset) -> list[tuple[int, ...]]:
    """All antichains including the empty one."""
    _guard(p)
    return _order(_clique_masks(_complement_adj(_cmp_adj(p)), True))


def chains(p: Poset, include_empty: bool = True) -> list[tuple[int, ...]]:
    _guard(p)
    return _order(_clique_masks(_cmp_adj(p), include_empty))


def maximal_chains(p: Poset) -> list[tuple[int, ...]]:
    _guard(p)
    adj = _cmp_adj(p)
    full = (1 << p.n) - 1
    out = []
    for m in _clique_masks(adj, False):
        common = full
        for v in _to_tuple(m):
            common &= adj[v]
        if not common & ~m:
            out.append(m)
    return _order(out)


def closed_sets(p: Poset) -> list[tuple[int, ...]]:
    """Down-sets: j in I and i <= j imply i in I.

    Enumerated directly by deciding elements in a linear extension order, so
    the count is an independent check on |antichains|.
    """
    _guard(p)
    order = sorted(range(p.n), key=lambda j: p._below[j].bit_count())
    out: list[int] = []

    def rec(k: int, mask: int):
        if k == len(order):
            out.append(mask)
            return
        j = order[k]
        rec(k + 1, mask)
        if p._below[j] & ~mask == 0:
            rec(k + 1, mask | 1 << j)

    rec(0, 0)
    return _order(out)


def _vec(n: int, members: Iterable[int], scale=1) -> tuple:
    x = [0] * n
    for i in members:
        x[i] = scale
    return tuple(x)


def _unit(n: int, i: int, c: int) -> list[int]:
    a = [0] * n
    a[i] = c
    return a


def order_polytope(p: Poset) -> tuple[VPolytope, HPolytope]:
    """Closed-set vertices with the cover/min/max description.

    The combinatorial description is compared against facet enumeration of
    the vertex list; a mismatch raises VerificationError.
    """
    n = p.n
    v = VPolytope(n, tuple(_vec(n, c) for c in closed_sets(p)))
    rows = []
    for i, j in p.covers:
        a = [0] * n
        a[j], a[i] = 1, -1  # x_j <= x_i
        rows.append((a, 0))
    for i in p.minimal():
        rows.append((_unit(n, i, 1), 1))
    for j in p.maximal():
        rows.append((_unit(n, j, -1), 0))
    h = HPolytope(n, tuple(rows), irredundant=True)
    verify_description(v, h)
    return v, h


def chain_polytope(p: Poset) -> tuple[VPolytope, HPolytope]:
    n = p.n
    v = VPolytope(n, tuple(_vec(n, a) for a in antichains(p)))
    rows = [(_unit(n, i, -1), 0) for i in range(n)]
    for c in maximal_chains(p):
        rows.append((list(_vec(n, c)), 1))
    h = HPolytope(n, tuple(rows), irredundant=True)
    verify_description(v, h)
    return v, h


@dataclass(frozen=True)
class HibiReport:
    order_facets: int
    chain_facets: int
    holds: bool

    def as_dict(self) -> dict:
        return dict(self.__dict__)


def hibi_check(p: Poset) -> HibiReport:
    """Facet count of the order polytope never exceeds the chain polytope's."""
    fo = len(facets_of(order_polytope(p)[0]).inequalities)
    fc = len(facets_of(chain_polytope(p)[0]).inequalities)
    rep = HibiReport(fo, fc, fo <= fc)
    if not rep.holds:
        raise VerificationError(f"order polytope has more facets: {rep}")
    return rep


def double_order_polytope(p: Poset) -> tuple[VPolytope, FSummary]:
    """conv of (2x, 1) and (-2x, -1) over closed-set vectors x.

    Vertex and facet counts must equal 2|A| and 2|C|, counting the empty
    antichain and the empty chain.
    """
    n = p.n
    pts = [_vec(n, c, 2) + (1,) for c in closed_sets(p)]
    pts += [_vec(n, c, -2) + (-1,) for c in closed_sets(p)]
    v = VPolytope(n + 1, tuple(pts))
    f = facets_of(v)
    s = FSummary.of(v.affine_dim, len(v), len(f.inequalities))
    na, nc = len(antichains(p)), len(chains(p, True))
    if s.f0 != 2 * na or s.fd1 != 2 * nc:
        raise VerificationError(f"double order counts {s.f0},{s.fd1} vs 2|A|={2 * na}, 2|C|={2 * nc}")
    return v, s


__all__ = [
    "Poset",
    "chain",
    "antichain",
    "random_poset",
    "comparability_graph",
    "antichains",
    "chains",
    "maximal_chains",
    "closed_sets",
    "order_polytope",
    "chain_polytope",
    "hibi_check",
    "HibiReport",
    "double_order_polytope",
]
