"""Stable marriage instances, the lattice of stable matchings and rotations.

A matching is stored as a tuple ``pairing`` with ``pairing[m] = w``.  Edge
``(m, w)`` has index ``m * n + w`` in incidence vectors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations

from .errors import InputError, NotStable, SizeGuardExceeded, VerificationError
from .linalg import rank
from .polytope import FSummary, HPolytope, VPolytope, facets_of, vertices_of
from .posets import Poset, closed_sets

MATCHING_GUARD = 7


@dataclass(frozen=True)
class SMInstance:
    n: int
    men: tuple[tuple[int, ...], ...]  # men[m]: women, most preferred first
    women: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        men = tuple(tuple(r) for r in self.men)
        women = tuple(tuple(r) for r in self.women)
        if len(men) != self.n or len(women) != self.n:
            raise InputError("need one preference list per person")
        for lst in men + women:
            if sorted(lst) != list(range(self.n)):
                raise InputError(f"preference list {lst} is not a permutation of 0..{self.n - 1}")
        object.__setattr__(self, "men", men)
        object.__setattr__(self, "women", women)

    @cached_property
    def man_rank(self) -> tuple[tuple[int, ...], ...]:
        """man_rank[m][w]: position of w in m's list (0 = best)."""
        out = []
        for lst in self.men:
            r = [0] * self.n
            for pos, w in enumerate(lst):
                r[w] = pos
            out.append(tuple(r))
        return tuple(out)

    @cached_property
    def woman_rank(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for lst in self.women:
            r = [0] * self.n
            for pos, m in enumerate(lst):
                r[m] = pos
            out.append(tuple(r))
        return tuple(out)

    def edge(self, m: int, w: int) -> int:
        return m * self.n + w


def random_instance(n: int, rng: random.Random | None = None) -> SMInstance:
    rng = rng or random.Random(0)

    def perm():
        p = list(range(n))
        rng.shuffle(p)
        return tuple(p)

    return SMInstance(n, tuple(perm() for _ in range(n)), tuple(perm() for _ in range(n)))


def latin_instance(n: int = 3) -> SMInstance:
    """m_i ranks w_i, w_{i+1}, ...; w_j ranks m_{j+1}, m_{j+2}, ..., m_j."""
    men = tuple(tuple((i + k) % n for k in range(n)) for i in range(n))
    women = tuple(tuple((j + 1 + k) % n for k in range(n)) for j in range(n))
    return SMInstance(n, men, women)


Matching = tuple[int, ...]


def edge_set(inst: SMInstance, mu: Matching) -> frozenset[int]:
    return frozenset(inst.edge(m, w) for m, w in enumerate(mu))


def incidence(inst: SMInstance, mu: Matching) -> tuple[int, ...]:
    x = [0] * (inst.n * inst.n)
    for m, w in enumerate(mu):
        x[inst.edge(m, w)] = 1
    return tuple(x)


def is_stable(inst: SMInstance, mu: Matching) -> bool:
    if sorted(mu) != list(range(inst.n)):
        return False
    husband = [0] * inst.n
    for m, w in enumerate(mu):
        husband[w] = m
    mr, wr = inst.man_rank, inst.woman_rank
    for m in range(inst.n):
        for w in range(inst.n):
            if mu[m] == w:
                continue
            if mr[m][w] < mr[m][mu[m]] and wr[w][m] < wr[w][husband[w]]:
                return False  # blocking pair
    return True


def enumerate_stable(inst: SMInstance) -> list[Matching]:
    """All stable matchings, by brute force over the n! perfect matchings."""
    if inst.n > MATCHING_GUARD:
        raise SizeGuardExceeded(f"n = {inst.n} exceeds brute-force guard {MATCHING_GUARD}")
    out = [p for p in permutations(range(inst.n)) if is_stable(inst, p)]
    if not out:
        raise VerificationError("instance has no stable matching")
    return out


def men_proposing(inst: SMInstance) -> Matching:
    """Deferred acceptance with men proposing."""
    n = inst.n
    nxt = [0] * n
    husband: list[int | None] = [None] * n
    free = list(range(n - 1, -1, -1))
    wr = inst.woman_rank
    while free:
        m = free.pop()
        w = inst.men[m][nxt[m]]
        nxt[m] += 1
        h = husband[w]
        if h is None:
            husband[w] = m
        elif wr[w][m] < wr[w][h]:
            husband[w] = m
            free.append(h)
        else:
            free.append(m)
    mu = [0] * n
    for w, m in enumerate(husband):
        mu[m] = w
    return tuple(mu)


# ---------------------------------------------------------------------------
# lattice


def women_leq(inst: SMInstance, a: Matching, b: Matching) -> bool:
    """a <= b: every woman is at least as happy in b as in a."""
    wr = inst.woman_rank
    ha = [0] * inst.n
    hb = [0] * inst.n
    for m, w in enumerate(a):
        ha[w] = m
    for m, w in enumerate(b):
        hb[w] = m
    return all(wr[w][hb[w]] <= wr[w][ha[w]] for w in range(inst.n))


@dataclass(frozen=True)
class Lattice:
    matchings: tuple[Matching, ...]
    arcs: tuple[tuple[int, int], ...]  # covering pairs (i, j), matchings[i] < matchings[j]
    mu0: int
    muz: int


def lattice(inst: SMInstance) -> Lattice:
    ms = tuple(sorted(enumerate_stable(inst)))
    k = len(ms)
    leq = [[women_leq(inst, ms[i], ms[j]) for j in range(k)] for i in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j and leq[i][j] and leq[j][i]:
                raise VerificationError("women's order is not antisymmetric")
    arcs = []
    for i in range(k):
        for j in range(k):
            if i == j or not leq[i][j]:
                continue
            if not any(t not in (i, j) and leq[i][t] and leq[t][j] for t in range(k)):
                arcs.append((i, j))
    mins = [i for i in range(k) if all(leq[i][j] for j in range(k))]
    maxs = [j for j in range(k) if all(leq[i][j] for i in range(k))]
    if len(mins) != 1 or len(maxs) != 1:
        raise VerificationError("stable matchings do not form a lattice with 0 and 1")
    return Lattice(ms, tuple(arcs), mins[0], maxs[0])


# ---------------------------------------------------------------------------
# rotations


@dataclass(frozen=True)
class Rotation:
    tail: frozenset[int]  # edges leaving the matching
    head: frozenset[int]  # edges entering

    def __post_init__(self):
        if not self.tail or not self.head or self.tail & self.head or len(self.tail) != len(self.head):
            raise VerificationError("malformed rotation")

    def key(self):
        return (tuple(sorted(self.tail)), tuple(sorted(self.head)))


@dataclass(frozen=True)
class RotationPoset:
    rotations: tuple[Rotation, ...]
    precedence: Poset
    mu0: Matching
    muz: Matching
    lattice: Lattice
    pi: dict  # matching -> frozenset of rotation indices
    mu0_is_man_optimal: bool


def rotation_poset(inst: SMInstance) -> RotationPoset:
    lat = lattice(inst)
    ms = lat.matchings
    gen = {}
    for i, j in lat.arcs:
        a, b = edge_set(inst, ms[i]), edge_set(inst, ms[j])
        gen[(i, j)] = Rotation(a - b, b - a)
    rots = sorted(set(gen.values()), key=Rotation.key)
    index = {r: k for k, r in enumerate(rots)}

    # Forward DP over the Hasse diagram.  For every node u we keep the set of
    # rotations on a mu0-u path (must not depend on the path) and the pairs
    # (r, s) such that r comes before s on *every* mu0-u path.
    preds: dict[int, list[int]] = {i: [] for i in range(len(ms))}
    for i, j in lat.arcs:
        preds[j].append(i)
    order = sorted(range(len(ms)), key=lambda i: _height(i, preds, {}))
    pi: dict[int, frozenset[int]] = {}
    before: dict[int, frozenset[tuple[int, int]]] = {}
    for u in order:
        if u == lat.mu0:
            pi[u], before[u] = frozenset(), frozenset()
            continue
        if not preds[u]:
            raise VerificationError("stable matching unreachable from the minimum")
        cand_pi, cand_before = None, None
        for w in preds[u]:
            r = index[gen[(w, u)]]
            if r in pi[w]:
                raise VerificationError("rotation generated twice on one path")
            p = pi[w] | {r}
            b = before[w] | {(x, r) for x in pi[w]}
            if cand_pi is None:
                cand_pi, cand_before = p, b
            else:
                if p != cand_pi:
                    raise VerificationError("rotation set depends on the path")
                cand_before &= b
        pi[u], before[u] = cand_pi, cand_before

    if pi[lat.muz] != frozenset(range(len(rots))):
        raise VerificationError("a maximal path misses some rotation")
    prec = Poset(len(rots), before[lat.muz])
    if prec.relations != before[lat.muz]:
        raise VerificationError("path precedence is not transitively closed")

    tails, heads = set(), set()
    for r in rots:
        if r.tail & tails or r.head & heads:
            raise VerificationError("an edge lies in two tails or two heads")
        tails |= r.tail
        heads |= r.head

    for u, p in pi.items():
        if not _is_closed(prec, p):
            raise VerificationError(f"rotation set of matching {ms[u]} is not closed")

    return RotationPoset(
        rotations=tuple(rots),
        precedence=prec,
        mu0=ms[lat.mu0],
        muz=ms[lat.muz],
        lattice=lat,
        pi={ms[u]: p for u, p in pi.items()},
        mu0_is_man_optimal=men_proposing(inst) == ms[lat.mu0],
    )


def _height(i: int, preds: dict, memo: dict) -> int:
    if i not in memo:
        memo[i] = 1 + max((_height(p, preds, memo) for p in preds[i]), default=-1)
    return memo[i]


def _is_closed(p: Poset, s: frozenset[int]) -> bool:
    return all(i in s for i, j in p.relations if j in s)


def pi_of(inst: SMInstance, mu: Matching, rp: RotationPoset | None = None) -> frozenset[int]:
    """Indices (into ``rp.rotations``) of the rotations on any mu0-mu path."""
    mu = tuple(mu)
    if not is_stable(inst, mu):
        raise NotStable(f"{mu} is not a stable matching")
    rp = rp or rotation_poset(inst)
    return rp.pi[mu]


def women_happiness_monotone(inst: SMInstance, lat: Lattice) -> bool:
    """Each woman's partner rank never gets worse along a Hasse arc."""
    return all(women_leq(inst, lat.matchings[i], lat.matchings[j]) for i, j in lat.arcs)


# ---------------------------------------------------------------------------
# the affine map from the order polytope


def rotation_matrix(inst: SMInstance, rp: RotationPoset) -> list[list[int]]:
    """Columns chi(head) - chi(tail), returned as a list of columns."""
    cols = []
    for r in rp.rotations:
        c = [0] * (inst.n * inst.n)
        for e in r.head:
            c[e] += 1
        for e in r.tail:
            c[e] -= 1
        cols.append(c)
    return cols


@dataclass(frozen=True)
class EquivalenceReport:
    rotations: int
    stable_matchings: int
    closed_sets: int
    rank: int
    independent: bool
    formula_holds: bool
    image_matches: bool
    bijection: bool
    mu0_is_man_optimal: bool

    @property
    def ok(self) -> bool:
        return self.independent and self.formula_holds and self.image_matches and self.bijection

    def as_dict(self) -> dict:
        d = dict(self.__dict__)
        d["ok"] = self.ok
        return d


def verify_order_equivalence(inst: SMInstance) -> EquivalenceReport:
    rp = rotation_poset(inst)
    cols = rotation_matrix(inst, rp)
    k = len(cols)
    r = rank(cols) if cols else 0
    base = incidence(inst, rp.mu0)

    def image(members) -> tuple[int, ...]:
        x = list(base)
        for j in members:
            for e, c in enumerate(cols[j]):
                x[e] += c
        return tuple(x)

    formula = all(image(p) == incidence(inst, mu) for mu, p in rp.pi.items())
    cs = closed_sets(rp.precedence)
    stable_vecs = {incidence(inst, mu) for mu in rp.lattice.matchings}
    img = {image(c) for c in cs}
    rep = EquivalenceReport(
        rotations=k,
        stable_matchings=len(rp.lattice.matchings),
        closed_sets=len(cs),
        rank=r,
        independent=r == k,
        formula_holds=formula,
        image_matches=img == stable_vecs,
        bijection={frozenset(c) for c in cs} == set(rp.pi.values()) and len(cs) == len(rp.pi),
        mu0_is_man_optimal=rp.mu0_is_man_optimal,
    )
    if not rep.ok:
        raise VerificationError(f"order-polytope equivalence failed: {rep}")
    return rep


def smp_description(inst: SMInstance) -> HPolytope:
    """Nonnegativity, degree constraints and the stability inequalities."""
    n = inst.n
    E = n * n
    rows = []
    for e in range(E):
        a = [0] * E
        a[e] = -1
        rows.append((a, 0))
    for v in range(n):
        a = [0] * E  # man v
        for w in range(n):
            a[inst.edge(v, w)] = 1
        rows.append((a, 1))
        a = [0] * E  # woman v
        for m in range(n):
            a[inst.edge(m, v)] = 1
        rows.append((a, 1))
    mr, wr = inst.man_rank, inst.woman_rank
    for m in range(n):
        for w in range(n):
            a = [0] * E
            a[inst.edge(m, w)] = -1
            for m2 in range(n):
                if wr[w][m2] < wr[w][m]:
                    a[inst.edge(m2, w)] = -1
            for w2 in range(n):
                if mr[m][w2] < mr[m][w]:
                    a[inst.edge(m, w2)] = -1
            rows.append((a, -1))  # sum >= 1
    return HPolytope(E, tuple(rows))


def smp_polytope(inst: SMInstance, geometric: bool | None = None) -> tuple[VPolytope, HPolytope, FSummary]:
    """Stable matching polytope with its order-polytope summary.

    With ``geometric`` (default for n <= 5) the vertices of the linear
    description are enumerated and compared with the brute-force list.
    """
    h = smp_description(inst)
    rp = rotation_poset(inst)
    v = VPolytope(inst.n * inst.n, tuple(incidence(inst, mu) for mu in rp.lattice.matchings))
    if geometric is None:
        geometric = inst.n <= 5
    if geometric and vertices_of(h) != v:
        raise VerificationError("vertices of the linear description differ from the stable matchings")
    prec = rp.precedence
    k = prec.n
    fd1 = len(prec.covers) + len(prec.minimal()) + len(prec.maximal()) if k else 0
    s = FSummary.of(k, len(closed_sets(prec)), fd1)
    direct = facets_of(v)
    if v.affine_dim != k or len(v) != s.f0 or len(direct.inequalities) != fd1:
        raise VerificationError(f"order-polytope summary {s} disagrees with the stable matching polytope")
    return v, h, s


__all__ = [
    "SMInstance",
    "Matching",
    "Rotation",
    "RotationPoset",
    "Lattice",
    "EquivalenceReport",
    "random_instance",
    "latin_instance",
    "is_stable",
    "enumerate_stable",
    "men_proposing",
    "lattice",
    "rotation_poset",
    "pi_of",
    "verify_order_equivalence",
    "smp_description",
    "smp_polytope",
    "incidence",
    "women_happiness_monotone",
]
