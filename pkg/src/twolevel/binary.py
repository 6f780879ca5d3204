"""Binary matroids over GF(2): cycle spaces, circuits and cocircuits, cycle
polytopes and cut polytopes.

A matrix is a list of rows, each row an int bitmask over the columns (bit j
is column j).  Matroids are kept with their matrix in reduced row echelon
form, so the number of rows is the rank.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError, SizeGuardExceeded, VerificationError
from .graphs import Graph, induced_cycles
from .linalg import rank as matrix_rank
from .polytope import (
    FSummary,
    HPolytope,
    VPolytope,
    facets_of,
    is_two_level,
    reduce_modulo,
    tight_vertices,
    verify_description,
    vertices_of,
)

CYCLE_GUARD = 22
CIRCUIT_GUARD = 16
POLYTOPE_GUARD = 16


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def gf2_rref(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form; pivot of a row is its lowest set bit."""
    basis: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for b, p in zip(basis, pivots):
            if r >> p & 1:
                r ^= b
        if not r:
            continue
        p = (r & -r).bit_length() - 1
        for i, b in enumerate(basis):
            if b >> p & 1:
                basis[i] = b ^ r
        basis.append(r)
        pivots.append(p)
    order = sorted(range(len(basis)), key=lambda i: pivots[i])
    return [basis[i] for i in order], [pivots[i] for i in order]


def gf2_rank(rows: Iterable[int]) -> int:
    return len(gf2_rref(rows)[0])


def span(rows: Sequence[int]) -> list[int]:
    out = [0]
    for r in rows:
        out += [x ^ r for x in out]
    return out


@dataclass(frozen=True)
class BinaryMatroid:
    d: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] = ()

    def __post_init__(self):
        if any(r >> self.d for r in self.rows):
            raise InputError("row has bits beyond the column count")
        red, _ = gf2_rref(self.rows)
        object.__setattr__(self, "rows", tuple(red))
        labels = tuple(str(x) for x in self.labels) or tuple(str(i) for i in range(self.d))
        if len(labels) != self.d:
            raise InputError("need one label per column")
        object.__setattr__(self, "labels", labels)

    @property
    def r(self) -> int:
        return len(self.rows)

    @classmethod
    def from_bits(cls, bits: Sequence[str], labels: Sequence[str] = ()) -> "BinaryMatroid":
        if not bits:
            raise InputError("matrix needs at least one row (use a zero row for rank 0)")
        d = len(bits[0])
        rows = []
        for s in bits:
            if len(s) != d or set(s) - {"0", "1"}:
                raise InputError(f"bad bit row {s!r}")
            rows.append(sum(1 << j for j, c in enumerate(s) if c == "1"))
        return cls(d, tuple(rows), tuple(labels))

    def to_bits(self) -> list[str]:
        return ["".join("1" if r >> j & 1 else "0" for j in range(self.d)) for r in self.rows]

    def column(self, j: int) -> int:
        """Column j as a bitmask over rows."""
        return sum(1 << i for i, r in enumerate(self.rows) if r >> j & 1)

    def names(self, mask: int) -> tuple[str, ...]:
        return tuple(self.labels[j] for j in _bits(mask))


def from_graph(g: Graph) -> BinaryMatroid:
    """Graphic matroid: vertex-edge incidence matrix over GF(2)."""
    es = g.sorted_edges()
    rows = [0] * g.n
    for j, (u, v) in enumerate(es):
        rows[u] |= 1 << j
        rows[v] |= 1 << j
    return BinaryMatroid(len(es), tuple(rows), tuple(f"{u}-{v}" for u, v in es))


def dual(m: BinaryMatroid) -> BinaryMatroid:
    """From standard form [I | A] (up to column order) to [A^T | I]."""
    pivots = [(r & -r).bit_length() - 1 for r in m.rows]
    pset = set(pivots)
    rows = []
    for j in range(m.d):
        if j in pset:
            continue
        row = 1 << j
        for r, p in zip(m.rows, pivots):
            if r >> j & 1:
                row |= 1 << p
        rows.append(row)
    return BinaryMatroid(m.d, tuple(rows), m.labels)


def cographic(g: Graph) -> BinaryMatroid:
    return dual(from_graph(g))


# ---------------------------------------------------------------------------
# cycles, circuits, cocircuits


@dataclass(frozen=True)
class CycleSpace:
    basis: tuple[int, ...]  # fundamental circuits as bitmasks

    @property
    def dim(self) -> int:
        return len(self.basis)


def cycle_basis(m: BinaryMatroid) -> CycleSpace:
    """Fundamental circuits C_e of the basis given by the pivot columns."""
    pivots = [(r & -r).bit_length() - 1 for r in m.rows]
    pset = set(pivots)
    out = []
    for j in range(m.d):
        if j in pset:
            continue
        c = 1 << j
        for r, p in zip(m.rows, pivots):
            if r >> j & 1:
                c |= 1 << p
        out.append(c)
    return CycleSpace(tuple(out))


def is_cycle(m: BinaryMatroid, x: int) -> bool:
    return all((r & x).bit_count() % 2 == 0 for r in m.rows)


def enumerate_cycles(m: BinaryMatroid) -> list[int]:
    if m.d > CYCLE_GUARD:
        raise SizeGuardExceeded(f"{m.d} elements exceed the cycle enumeration guard {CYCLE_GUARD}")
    return sorted(span(cycle_basis(m).basis))


def circuits(m: BinaryMatroid) -> list[int]:
    """Minimal dependent column sets, by increasing size with pruning."""
    if m.d > CIRCUIT_GUARD:
        raise SizeGuardExceeded(f"{m.d} elements exceed the circuit guard {CIRCUIT_GUARD}")
    cols = [m.column(j) for j in range(m.d)]
    found: list[int] = []
    for k in range(1, min(m.r + 1, m.d) + 1):
        for combo in combinations(range(m.d), k):
            s = sum(1 << j for j in combo)
            if any(c & s == c for c in found):
                continue
            if gf2_rank(cols[j] for j in combo) < k:
                found.append(s)
    return sorted(found, key=lambda s: (s.bit_count(), s))


def minimal_supports(vectors: Iterable[int]) -> list[int]:
    """Inclusion-minimal nonzero supports; an independent circuit oracle."""
    vs = sorted({v for v in vectors if v}, key=lambda s: (s.bit_count(), s))
    out: list[int] = []
    for v in vs:
        if not any(c & v == c for c in out):
            out.append(v)
    return out


def cocircuits(m: BinaryMatroid) -> list[int]:
    return circuits(dual(m))


def has_chord(circuit: int, family: Sequence[int], d: int) -> bool:
    """Some e outside C with C = C1 ^ C2, C1 & C2 = {e}, C1, C2 in family."""
    fam = set(family)
    for e in range(d):
        bit = 1 << e
        if circuit & bit:
            continue
        for c1 in family:
            if not c1 & bit or (c1 & ~bit) & ~circuit:
                continue
            c2 = circuit ^ c1
            if c2 in fam and c1 & c2 == bit:
                return True
    return False


def chordless_cocircuits(m: BinaryMatroid) -> list[int]:
    co = cocircuits(m)
    return [c for c in co if not has_chord(c, co, m.d)]


def chordless_circuits(m: BinaryMatroid) -> list[int]:
    ci = circuits(m)
    return [c for c in ci if not has_chord(c, ci, m.d)]


# ---------------------------------------------------------------------------
# minors and preprocessing


def delete(m: BinaryMatroid, j: int) -> BinaryMatroid:
    keep = [i for i in range(m.d) if i != j]
    rows = tuple(sum(1 << k for k, i in enumerate(keep) if r >> i & 1) for r in m.rows)
    return BinaryMatroid(m.d - 1, rows, tuple(m.labels[i] for i in keep))


def contract(m: BinaryMatroid, j: int) -> BinaryMatroid:
    rows = list(m.rows)
    piv = next((i for i, r in enumerate(rows) if r >> j & 1), None)
    if piv is not None:
        pr = rows.pop(piv)
        rows = [r ^ pr if r >> j & 1 else r for r in rows]
    return delete(BinaryMatroid(m.d, tuple(rows), m.labels), j)


def coloops(m: BinaryMatroid) -> list[int]:
    """Columns in every basis: deleting them lowers the rank."""
    return [j for j in range(m.d) if gf2_rank(m.column(i) for i in range(m.d) if i != j) < m.r]


def preprocess(m: BinaryMatroid) -> BinaryMatroid:
    """Delete coloops and contract one element of each 2-element cocircuit
    until neither remains; the cycle polytope then is full-dimensional."""
    while True:
        cl = coloops(m)
        if cl:
            m = delete(m, cl[0])
            continue
        two = next((c for c in cocircuits(m) if c.bit_count() == 2), None)
        if two is None:
            return m
        m = contract(m, (two & -two).bit_length() - 1)


# ---------------------------------------------------------------------------
# cycle polytope


@dataclass(frozen=True)
class CyclePolytope:
    v: VPolytope
    h: HPolytope  # box + odd-set inequalities as written
    irredundant: HPolytope
    summary: FSummary
    matroid: BinaryMatroid  # after preprocessing
    two_level: bool
    long_chordless: tuple[int, ...]  # chordless cocircuits of size >= 5
    cotriangles: int
    cosquares: int
    arithmetic_ok: bool | None  # 2T + 4S <= d(2^r - 1), checked when d >= 4
    description_exact: bool

    def __iter__(self):
        return iter((self.v, self.h, self.summary))

    def report(self) -> dict:
        return {
            "summary": self.summary.as_dict(),
            "two_level": self.two_level,
            "long_chordless_cocircuits": [list(self.matroid.names(c)) for c in self.long_chordless],
            "cotriangles": self.cotriangles,
            "cosquares": self.cosquares,
            "arithmetic_ok": self.arithmetic_ok,
            "description_exact": self.description_exact,
            "elements": list(self.matroid.labels),
        }


def odd_set_inequalities(d: int, chordless: Sequence[int]) -> list[tuple[tuple[int, ...], int]]:
    rows = []
    for j in range(d):
        a = [0] * d
        a[j] = -1
        rows.append((tuple(a), 0))
        a = [0] * d
        a[j] = 1
        rows.append((tuple(a), 1))
    for c in chordless:
        members = list(_bits(c))
        for k in range(1, len(members) + 1, 2):
            for F in combinations(members, k):
                a = [0] * d
                for j in members:
                    a[j] = -1
                for j in F:
                    a[j] = 1
                rows.append((tuple(a), k - 1))
    return rows


def cycle_polytope(m: BinaryMatroid, geometric_limit: int = 10) -> CyclePolytope:
    m = preprocess(m)
    d = m.d
    if d > POLYTOPE_GUARD:
        raise SizeGuardExceeded(f"{d} elements exceed the cycle polytope guard {POLYTOPE_GUARD}")
    cycles = enumerate_cycles(m)
    v = VPolytope(d, tuple(tuple(c >> j & 1 for j in range(d)) for c in cycles))
    co = cocircuits(m)
    chordless = [c for c in co if not has_chord(c, co, d)]
    h = HPolytope(d, tuple(odd_set_inequalities(d, chordless)))
    for x in v.vertices:
        if not h.contains(x):
            raise VerificationError(f"cycle {x} violates the odd-set description")

    exact = True
    if d <= geometric_limit:
        exact = vertices_of(h) == v
    red = _facet_rows(v, h)
    if exact and d <= POLYTOPE_GUARD:
        facets = facets_of(v, max_dim=POLYTOPE_GUARD)
        if d <= geometric_limit:
            verify_description(v, red)
        elif len(facets.inequalities) != len(red.inequalities):
            exact = False
    s = FSummary.of(v.affine_dim, len(v), len(red.inequalities))
    if len(v) != 2 ** (d - m.r):
        raise VerificationError("cycle count differs from 2^(d-r)")
    long = tuple(c for c in chordless if c.bit_count() >= 5)
    tl = is_two_level(v, max_dim=POLYTOPE_GUARD)[0]
    T = sum(1 for c in co if c.bit_count() == 3)
    S = sum(1 for c in co if c.bit_count() == 4)
    arith = None
    if tl and d >= 4:
        arith = 2 * T + 4 * S <= d * (2**m.r - 1)
        if not arith:
            raise VerificationError(f"2T + 4S = {2 * T + 4 * S} exceeds d(2^r - 1) = {d * (2**m.r - 1)}")
    return CyclePolytope(v, h, red, s, m, tl, long, T, S, arith, exact)


def _facet_rows(v: VPolytope, h: HPolytope) -> HPolytope:
    dim = v.affine_dim
    keep = {}
    for row in h.inequalities:
        tight = sorted(tight_vertices(v, row))
        if not tight:
            continue
        base = v.vertices[tight[0]]
        diffs = [[a - b for a, b in zip(v.vertices[i], base)] for i in tight[1:]]
        if (matrix_rank(diffs) if diffs else 0) == dim - 1:
            keep.setdefault(reduce_modulo(row, h.equations, v.dim), row)
    return HPolytope(v.dim, tuple(keep.values()), h.equations, irredundant=True)


def cut_polytope(g: Graph, geometric_limit: int = 10) -> CyclePolytope:
    """CUT(g) as the cycle polytope of the cographic matroid.

    The 2-level flag is cross-checked against the induced-cycle condition
    (no induced cycle of length >= 5); the K5-minor hypothesis is the
    caller's responsibility.
    """
    if len(g.edges) > POLYTOPE_GUARD:
        raise SizeGuardExceeded(f"{len(g.edges)} edges exceed the guard {POLYTOPE_GUARD}")
    cp = cycle_polytope(cographic(g), geometric_limit)
    long_holes = [c for c in induced_cycles(g) if len(c) >= 5]
    if cp.two_level == bool(long_holes):
        raise VerificationError("2-levelness disagrees with the induced cycle condition")
    return cp


__all__ = [
    "BinaryMatroid",
    "CycleSpace",
    "CyclePolytope",
    "gf2_rref",
    "gf2_rank",
    "from_graph",
    "cographic",
    "dual",
    "cycle_basis",
    "enumerate_cycles",
    "is_cycle",
    "circuits",
    "cocircuits",
    "minimal_supports",
    "chordless_cocircuits",
    "chordless_circuits",
    "has_chord",
    "coloops",
    "delete",
    "contract",
    "preprocess",
    "odd_set_inequalities",
    "cycle_polytope",
    "cut_polytope",
    "span",
]
