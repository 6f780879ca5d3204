"""Incremental double description method over the integers.

Computes the extreme rays of a pointed polyhedral cone ``{y : A y >= 0}``
given by integer rows.  Rays are kept as primitive integer vectors so no
rational arithmetic happens inside the main loop.  Adjacency of two rays is
decided combinatorially: rays ``p`` and ``q`` are adjacent iff no third ray
is tight on every constraint that is tight on both.  To make that test
cheap each processed constraint keeps a bitset of the rays tight on it.
"""

from __future__ import annotations

from typing import Sequence

from .linalg import inverse, primitive, rref


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _initial_basis(rows: Sequence[Sequence[int]], n: int) -> list[int]:
    """Indices of the first ``n`` linearly independent rows, in order."""
    chosen: list[int] = []
    basis: list[list] = []
    pivots: list[int] = []
    for i, row in enumerate(rows):
        # reduce against current echelon basis
        v = list(row)
        for b, p in zip(basis, pivots):
            if v[p]:
                f = v[p]
                v = [x * b[p] - f * y for x, y in zip(v, b)]
        nz = next((c for c, x in enumerate(v) if x), None)
        if nz is None:
            continue
        chosen.append(i)
        basis.append(primitive(v))
        pivots.append(nz)
        if len(chosen) == n:
            break
    return chosen


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of ``{y : r . y >= 0 for r in rows}``.

    ``rows`` must have full column rank, so that the cone is pointed.  The
    result is deterministic for a given row order.
    """
    if not rows:
        raise ValueError("no constraints")
    n = len(rows[0])
    start = _initial_basis(rows, n)
    if len(start) < n:
        raise ValueError("constraint matrix does not have full column rank")

    inv = inverse([rows[i] for i in start])
    rays: dict[int, tuple[int, ...]] = {}
    zsets: dict[int, int] = {}
    tight: dict[int, int] = {}  # constraint index -> bitset of ray ids
    for j in range(n):
        col = [inv[i][j] for i in range(n)]
        den = 1
        for x in col:
            den = den * x.denominator // _gcd(den, x.denominator)
        rays[j] = primitive([int(x * den) for x in col])
        zsets[j] = sum(1 << start[i] for i in range(n) if i != j)
    for i, ci in enumerate(start):
        tight[ci] = sum(1 << j for j in range(n) if j != i)
    alive = (1 << n) - 1
    next_id = n

    in_start = set(start)
    for hi, h in enumerate(rows):
        if hi in in_start:
            continue
        pos, neg, zero = [], [], []
        val: dict[int, int] = {}
        for rid, r in rays.items():
            s = 0
            for a, b in zip(h, r):
                if a:
                    s += a * b
            val[rid] = s
            if s > 0:
                pos.append(rid)
            elif s < 0:
                neg.append(rid)
            else:
                zero.append(rid)
        hbit = 1 << hi
        if not neg:
            for rid in zero:
                zsets[rid] |= hbit
            tight[hi] = sum(1 << rid for rid in zero)
            continue

        created: list[tuple[tuple[int, ...], int]] = []
        for q in neg:
            zq = zsets[q]
            sq = -val[q]
            rq = rays[q]
            qbit = 1 << q
            for p in pos:
                common = zsets[p] & zq
                if common.bit_count() < n - 2:
                    continue
                pair = qbit | (1 << p)
                m = alive
                for c in _bits(common):
                    m &= tight[c]
                    if m == pair:
                        break
                if m != pair:
                    continue
                sp = val[p]
                rp = rays[p]
                vec = primitive([sp * a + sq * b for a, b in zip(rq, rp)])
                created.append((vec, common | hbit))

        for q in neg:
            del rays[q]
            del zsets[q]
            alive &= ~(1 << q)
        hset = 0
        for rid in zero:
            zsets[rid] |= hbit
            hset |= 1 << rid
        for vec, z in created:
            rid = next_id
            next_id += 1
            rays[rid] = vec
            zsets[rid] = z
            bit = 1 << rid
            alive |= bit
            hset |= bit
            for c in _bits(z & ~hbit):
                tight[c] |= bit
        tight[hi] = hset

    return [rays[k] for k in sorted(rays)]


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def row_rank(rows: Sequence[Sequence[int]]) -> int:
    return len(rref(rows)[1])
