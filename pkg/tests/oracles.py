"""Brute-force reference implementations used to cross-check the package.

Nothing here imports the package's enumeration code; everything is done by
plain subset scans and Gaussian elimination over Fractions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations
from math import gcd


def _rref(rows):
    m = [[Fraction(x) for x in r] for r in rows]
    piv = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        m[r] = [x / m[r][c] for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv.append(c)
        r += 1
    return m[:r], piv


def rank(rows) -> int:
    return len(_rref(rows)[0]) if rows else 0


def _kernel_vector(rows, n):
    """One nonzero solution of rows . x = 0 (rows of rank n - 1)."""
    red, piv = _rref(rows) if rows else ([], [])
    free = [c for c in range(n) if c not in piv]
    f = free[0]
    x = [Fraction(0)] * n
    x[f] = Fraction(1)
    for row, p in zip(red, piv):
        x[p] = -row[f]
    return x


def _primitive(vals):
    den = 1
    for v in vals:
        den = den * v.denominator // gcd(den, v.denominator)
    ints = [int(v * den) for v in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    return tuple(v // g for v in ints) if g else tuple(ints)


def _full_dim_coords(points):
    """Coordinates on which the point set is full-dimensional in its hull."""
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    if not diffs:
        return []
    cols = list(zip(*diffs))
    chosen = []
    for j in range(len(cols)):
        if rank([cols[c] for c in chosen + [j]]) > len(chosen):
            chosen.append(j)
    return chosen


def brute_facets(points) -> set[frozenset[int]]:
    """Facets of conv(points) as sets of point indices on the facet.

    Works in any affine dimension by projecting onto coordinates where the
    set is full-dimensional.
    """
    pts = [tuple(Fraction(x) for x in p) for p in points]
    coords = _full_dim_coords(pts)
    k = len(coords)
    if k == 0:
        return set()
    proj = [tuple(p[c] for c in coords) for p in pts]
    if k == 1:
        vals = [p[0] for p in proj]
        lo, hi = min(vals), max(vals)
        return {frozenset(i for i, v in enumerate(vals) if v == lo), frozenset(i for i, v in enumerate(vals) if v == hi)}
    out = set()
    for sub in combinations(range(len(proj)), k):
        base = proj[sub[0]]
        diffs = [[a - b for a, b in zip(proj[i], base)] for i in sub[1:]]
        if rank(diffs) != k - 1:
            continue
        a = _kernel_vector(diffs, k)
        b = sum(x * y for x, y in zip(a, base))
        vals = [sum(x * y for x, y in zip(a, p)) for p in proj]
        if all(v <= b for v in vals) or all(v >= b for v in vals):
            out.add(frozenset(i for i, v in enumerate(vals) if v == b))
    return out


def brute_facet_rows(points):
    """Primitive (a, b) rows for full-dimensional point sets."""
    pts = [tuple(Fraction(x) for x in p) for p in points]
    d = len(pts[0])
    rows = set()
    for F in brute_facets(pts):
        sub = sorted(F)
        base = pts[sub[0]]
        diffs = [[a - b for a, b in zip(pts[i], base)] for i in sub[1:]]
        a = _kernel_vector(diffs, d)
        b = sum(x * y for x, y in zip(a, base))
        if any(sum(x * y for x, y in zip(a, p)) > b for p in pts):
            a, b = [-x for x in a], -b
        prim = _primitive(list(a) + [b])
        rows.add((prim[:-1], prim[-1]))
    return rows


def brute_vertices(ineqs, dim):
    """Vertices of {x : a.x <= b} by solving every d-subset of rows."""
    out = set()
    rows = [([Fraction(x) for x in a], Fraction(b)) for a, b in ineqs]
    for sub in combinations(range(len(rows)), dim):
        mat = [rows[i][0] + [rows[i][1]] for i in sub]
        red, piv = _rref(mat)
        if len(piv) != dim or dim in piv:
            continue
        x = [Fraction(0)] * dim
        for row, p in zip(red, piv):
            x[p] = row[dim]
        if all(sum(a * y for a, y in zip(ai, x)) <= bi for ai, bi in rows):
            out.add(tuple(x))
    return out


def brute_cliques(n, edges, include_empty=False):
    es = {tuple(sorted(e)) for e in edges}
    out = []
    for mask in range(0 if include_empty else 1, 1 << n):
        s = [i for i in range(n) if mask >> i & 1]
        if all((u, v) in es for u, v in combinations(s, 2)):
            out.append(tuple(s))
    return out


def brute_stable_matchings(men, women):
    """Perfect matchings (as tuples man -> woman) with no blocking pair."""
    n = len(men)
    mr = [{w: i for i, w in enumerate(r)} for r in men]
    wr = [{m: i for i, m in enumerate(r)} for r in women]
    out = []
    for perm in permutations(range(n)):
        husband = {w: m for m, w in enumerate(perm)}
        blocking = any(
            mr[m][w] < mr[m][perm[m]] and wr[w][m] < wr[w][husband[w]] for m in range(n) for w in range(n)
        )
        if not blocking:
            out.append(perm)
    return out


def brute_rank(bases, F) -> int:
    F = set(F)
    return max(len(F & set(B)) for B in bases)


def brute_spanning_trees(n, edges) -> int:
    count = 0
    for sub in combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                x = parent[x]
            return x

        ok = True
        for u, v in sub:
            a, b = find(u), find(v)
            if a == b:
                ok = False
                break
            parent[a] = b
        count += ok
    return count
