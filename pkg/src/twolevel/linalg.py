"""Exact linear algebra over the rationals.

Everything here works on lists of ``Fraction`` (or int) rows and never
touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence

Row = Sequence[Fraction | int]


def rref(rows: Sequence[Row]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of ``rows``.

    Returns the nonzero rows of the reduced matrix and the pivot column of
    each of them.
    """
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Row]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Row], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of ``{x : row . x = 0 for every row}``."""
    if ncols is None:
        ncols = len(rows[0])
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def inverse(rows: Sequence[Row]) -> list[list[Fraction]]:
    n = len(rows)
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(red) < n:
        raise ZeroDivisionError("singular matrix")
    return [r[n:] for r in red]


def solve_affine(rows: Sequence[Row], rhs: Sequence[Fraction | int], ncols: int):
    """Parametrize the solutions of ``rows . x = rhs``.

    Returns ``(x0, basis)`` with every solution equal to ``x0 + N z`` where
    the columns of N are ``basis``; returns ``None`` if the system is
    inconsistent.
    """
    if not rows:
        return [Fraction(0)] * ncols, [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x0 = [Fraction(0)] * ncols
    for row, p in zip(red, pivots):
        x0[p] = row[ncols]
    return x0, nullspace([r[:ncols] for r in red], ncols)


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def common_denominator(values) -> int:
    return reduce(lcm, (Fraction(v).denominator for v in values), 1)


def primitive(vec: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = reduce(gcd, vec, 0)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def integer_row(vec: Sequence[Fraction | int]) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    den = common_denominator(vec)
    return primitive([int(Fraction(x) * den) for x in vec])


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))
