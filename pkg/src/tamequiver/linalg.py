"""Exact linear algebra over the rationals.

Matrices are plain lists of rows holding ``int`` or ``Fraction`` entries.
Rank and determinant clear denominators row by row and then run
fraction-free (Bareiss) elimination over the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Number = int | Fraction
Matrix = list[list[Number]]


def _integer_rows(rows: Sequence[Sequence[Number]]) -> tuple[list[list[int]], int]:
    """Scale every row to integers. Returns the rows and the product of scale factors."""
    out = []
    scale = 1
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
        scale *= den
    return out, scale


def _bareiss(m: list[list[int]], ncols: int) -> tuple[int, int]:
    """In-place fraction-free elimination. Returns (rank, sign * last pivot)."""
    nrows = len(m)
    prev = 1
    sign = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            m[r], m[piv] = m[piv], m[r]
            sign = -sign
        pr = m[r]
        p = pr[c]
        for i in range(r + 1, nrows):
            row = m[i]
            f = row[c]
            for j in range(c + 1, ncols):
                row[j] = (p * row[j] - f * pr[j]) // prev
            row[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def rank(rows: Sequence[Sequence[Number]], ncols: int | None = None) -> int:
    if not rows:
        return 0
    if ncols is None:
        ncols = len(rows[0])
    if ncols == 0:
        return 0
    m, _ = _integer_rows(rows)
    return _bareiss(m, ncols)[0]


def det(rows: Sequence[Sequence[Number]]) -> Fraction:
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")
    m, scale = _integer_rows(rows)
    r, d = _bareiss(m, n)
    if r < n:
        return Fraction(0)
    return Fraction(d, scale)


def nullspace(rows: Sequence[Sequence[Number]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column of the reduced echelon form."""
    m = [[Fraction(x) for x in row] for row in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][free]
        basis.append(v)
    return basis


def primitive(v: Sequence[Fraction]) -> list[int]:
    """Smallest integer multiple of ``v`` with coprime entries and nonnegative first nonzero entry."""
    den = 1
    for x in v:
        den = lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return ints
    ints = [x // g for x in ints]
    first = next(x for x in ints if x != 0)
    return ints if first > 0 else [-x for x in ints]


def matmul(a: Sequence[Sequence[Number]], b: Sequence[Sequence[Number]], cols: int | None = None) -> Matrix:
    inner = len(b)
    if cols is None:
        cols = len(b[0]) if b else 0
    return [[sum(row[k] * b[k][j] for k in range(inner)) for j in range(cols)] for row in a]
