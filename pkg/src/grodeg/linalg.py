"""Exact rank computations shared by cohomology and Jacobian analyses.

Rank over the rationals uses fraction-free (Bareiss) elimination on an
integer matrix; Fraction entries are first cleared row by row, which leaves
the rank unchanged. Rank over GF(p) is plain Gaussian elimination on
residues.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .fields import GFElement


def rank_int(rows) -> int:
    """Rank of an integer matrix via Bareiss fraction-free elimination."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        pv = m[rank][col]
        for i in range(rank + 1, nrows):
            fi = m[i][col]
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * pv - fi * m[rank][j]) // prev
            m[i][col] = 0
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows, p: int) -> int:
    """Rank of an integer (or residue) matrix over GF(p)."""
    m = [[int(x) % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, nrows):
            if m[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        row = m[rank]
        for i in range(rank + 1, nrows):
            f = m[i][col]
            if f:
                f = f * inv % p
                m[i] = [(a - f * b) % p for a, b in zip(m[i], row)]
        rank += 1
        if rank == nrows:
            break
    return rank


def _clear_row(row):
    den = lcm(*[c.denominator for c in row]) if row else 1
    ints = [int(c * den) for c in row]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g > 1:
        ints = [x // g for x in ints]
    return ints


def rank_exact(rows, field) -> int:
    """Rank of a matrix of field scalars (Fractions over QQ, residues over GF(p))."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    if field.characteristic() == 0:
        cleared = [_clear_row([Fraction(c) for c in row]) for row in m]
        return rank_int(cleared)
    p = field.characteristic()
    ints = [[c.v if isinstance(c, GFElement) else int(c) for c in row] for row in m]
    return rank_mod_p(ints, p)
