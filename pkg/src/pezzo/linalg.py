"""Exact ranks: fraction-free elimination over Q and vectorized elimination mod p."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

import numpy as np

# Three primes between 2^20 and 2^31; products of residues stay inside int64.
TEST_PRIMES = (1048583, 1073741789, 2147483629)


def rank_rational(rows: Sequence[Sequence]) -> int:
    """Rank over Q by Bareiss elimination (integers) or Fraction elimination."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    if any(isinstance(x, Fraction) and x.denominator != 1 for r in a for x in r):
        den = math.lcm(*(Fraction(x).denominator for r in a for x in r))
        a = [[int(Fraction(x) * den) for x in r] for r in a]
    else:
        a = [[int(x) for x in r] for r in a]
    m, n = len(a), len(a[0])
    rank, prev = 0, 1
    for c in range(n):
        piv = next((i for i in range(rank, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][c]
        for i in range(rank + 1, m):
            f = a[i][c]
            a[i] = [(p * x - f * y) // prev for x, y in zip(a[i], a[rank])]
        prev = p
        rank += 1
        if rank == m:
            break
    return rank


def rank_mod_p(rows, p: int) -> int:
    """Rank over F_p by Gaussian elimination on int64 arrays."""
    a = np.array([[int(x) % p for x in r] for r in rows], dtype=np.int64)
    if a.size == 0:
        return 0
    m, n = a.shape
    rank = 0
    for c in range(n):
        if rank == m:
            break
        nz = np.nonzero(a[rank:, c])[0]
        if len(nz) == 0:
            continue
        piv = rank + nz[0]
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), p - 2, p)
        a[rank] = (a[rank] * inv) % p
        below = np.nonzero(a[rank + 1:, c])[0] + rank + 1
        if len(below):
            f = a[below, c][:, None]
            a[below] = (a[below] - (f * a[rank]) % p) % p
        rank += 1
    return rank


def nullspace_rational(rows: Sequence[Sequence]) -> list[list[Fraction]]:
    """Basis of {x : rows x = 0} over Q from the reduced row echelon form."""
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, m) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        a[r] = [v / lead for v in a[r]]
        for i in range(m):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [v - f * w for v, w in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    basis = []
    for free in (c for c in range(n) if c not in pivots):
        x = [Fraction(0)] * n
        x[free] = Fraction(1)
        for i, c in enumerate(pivots):
            x[c] = -a[i][free]
        basis.append(x)
    return basis
