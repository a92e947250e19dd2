"""Exact matrix rank over Q (fraction-free) and over prime fields."""
from __future__ import annotations

from typing import Sequence


def rank_rational(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by Bareiss elimination.

    All intermediate entries stay integral, and each division is exact.
    """
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        p = m[rank][c]
        for r in range(rank + 1, nrows):
            a = m[r][c]
            row_r, row_k = m[r], m[rank]
            for j in range(c + 1, ncols):
                row_r[j] = (p * row_r[j] - a * row_k[j]) // prev
            row_r[c] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) by Gaussian elimination with modular inverses."""
    m = [[x % p for x in r] for r in rows]
    if not m or not m[0]:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        row_k = [(x * inv) % p for x in m[rank]]
        m[rank] = row_k
        for r in range(nrows):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], row_k)]
        rank += 1
        if rank == nrows:
            break
    return rank


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True
