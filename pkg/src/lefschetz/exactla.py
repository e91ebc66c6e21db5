"""Exact integer linear algebra.

Matrices are plain sequences of rows of Python ints.  Determinants never leave
the integers; ranks are taken over the prime field F_p.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

IntMatrix = Sequence[Sequence[int]]

_WORD_PRIME_LIMIT = 2**31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def require_prime(p: int) -> None:
    if isinstance(p, bool) or not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"{p!r} is not a prime")


def _shape(m: IntMatrix) -> tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    if any(len(r) != cols for r in m):
        raise ValueError("ragged matrix")
    return rows, cols


def _square(m: IntMatrix) -> int:
    r, c = _shape(m)
    if r != c:
        raise ValueError(f"determinant of a non-square {r}x{c} matrix")
    return r


def det_fraction_free(m: IntMatrix) -> int:
    """Bareiss fraction-free elimination; every division is exact."""
    n = _square(m)
    if n == 0:
        return 1
    a = [[int(v) for v in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            for j in range(k + 1, n):
                ri[j] = (piv * ri[j] - f * rk[j]) // prev
            ri[k] = 0
        prev = piv
    return sign * a[n - 1][n - 1]


def _condense(m: IntMatrix) -> tuple[int, int]:
    """Desnanot-Jacobi condensation; returns ``(det, fallback_count)``.

    Level ``k`` holds every contiguous k x k minor.  A minor whose central
    (k-2) x (k-2) minor vanishes cannot be condensed and is evaluated directly
    by Bareiss elimination instead.
    """
    n = _square(m)
    if n == 0:
        return 1, 0
    lower = [[1] * (n + 1) for _ in range(n + 1)]
    cur = [[int(v) for v in row] for row in m]
    fallbacks = 0
    for k in range(1, n):
        size = n - k
        nxt = [[0] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                centre = lower[i + 1][j + 1]
                if centre == 0:
                    block = [row[j:j + k + 1] for row in m[i:i + k + 1]]
                    nxt[i][j] = det_fraction_free(block)
                    fallbacks += 1
                    continue
                cross = cur[i][j] * cur[i + 1][j + 1] - cur[i][j + 1] * cur[i + 1][j]
                nxt[i][j] = cross // centre
        lower, cur = cur, nxt
    return cur[0][0], fallbacks


def det_condensation(m: IntMatrix) -> int:
    """Determinant by Dodgson condensation with Bareiss fallback on zero pivots."""
    return _condense(m)[0]


def rank_mod_p(m: IntMatrix, p: int) -> int:
    """Rank of ``m`` over F_p (Gaussian elimination in machine words)."""
    require_prime(p)
    if p >= _WORD_PRIME_LIMIT:
        raise ValueError(f"prime {p} too large for word-sized elimination")
    rows, cols = _shape(m)
    if rows == 0 or cols == 0:
        return 0
    a = np.array([[int(v) % p for v in row] for row in m], dtype=np.int64)
    rank = 0
    for c in range(cols):
        if rank == rows:
            break
        nz = np.flatnonzero(a[rank:, c])
        if nz.size == 0:
            continue
        piv = rank + int(nz[0])
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, c]), -1, p)
        a[rank, c:] = (a[rank, c:] * inv) % p
        below = a[rank + 1:, c].copy()
        hit = np.flatnonzero(below)
        if hit.size:
            idx = hit + rank + 1
            a[idx, c:] = (a[idx, c:] - np.outer(below[hit], a[rank, c:])) % p
        rank += 1
    return rank


def _check_tall(m: IntMatrix) -> tuple[int, int]:
    r, c = _shape(m)
    if r != c + 1:
        raise ValueError(f"expected an (n+1) x n matrix, got {r}x{c}")
    return r, c


def omit_row_minor(m: IntMatrix, k: int) -> int:
    """Determinant of ``m`` with row ``k`` (1-based) deleted."""
    r, _ = _check_tall(m)
    if not 1 <= k <= r:
        raise ValueError(f"row index {k} outside [1, {r}]")
    return det_fraction_free([row for i, row in enumerate(m, 1) if i != k])


def all_maximal_minors(m: IntMatrix) -> list[int]:
    """Absolute values of the maximal minors, indexed by omitted row."""
    r, _ = _check_tall(m)
    return [abs(omit_row_minor(m, k)) for k in range(1, r + 1)]
