"""Counting plane partitions in a box, independently of MacMahon's formula.

A plane partition in an a x b x c box is stored as a zero-padded a x b array
with entries in [0, c], weakly decreasing along rows and down columns.
"""

from __future__ import annotations

from itertools import combinations_with_replacement
from math import comb
from typing import Sequence

from .exactla import det_fraction_free
from .formulas import BoxDims, binom

MAX_ENUM_CELLS = 12
MAX_ENUM_HEIGHT = 8
MAX_TRANSFER_STATES = 500_000


class GuardExceeded(ValueError):
    """The requested box is too large for the chosen counting method."""


def is_box_plane_partition(arr: Sequence[Sequence[int]], c: int) -> bool:
    width = len(arr[0]) if arr else 0
    if any(len(row) != width for row in arr):
        raise ValueError("ragged array")
    for i, row in enumerate(arr):
        for j, v in enumerate(row):
            if v < 0 or v > c:
                return False
            if j + 1 < width and row[j + 1] > v:
                return False
            if i + 1 < len(arr) and arr[i + 1][j] > v:
                return False
    return True


def count_by_enumeration(
    box: BoxDims,
    max_cells: int = MAX_ENUM_CELLS,
    max_height: int = MAX_ENUM_HEIGHT,
) -> int:
    """Backtrack over the cells in row-major order, filling each with a legal value."""
    a, b, c = box
    if a * b > max_cells or c > max_height:
        raise GuardExceeded(
            f"box {tuple(box)} exceeds enumeration guard (a*b <= {max_cells}, c <= {max_height}); "
            "use count_by_transfer"
        )
    if a == 0 or b == 0:
        return 1
    cells = a * b
    grid = [0] * cells

    def fill(pos: int) -> int:
        i, j = divmod(pos, b)
        bound = c
        if j:
            bound = grid[pos - 1]
        if i and grid[pos - b] < bound:
            bound = grid[pos - b]
        if pos == cells - 1:
            return bound + 1
        total = 0
        for v in range(bound + 1):
            grid[pos] = v
            total += fill(pos + 1)
        return total

    return fill(0)


def count_by_transfer(box: BoxDims, max_states: int = MAX_TRANSFER_STATES) -> int:
    """Column-by-column transfer count.

    States are the weakly decreasing columns of height ``a`` with entries at
    most ``c``.  Each column must be dominated entrywise by the one on its
    left, so one step maps ``f`` to ``v -> sum(f[u] for u >= v)``.  That sum
    is taken one coordinate at a time; every intermediate point stays a
    weakly decreasing column, so the state set is closed under it.
    """
    a, b, c = box
    if a == 0 or b == 0 or c == 0:
        return 1
    n_states = comb(a + c, a)
    if n_states > max_states:
        raise GuardExceeded(f"{n_states} transfer states for box {tuple(box)} exceeds {max_states}")
    states = [tuple(reversed(s)) for s in combinations_with_replacement(range(c + 1), a)]
    index = {s: n for n, s in enumerate(states)}
    # for each coordinate, the state with that entry raised by one (or -1)
    raise_at = []
    for t in range(a):
        up = []
        for s in states:
            limit = c if t == 0 else s[t - 1]
            if s[t] < limit:
                up.append(index[s[:t] + (s[t] + 1,) + s[t + 1:]])
            else:
                up.append(-1)
        raise_at.append(up)
    # process states so the raised neighbour along coordinate t is finalised first
    orders = [sorted(range(n_states), key=lambda n, t=t: -states[n][t]) for t in range(a)]

    f = [1] * n_states
    for _ in range(b - 1):
        for t in range(a - 1, -1, -1):
            up = raise_at[t]
            for n in orders[t]:
                u = up[n]
                if u >= 0:
                    f[n] += f[u]
    return sum(f)


def count_by_determinant(box: BoxDims) -> int:
    """``det (C(b+c, c+i-j))`` over ``1 <= i, j <= a``."""
    a, b, c = box
    mat = [[binom(b + c, c + i - j) for j in range(1, a + 1)] for i in range(1, a + 1)]
    return det_fraction_free(mat)
