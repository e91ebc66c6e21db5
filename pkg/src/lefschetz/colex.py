"""Colex monomial bases and the matrix of multiplication by x+y+z.

Monomials x^a y^b z^c are compared colexicographically, i.e. by the reversed
exponent tuple ``(c, b, a)``.  In this order a graded piece splits into
consecutive runs of constant z-exponent, which is what gives the Lefschetz
matrix its block lower-bidiagonal shape.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

from .hilbert import CIParams, peak_profile, socle_degree


class Monomial(NamedTuple):
    a: int
    b: int
    c: int

    @property
    def degree(self) -> int:
        return self.a + self.b + self.c

    def __str__(self) -> str:
        parts = []
        for var, k in zip("xyz", self):
            if k == 1:
                parts.append(var)
            elif k > 1:
                parts.append(f"{var}^{k}")
        return "*".join(parts) or "1"


def colex_key(m: Monomial) -> tuple[int, int, int]:
    return (m.c, m.b, m.a)


def colex_compare(m1: Monomial, m2: Monomial) -> int:
    """Three-way colex comparison: -1, 0 or 1.

    >>> colex_compare(Monomial(3, 0, 0), Monomial(2, 1, 0))
    -1
    """
    if m1.degree != m2.degree:
        raise ValueError(f"cannot compare monomials of degrees {m1.degree} and {m2.degree}")
    k1, k2 = colex_key(m1), colex_key(m2)
    return (k1 > k2) - (k1 < k2)


def monomial_basis(params: CIParams, d: int) -> list[Monomial]:
    """Standard monomials of degree ``d`` in colex order."""
    e = socle_degree(params)
    if not 0 <= d <= e:
        raise ValueError(f"degree {d} outside [0, {e}]")
    al, be, ga = params
    # generated directly in colex order: c outer, then b
    basis = []
    for c in range(min(ga - 1, d) + 1):
        for b in range(min(be - 1, d - c) + 1):
            a = d - c - b
            if a < al:
                basis.append(Monomial(a, b, c))
    return basis


@dataclass(frozen=True)
class LefschetzMatrix:
    """Multiplication by x+y+z from A_d to A_{d+1} in colex bases (0/1 entries)."""

    entries: tuple[tuple[int, ...], ...]
    row_basis: tuple[Monomial, ...]
    col_basis: tuple[Monomial, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.entries), len(self.entries[0]) if self.entries else 0)

    @property
    def rows(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def to_text(self) -> str:
        return "".join(" ".join(map(str, r)) + "\n" for r in self.entries)

    def to_coo(self) -> str:
        """1-based ``i j`` pairs of the nonzero entries, row-major."""
        lines = []
        for i, row in enumerate(self.entries, 1):
            for j, v in enumerate(row, 1):
                if v:
                    lines.append(f"{i} {j}\n")
        return "".join(lines)


@lru_cache(maxsize=256)
def lefschetz_matrix(params: CIParams, d: int | None = None) -> LefschetzMatrix:
    """Build the matrix of multiplication by ``x+y+z`` from degree ``d`` to ``d+1``.

    ``d`` defaults to the pre-peak degree ``s``, the only map that matters for
    the WLP.
    """
    e = socle_degree(params)
    if d is None:
        d = peak_profile(params).s
    if not 0 <= d < e:
        raise ValueError(f"no multiplication map from degree {d} (socle degree {e})")
    cols = monomial_basis(params, d)
    rows = monomial_basis(params, d + 1)
    index = {m: i for i, m in enumerate(rows)}
    mat = [[0] * len(cols) for _ in rows]
    for j, (a, b, c) in enumerate(cols):
        for target in ((a + 1, b, c), (a, b + 1, c), (a, b, c + 1)):
            i = index.get(target)
            if i is not None:
                mat[i][j] = 1
    return LefschetzMatrix(tuple(map(tuple, mat)), tuple(rows), tuple(cols))


def _peak_blocks(params: CIParams) -> list[tuple[str, int]]:
    """Diagonal block sequence ``(kind, r)`` of the peak map.

    kind ``Z``: Z_{r x (r+1)}; ``S``: the square Z_{alpha x alpha}; ``T``: the
    transpose of Z_{r x (r+1)}.
    """
    al, be, ga = params
    if ga > al + be - 2:
        raise ValueError(f"{tuple(params)} is outside the block-structured regimes (need gamma <= alpha+beta-2)")
    if (al + be - ga) % 2 == 0:
        m = (al + be - ga) // 2
        last = m
    else:
        m = (al + be - ga + 1) // 2
        last = m - 1
    blocks = [("Z", r) for r in range(m, al)]
    blocks += [("S", al)] * (be - al)
    blocks += [("T", r) for r in range(al - 1, last - 1, -1)]
    return blocks


def _block_shape(kind: str, r: int) -> tuple[int, int]:
    if kind == "Z":
        return r, r + 1
    if kind == "T":
        return r + 1, r
    return r, r


def _block_ones(kind: str, r: int) -> list[tuple[int, int]]:
    if kind == "Z":
        return [(i, j) for i in range(r) for j in (i, i + 1)]
    if kind == "T":
        return [(i, j) for j in range(r) for i in (j, j + 1)]
    return [(i, i) for i in range(r)] + [(i, i + 1) for i in range(r - 1)]


def assemble_block_matrix(params: CIParams) -> LefschetzMatrix:
    """Assemble the peak Lefschetz matrix from the Z / I block recipe alone.

    Diagonal blocks ascend through Z_{m x (m+1)}, ..., Z_{(alpha-1) x alpha},
    then ``beta - alpha`` copies of Z_{alpha x alpha}, then descend through
    transposed Z blocks.  An identity block sits below each diagonal block.
    No monomials are consulted; bases are left empty.
    """
    blocks = _peak_blocks(params)
    shapes = [_block_shape(k, r) for k, r in blocks]
    row_off = [0]
    col_off = [0]
    for nr, nc in shapes:
        row_off.append(row_off[-1] + nr)
        col_off.append(col_off[-1] + nc)
    mat = [[0] * col_off[-1] for _ in range(row_off[-1])]
    for t, (kind, r) in enumerate(blocks):
        for i, j in _block_ones(kind, r):
            mat[row_off[t] + i][col_off[t] + j] = 1
        if t + 1 < len(blocks):
            for i in range(shapes[t][1]):
                mat[row_off[t + 1] + i][col_off[t] + i] = 1
    return LefschetzMatrix(tuple(map(tuple, mat)), (), ())
