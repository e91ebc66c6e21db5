"""Hilbert functions of K[x,y,z]/(x^alpha, y^beta, z^gamma).

The algebra is symmetric under permuting the variables, so parameters are
always stored in ascending order ``alpha <= beta <= gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple


@dataclass(frozen=True, order=True)
class CIParams:
    """Exponents of a monomial complete intersection in three variables.

    Arbitrary input order is accepted and sorted at construction.

    >>> CIParams(5, 3, 4)
    CIParams(alpha=3, beta=4, gamma=5)
    """

    alpha: int
    beta: int
    gamma: int

    def __post_init__(self) -> None:
        exps = (self.alpha, self.beta, self.gamma)
        for g in exps:
            if isinstance(g, bool) or not isinstance(g, int) or g < 1:
                raise ValueError(f"exponents must be positive integers, got {exps}")
        a, b, c = sorted(exps)
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", c)

    def __iter__(self) -> Iterator[int]:
        return iter((self.alpha, self.beta, self.gamma))

    @property
    def total(self) -> int:
        return self.alpha + self.beta + self.gamma

    def socle_degree(self) -> int:
        return socle_degree(self)


@dataclass(frozen=True)
class HVector:
    """The h-vector ``(h_0, ..., h_e)`` of the algebra."""

    values: tuple[int, ...]

    def __getitem__(self, d: int) -> int:
        # degrees outside [0, e] have zero-dimensional graded pieces
        if 0 <= d < len(self.values):
            return self.values[d]
        return 0

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    @property
    def socle_degree(self) -> int:
        return len(self.values) - 1

    def is_symmetric(self) -> bool:
        return self.values == self.values[::-1]

    def is_unimodal(self) -> bool:
        v = self.values
        top = v.index(max(v))
        return all(v[i] <= v[i + 1] for i in range(top)) and all(
            v[i] >= v[i + 1] for i in range(top, len(v) - 1)
        )


class PeakProfile(NamedTuple):
    s: int
    s_plus_1: int
    gap: int


def socle_degree(params: CIParams) -> int:
    """Top nonzero degree ``e = alpha + beta + gamma - 3``."""
    return params.alpha + params.beta + params.gamma - 3


def _c2(n: int) -> int:
    # C(n, 2) with the convention C(n, 2) = 0 for n < 2
    return n * (n - 1) // 2 if n >= 2 else 0


def hilbert_function(params: CIParams, d: int) -> int:
    """``dim_K A_d`` by inclusion-exclusion over the three generators."""
    a, b, g = params.alpha, params.beta, params.gamma
    return (
        _c2(d + 2)
        - _c2(d - a + 2) - _c2(d - b + 2) - _c2(d - g + 2)
        + _c2(d - a - b + 2) + _c2(d - a - g + 2) + _c2(d - b - g + 2)
        - _c2(d - a - b - g + 2)
    )


def h_vector(params: CIParams) -> HVector:
    e = socle_degree(params)
    return HVector(tuple(hilbert_function(params, d) for d in range(e + 1)))


def peak_profile(params: CIParams) -> PeakProfile:
    """Degrees ``s = floor((e-1)/2)``, ``s+1`` and the jump ``h_{s+1} - h_s``.

    For ``e = 0`` this gives ``s = -1`` and a gap of 1 (``h_{-1}`` is zero).
    """
    e = socle_degree(params)
    s = (e - 1) // 2
    h = h_vector(params)
    return PeakProfile(s, s + 1, h[s + 1] - h[s])


def is_trivially_wlp(params: CIParams) -> bool:
    """True when gamma is large enough that the WLP holds in every characteristic.

    In that region the algebra agrees with K[x,y,z]/(x^alpha, y^beta) up to
    the peak degree, where z is a nonzerodivisor.
    """
    a, b, g = params
    if socle_degree(params) % 2:
        return g > a + b - 2
    return g > a + b - 3
