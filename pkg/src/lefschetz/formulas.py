"""Closed forms: MacMahon's box count, the H(k) and F(k) minors, det(N_k).

Quantities whose individual factors are not integral are accumulated as
exact fractions and checked for integrality at the end.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator

from .exactla import require_prime
from .hilbert import CIParams


class IntegralityError(ArithmeticError):
    """A closed form that must be an integer came out fractional."""


@dataclass(frozen=True)
class BoxDims:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        for side in (self.a, self.b, self.c):
            if isinstance(side, bool) or not isinstance(side, int) or side < 0:
                raise ValueError(f"box sides must be nonnegative integers, got {tuple(self)}")

    def __iter__(self) -> Iterator[int]:
        return iter((self.a, self.b, self.c))

    def sorted(self) -> "BoxDims":
        return BoxDims(*sorted(self))

    def __str__(self) -> str:
        return f"M({self.a},{self.b},{self.c})"


class PrimeFactorization(dict):
    """Mapping prime -> positive exponent."""

    def value(self) -> int:
        out = 1
        for p, e in self.items():
            out *= p**e
        return out


def primes_upto(n: int) -> list[int]:
    """Sieve of Eratosthenes, primes ``<= n``."""
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, int(n**0.5) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytes(len(range(i * i, n + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero when ``k`` is out of ``[0, n]``."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _as_int(q: Fraction, what: str) -> int:
    if q.denominator != 1:
        raise IntegralityError(f"{what} evaluated to non-integer {q}")
    return q.numerator


def macmahon(box: BoxDims) -> int:
    """Number of plane partitions in an a x b x c box."""
    a, b, c = box
    num = den = 1
    for i in range(1, a + 1):
        num *= factorial(b + c + i - 1) * factorial(i - 1)
        den *= factorial(b + i - 1) * factorial(c + i - 1)
    q, r = divmod(num, den)
    assert r == 0
    return q


def legendre_valuation(n: int, p: int) -> int:
    """Exponent of ``p`` in ``n!``."""
    require_prime(p)
    if n < 0:
        raise ValueError("factorial of a negative number")
    v = 0
    while n:
        n //= p
        v += n
    return v


def macmahon_valuation(box: BoxDims, p: int) -> int:
    require_prime(p)
    a, b, c = box
    lv = legendre_valuation
    v = 0
    for i in range(1, a + 1):
        v += lv(b + c + i - 1, p) + lv(i - 1, p) - lv(b + i - 1, p) - lv(c + i - 1, p)
    return v


def macmahon_factorization(box: BoxDims, prime_bound: int | None = None) -> PrimeFactorization:
    """Factor ``M(a,b,c)`` from factorial valuations alone.

    Every factorial argument is below ``a+b+c``, so primes ``< a+b+c``
    suffice and that is the default bound.
    """
    if prime_bound is None:
        prime_bound = box.a + box.b + box.c
    fac = PrimeFactorization()
    for p in primes_upto(prime_bound - 1):
        v = macmahon_valuation(box, p)
        if v:
            fac[p] = v
    return fac


def binomial_matrix_nk(a: int, b: int, n: int, k: int) -> list[list[int]]:
    """``(C(a+b, a-i+j))`` for rows ``i in 1..n+1`` except ``k``, columns ``1..n``."""
    if a < 0 or b < 0:
        raise ValueError("a and b must be nonnegative")
    if n < 1:
        raise ValueError("n must be at least 1")
    if not 1 <= k <= n + 1:
        raise ValueError(f"k={k} outside [1, {n + 1}]")
    return [
        [binom(a + b, a - i + j) for j in range(1, n + 1)]
        for i in range(1, n + 2)
        if i != k
    ]


def det_nk_closed(a: int, b: int, n: int, k: int) -> int:
    """Closed-form determinant of :func:`binomial_matrix_nk`."""
    if a < 1 or b < 0 or n < 1 or not 1 <= k <= n + 1:
        raise ValueError(f"invalid (a, b, n, k) = {(a, b, n, k)}")
    q = Fraction(1)
    for i in range(1, k):
        q *= Fraction((n + 1 - i) * (b + i), i * (n + a - i))
    for i in range(1, n + 1):
        q *= Fraction(
            factorial(a + b + i - 1) * factorial(i - 1),
            factorial(a - 2 + i) * factorial(b + i),
        )
    return _as_int(q, f"det N_{k}(a={a}, b={b}, n={n})")


def odd_peak_width(params: CIParams) -> int:
    """``m = (alpha+beta-gamma+1)/2`` for the single-peak (odd total) regime."""
    al, be, ga = params
    if (al + be + ga) % 2 == 0:
        raise ValueError(f"{tuple(params)}: alpha+beta+gamma must be odd")
    if ga > al + be - 3:
        raise ValueError(f"{tuple(params)}: need gamma <= alpha+beta-3")
    return (al + be - ga + 1) // 2


def h_of_k(params: CIParams, k: int) -> int:
    """The k-th maximal minor H(k) of the single-peak Lefschetz matrix."""
    al, be, ga = params
    m = odd_peak_width(params)
    if not 1 <= k <= m:
        raise ValueError(f"k={k} outside [1, {m}]")
    lo = (-al + be + ga - 1) // 2
    q = Fraction(1)
    for i in range(1, k):
        q *= Fraction((m - i) * (lo + i), i * (al - i))
    box = BoxDims((al + be - ga - 1) // 2, (al - be + ga - 1) // 2, (-al + be + ga + 1) // 2)
    return _as_int(q * macmahon(box), f"H({k}) for {tuple(params)}")


def f_of_k(d: int, k: int) -> int:
    """H(k) specialised to alpha = beta = gamma = d (d odd)."""
    if d < 3 or d % 2 == 0:
        raise ValueError(f"d={d} must be odd and at least 3")
    if not 1 <= k <= (d + 1) // 2:
        raise ValueError(f"k={k} outside [1, {(d + 1) // 2}]")
    q = Fraction(1)
    for i in range(1, k):
        q *= Fraction(((d + 1) // 2 - i) * ((d - 1) // 2 + i), i * (d - i))
    box = BoxDims((d - 1) // 2, (d - 1) // 2, (d + 1) // 2)
    return _as_int(q * macmahon(box), f"F({k}) for d={d}")
