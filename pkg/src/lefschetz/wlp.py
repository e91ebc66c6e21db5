"""Deciding the WLP of K[x,y,z]/(x^alpha, y^beta, z^gamma) in characteristic p.

:func:`wlp_direct` is the ground truth: the rank over F_p of multiplication by
x+y+z into the peak degree.  Everything else here is a prediction that is
checked against it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, NamedTuple

from .colex import lefschetz_matrix
from .exactla import det_fraction_free, omit_row_minor, rank_mod_p, require_prime
from .formulas import (
    BoxDims,
    h_of_k,
    macmahon_valuation,
    odd_peak_width,
    primes_upto,
)
from .hilbert import CIParams, is_trivially_wlp, socle_degree

class ConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


@dataclass(frozen=True)
class WlpVerdict:
    params: CIParams
    characteristic: int
    holds: bool
    method: str
    witness: dict[str, Any] = field(default_factory=dict)

    def to_record(self) -> dict[str, Any]:
        return {
            "alpha": self.params.alpha,
            "beta": self.params.beta,
            "gamma": self.params.gamma,
            "p": self.characteristic,
            "holds": self.holds,
            "method": self.method,
            "witness": self.witness,
        }


def _char_zero(params: CIParams, method: str) -> WlpVerdict:
    return WlpVerdict(params, 0, True, method, {"kind": "char0", "label": "nonzero integer determinant/minor"})


def _trivial(params: CIParams, p: int) -> WlpVerdict:
    return WlpVerdict(params, p, True, "trivial", {"kind": "trivial", "label": "gamma beyond the peak degree"})


def wlp_direct(params: CIParams, p: int) -> WlpVerdict:
    """WLP holds iff x+y+z: A_s -> A_{s+1} is injective over F_p."""
    if p == 0:
        return _char_zero(params, "direct")
    require_prime(p)
    if socle_degree(params) == 0:
        return WlpVerdict(params, p, True, "direct", {"kind": "rank", "rank": 0, "expected": 0})
    mat = lefschetz_matrix(params)
    expected = len(mat.col_basis)
    r = rank_mod_p(mat.entries, p)
    return WlpVerdict(params, p, r == expected, "direct", {"kind": "rank", "rank": r, "expected": expected})


def theorem_box(params: CIParams) -> BoxDims:
    """Box whose plane-partition count is the peak determinant (even total)."""
    al, be, ga = params
    return BoxDims((al + be - ga) // 2, (al - be + ga) // 2, (-al + be + ga) // 2)


def theorem_k_range(params: CIParams) -> range:
    """Minors H(k) that must all vanish mod p: ``k = 1 .. m``.

    H(m+1-k) equals H(k) only when alpha = beta, so half the range is not
    enough in general: for (3,6,6) the two minors are 6 and 15, and the
    algebra has the WLP in characteristic 2.
    """
    m = odd_peak_width(params)
    return range(1, m + 1)


def _minor_name(params: CIParams) -> str:
    return "F" if params.alpha == params.gamma else "H"


def wlp_by_theorem(params: CIParams, p: int) -> WlpVerdict:
    """Predict the WLP from divisibility of M(box) or the H(k) minors by p."""
    if p == 0:
        return _char_zero(params, "theorem")
    require_prime(p)
    if is_trivially_wlp(params):
        return _trivial(params, p)
    if params.total % 2 == 0:
        box = theorem_box(params)
        v = macmahon_valuation(box, p)
        return WlpVerdict(
            params, p, v == 0, "theorem",
            {"kind": "divisor", "quantity": str(box), "valuation": v, "divisible": v > 0,
             "label": f"{p} {'|' if v else 'does not divide'} {box}"},
        )
    name = _minor_name(params)
    for k in theorem_k_range(params):
        value = h_of_k(params, k)
        if value % p:
            return WlpVerdict(
                params, p, True, "theorem",
                {"kind": "divisor", "quantity": f"{name}({k})", "value": value, "divisible": False,
                 "label": f"{name}({k})={value}"},
            )
    ks = theorem_k_range(params)
    values = [h_of_k(params, k) for k in ks]
    label = ", ".join(f"{name}({k})={v}" for k, v in zip(ks, values))
    return WlpVerdict(
        params, p, False, "theorem",
        {"kind": "divisor", "quantity": f"{name}(1..{ks[-1]})", "value": values, "divisible": True,
         "label": label},
    )


def candidate_primes(params: CIParams) -> list[int]:
    return primes_upto(params.total - 1)


def failing_primes(params: CIParams, method: str = "direct") -> set[int]:
    """All primes p for which the WLP fails in characteristic p.

    Only primes below alpha+beta+gamma can divide the relevant determinants.
    """
    if method == "direct":
        decide = wlp_direct
    elif method == "theorem":
        decide = wlp_by_theorem
    else:
        raise ValueError(f"unknown method {method!r}")
    return {p for p in candidate_primes(params) if not decide(params, p).holds}


def prime_powers_in(lo: int, hi: int) -> list[tuple[int, int]]:
    """Prime powers ``p^n`` (n >= 1) in ``[lo, hi]`` as ``(p, n)``, ascending by value."""
    out = []
    for p in primes_upto(hi):
        q, n = p, 1
        while q <= hi:
            if q >= lo:
                out.append((q, p, n))
            q *= p
            n += 1
    return [(p, n) for _, p, n in sorted(out)]


def prime_power_window(params: CIParams) -> list[tuple[int, int]]:
    """Prime powers in ``[gamma, floor((alpha+beta+gamma-3)/2)]``.

    For each such p^n, (x+y+z)^{p^n} = 0 in A while the peak lies at or above
    p^n, so the WLP fails in characteristic p.
    """
    return prime_powers_in(params.gamma, (params.total - 3) // 2)


def box_window(box: BoxDims) -> tuple[int, int]:
    """Interval of prime powers forcing ``p | M(box)``; may be empty (lo > hi)."""
    a, b, c = box.sorted()
    if b == c:
        return 2 * b, a + 2 * b - 2
    return b + c, a + b + c - 1


def box_divisor_window(box: BoxDims) -> set[int]:
    """Primes guaranteed to divide M(a,b,c) by the prime-power window."""
    box = box.sorted()
    if box.a < 1:
        raise ValueError(f"box sides must be positive, got {tuple(box)}")
    lo, hi = box_window(box)
    primes = {p for p, _ in prime_powers_in(lo, hi)}
    for p in primes:
        if macmahon_valuation(box, p) == 0:
            raise ConsistencyError(f"window prime {p} does not divide {box}")
    return primes


def conjecture_set(d_max: int) -> set[int]:
    """``{floor((2^n + 1)/3) : n >= 1}`` intersected with ``[1, d_max]``."""
    out, n = set(), 1
    while (2**n + 1) // 3 <= d_max:
        out.add((2**n + 1) // 3)
        n += 1
    return out


class ConjectureRow(NamedTuple):
    d: int
    holds_in_char2: bool
    predicted: bool
    agrees: bool
    # the remark that every even d has the WLP; None where it says nothing
    even_reading: bool | None
    even_agrees: bool | None


def conjecture_char2_scan(d_max: int) -> list[ConjectureRow]:
    if d_max < 1:
        raise ValueError("d_max must be at least 1")
    predicted = conjecture_set(d_max)
    rows = []
    for d in range(1, d_max + 1):
        holds = wlp_direct(CIParams(d, d, d), 2).holds
        pred = d in predicted
        even = True if d % 2 == 0 else None
        rows.append(ConjectureRow(d, holds, pred, holds == pred, even, None if even is None else holds == even))
    return rows


class Disagreement(NamedTuple):
    params: CIParams
    p: int
    direct: bool
    theorem: bool


def cross_validate(params: CIParams, prime_bound: int) -> list[Disagreement]:
    """Primes ``p <= prime_bound`` where the rank test and the theorem differ."""
    out = []
    for p in primes_upto(prime_bound):
        d = wlp_direct(params, p).holds
        t = wlp_by_theorem(params, p).holds
        if d != t:
            out.append(Disagreement(params, p, d, t))
    return out


def maximal_minors_nonzero(params: CIParams) -> bool:
    """Whether the peak matrix has a nonzero determinant or maximal minor over Z.

    Defined for the square (twin peak) and (n+1) x n (single peak) shapes.
    """
    if socle_degree(params) == 0:
        return True
    mat = lefschetz_matrix(params).entries
    rows, cols = len(mat), len(mat[0])
    if rows == cols:
        return det_fraction_free(mat) != 0
    if rows == cols + 1:
        return any(omit_row_minor(mat, k) for k in range(1, rows + 1))
    raise ValueError(f"{tuple(params)}: peak matrix is {rows}x{cols}, not square or (n+1) x n")
