"""Independent brute-force oracles shared by the test modules.

None of these call into the package; they recompute each quantity the slow,
obvious way.
"""

from __future__ import annotations

from collections import Counter
from itertools import permutations, product

import pytest

ACCEPTANCE_LINES: list[str] = []


def brute_h_vector(alpha: int, beta: int, gamma: int) -> tuple[int, ...]:
    """Count standard monomials x^a y^b z^c (a < alpha, ...) by degree."""
    counts = Counter(a + b + c for a in range(alpha) for b in range(beta) for c in range(gamma))
    return tuple(counts[d] for d in range(max(counts) + 1))


def brute_plane_partitions(a: int, b: int, c: int) -> int:
    """Check every a x b array with entries in [0, c]; tiny boxes only."""
    total = 0
    for flat in product(range(c + 1), repeat=a * b):
        ok = True
        for i in range(a):
            for j in range(b):
                v = flat[i * b + j]
                if (j + 1 < b and flat[i * b + j + 1] > v) or (i + 1 < a and flat[(i + 1) * b + j] > v):
                    ok = False
                    break
            if not ok:
                break
        total += ok
    return total


def _perm_sign(perm: tuple[int, ...]) -> int:
    sign = 1
    seen = list(perm)
    for i in range(len(seen)):
        while seen[i] != i:
            j = seen[i]
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def leibniz_det(m) -> int:
    """Sum over permutations; use for n <= 7."""
    n = len(m)
    total = 0
    for perm in permutations(range(n)):
        prod = 1
        for i, j in enumerate(perm):
            prod *= m[i][j]
            if not prod:
                break
        total += _perm_sign(perm) * prod
    return total


def brute_rank_mod_p(m, p: int) -> int:
    """Largest r with a nonzero r x r minor mod p (tiny matrices only)."""
    from itertools import combinations

    rows, cols = len(m), len(m[0]) if m else 0
    for r in range(min(rows, cols), 0, -1):
        for ri in combinations(range(rows), r):
            for ci in combinations(range(cols), r):
                if leibniz_det([[m[i][j] for j in ci] for i in ri]) % p:
                    return r
    return 0


def record_criterion(number: int, title: str, passed: bool, detail: str = "") -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title}"
    if detail:
        line += f" ({detail})"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def criterion():
    return record_criterion
