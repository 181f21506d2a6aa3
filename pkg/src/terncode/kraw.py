"""Exact integer evaluation of Krawtchouk and Lloyd polynomials.

K_t^h(x, m) = sum_{j=0}^{t} (-1)^j (h-1)^(t-j) C(x, j) C(m-x, t-j)
Psi_k^h(x, m) = sum_{t=0}^{k} K_t^h(x, m)

Only h = 3 is exercised by the rest of the package, but the general
definition is kept.  Everything is plain Python integers, so there is no
overflow to worry about; the numpy-facing callers bound-check separately.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return comb(n, k)


def _check_point(t: int, x: int, m: int) -> None:
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    if not 0 <= t <= m:
        raise ValueError(f"degree t={t} outside [0, m={m}]")
    if not 0 <= x <= m:
        raise ValueError(f"evaluation point x={x} outside [0, m={m}]")


@lru_cache(maxsize=None)
def krawtchouk(t: int, x: int, m: int, h: int = 3) -> int:
    _check_point(t, x, m)
    return sum(
        (-1) ** j * (h - 1) ** (t - j) * binomial(x, j) * binomial(m - x, t - j)
        for j in range(t + 1)
    )


def lloyd(k: int, x: int, m: int, h: int = 3) -> int:
    _check_point(k, x, m)
    return sum(krawtchouk(t, x, m, h) for t in range(k + 1))
