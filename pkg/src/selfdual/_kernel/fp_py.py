"""Pure-Python integer tree search (reference backend).

The quadratic form has already been brought into the integer shape

    F(v) = sum_k w[k] * (b[k] * v[k] + sum_{j>k} a[j][k] * v[j]) ** 2

with positive integers ``w``, ``b`` (see ``enumeration._integer_levels``).
The search lists every integer ``v`` with ``F(v) == budget`` exactly.
"""

from __future__ import annotations

from math import isqrt
from typing import Sequence


def enumerate_levels(
    w: Sequence[int],
    b: Sequence[int],
    a: Sequence[Sequence[int]],
    budget: int,
    zero_mask: Sequence[bool],
    top: tuple[int, int] | None = None,
) -> list[tuple[int, ...]]:
    n = len(w)
    out: list[tuple[int, ...]] = []
    v = [0] * n

    def descend(k: int, remaining: int) -> None:
        shift = 0
        for j in range(k + 1, n):
            if v[j]:
                shift += a[j][k] * v[j]
        bound = isqrt(remaining // w[k])
        lo = -((bound + shift) // b[k])
        hi = (bound - shift) // b[k]
        if zero_mask[k]:
            lo, hi = max(lo, 0), min(hi, 0)
        if top is not None and k == n - 1:
            lo, hi = max(lo, top[0]), min(hi, top[1])
        bk, wk = b[k], w[k]
        for x in range(lo, hi + 1):
            m = bk * x + shift
            rest = remaining - wk * m * m
            v[k] = x
            if k == 0:
                if rest == 0:
                    out.append(tuple(v))
            else:
                descend(k - 1, rest)
        v[k] = 0

    if n:
        descend(n - 1, budget)
    return out


def top_range(w, b, budget) -> tuple[int, int]:
    """Admissible values of the last coordinate, used to split work."""
    bound = isqrt(budget // w[-1])
    return -(bound // b[-1]), bound // b[-1]
