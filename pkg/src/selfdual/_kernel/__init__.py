"""Backend selection for the enumeration kernel.

The compiled extension is used when it imported and the instance fits in
64-bit arithmetic; everything else runs on the pure-Python search, which
uses unbounded integers. ``SELFDUAL_KERNEL=python`` forces the fallback.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Sequence

from . import fp_py

try:
    from . import _fp_ext
except ImportError:  # extension not built
    _fp_ext = None

_INT64_SAFE = 1 << 62


def available_backends() -> list[str]:
    return ["python"] + (["compiled"] if _fp_ext is not None else [])


def default_backend() -> str:
    requested = os.environ.get("SELFDUAL_KERNEL", "auto").lower()
    if requested == "python" or _fp_ext is None:
        return "python"
    return "compiled"


def fits_int64(w, b, a, budget: int, coord_bounds: Sequence[int]) -> bool:
    """Conservative check that the compiled search cannot overflow."""
    if budget >= _INT64_SAFE:
        return False
    n = len(w)
    for k in range(n):
        shift = sum(abs(a[j][k]) * coord_bounds[j] for j in range(k + 1, n))
        if shift + b[k] * (coord_bounds[k] + 1) + budget >= _INT64_SAFE:
            return False
    return True


def run_search(
    w: Sequence[int],
    b: Sequence[int],
    a: Sequence[Sequence[int]],
    budget: int,
    zero_mask: Sequence[bool],
    coord_bounds: Sequence[int],
    backend: str | None = None,
    threads: int = 1,
) -> tuple[list[tuple[int, ...]], str]:
    """Run the tree search; returns (solutions, backend actually used).

    With ``threads > 1`` the admissible range of the last coordinate is cut
    into contiguous slices searched concurrently; results are concatenated
    and the caller sorts, so the output never depends on the schedule.
    """
    backend = backend or default_backend()
    if backend == "compiled" and (_fp_ext is None or not fits_int64(w, b, a, budget, coord_bounds)):
        backend = "python"
    impl = _fp_ext.enumerate_levels if backend == "compiled" else fp_py.enumerate_levels
    if threads <= 1 or not w:
        return impl(w, b, a, budget, zero_mask), backend
    lo, hi = fp_py.top_range(w, b, budget)
    if zero_mask[-1]:
        lo, hi = max(lo, 0), min(hi, 0)
    if hi < lo:
        return [], backend
    count = hi - lo + 1
    parts = min(threads, count)
    step = -(-count // parts)
    slices = [(s, min(s + step - 1, hi)) for s in range(lo, hi + 1, step)]
    with ThreadPoolExecutor(max_workers=parts) as pool:
        chunks = list(pool.map(lambda t: impl(w, b, a, budget, zero_mask, t), slices))
    return [v for chunk in chunks for v in chunk], backend
