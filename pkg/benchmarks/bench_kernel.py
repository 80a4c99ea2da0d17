"""Compare the pure-Python and compiled enumeration kernels.

    python benchmarks/bench_kernel.py [--repeat N]

Each case runs the same integer tree search on both backends, checks the
outputs agree, and reports the best wall time of ``--repeat`` runs.
"""

import argparse
import time

from selfdual import _kernel
from selfdual.enumeration import enumerate_norm
from selfdual.exact import Matrix


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _chain(n):
    return [[2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(n)] for i in range(n)]


CASES = [
    ("I4, q=50", _identity(4), 50),
    ("I6, q=12", _identity(6), 12),
    ("A6 chain, q=10", _chain(6), 10),
    ("I8, q=6", _identity(8), 6),
    ("A8 chain, q=8", _chain(8), 8),
    ("I6, q=40", _identity(6), 40),
    ("I5, q=200", _identity(5), 200),
    ("I12, q=6", _identity(12), 6),
]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - start)
    return best, out


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    backends = _kernel.available_backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the python backend is available")
    print(f"{'case':<18}{'count':>8}{'python s':>12}{'compiled s':>12}{'speedup':>9}")
    for name, rows, q in CASES:
        g = Matrix(rows)
        t_py, py = best_time(lambda: enumerate_norm(g, q, backend="python"), args.repeat)
        if "compiled" in backends:
            t_c, ext = best_time(lambda: enumerate_norm(g, q, backend="compiled"), args.repeat)
            assert ext == py, name
            print(f"{name:<18}{len(py):>8}{t_py:>12.4f}{t_c:>12.4f}{t_py / t_c:>8.1f}x")
        else:
            print(f"{name:<18}{len(py):>8}{t_py:>12.4f}{'-':>12}{'-':>9}")


if __name__ == "__main__":
    main()
