"""Exact linear algebra over Q and Q(i): elimination, kernels, LDL."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DimensionError, InvariantError, SelfDualError
from .gauss import Gauss, conj
from .matrix import Matrix, vector


class LinearSystemError(SelfDualError, ArithmeticError):
    pass


class InconsistentSystem(LinearSystemError):
    """``A x = b`` has no solution."""


class UnderdeterminedSystem(LinearSystemError):
    """``A x = b`` has more than one solution."""


def rref(a: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows = [list(r) for r in a.rows]
    nrows, ncols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return Matrix(rows) if rows else a, tuple(pivots)


def rank(a: Matrix) -> int:
    if a.nrows == 0 or a.ncols == 0:
        return 0
    return len(rref(a)[1])


def kernel(a: Matrix) -> list[tuple]:
    """Basis of ``{x : A x = 0}`` read off the RREF (free variables set to unit vectors)."""
    r, pivots = rref(a)
    free = [c for c in range(a.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * a.ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -r.rows[i][f]
        basis.append(tuple(x))
    return basis


def solve_linear(a: Matrix, b: Sequence) -> tuple:
    """Unique solution of ``A x = b``.

    Raises InconsistentSystem or UnderdeterminedSystem instead of guessing.
    """
    if a.nrows != len(b):
        raise DimensionError(f"{a.nrows} equations but right-hand side of length {len(b)}")
    aug = Matrix([list(row) + [bi] for row, bi in zip(a.rows, vector(b))])
    r, pivots = rref(aug)
    if a.ncols in pivots:
        raise InconsistentSystem("no solution")
    if len(pivots) < a.ncols:
        raise UnderdeterminedSystem("solution is not unique")
    return tuple(r.rows[i][a.ncols] for i in range(a.ncols))


def inverse(a: Matrix) -> Matrix:
    if not a.is_square():
        raise DimensionError("only square matrices are invertible")
    n = a.nrows
    eye = Matrix.identity(n)
    aug = Matrix([list(a.rows[i]) + list(eye.rows[i]) for i in range(n)])
    r, pivots = rref(aug)
    if pivots[:n] != tuple(range(n)):
        raise InconsistentSystem("matrix is singular")
    return Matrix([row[n:] for row in r.rows])


def det(a: Matrix):
    if not a.is_square():
        raise DimensionError("determinant of a non-square matrix")
    rows = [list(r) for r in a.rows]
    n = a.nrows
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] / piv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return result


def ldl(g: Matrix, hermitian: bool = False) -> tuple[Matrix, tuple]:
    """Exact ``G = L D L^*`` without pivoting, for positive definite ``G``.

    Returns the unit lower triangular ``L`` and the diagonal of ``D``. Every
    pivot is checked to be a positive rational; otherwise InvariantError
    ("positive_definite") names the failing step.
    """
    if not g.is_square():
        raise DimensionError("LDL needs a square matrix")
    n = g.nrows
    star = conj if hermitian else (lambda z: z)
    if g != g.T.map(star):
        raise InvariantError("positive_definite", "matrix is not " + ("hermitian" if hermitian else "symmetric"))
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    d: list = []
    for j in range(n):
        acc = g.rows[j][j]
        for k in range(j):
            acc = acc - lower[j][k] * star(lower[j][k]) * d[k]
        if isinstance(acc, Gauss):
            if acc.im != 0:
                raise InvariantError("positive_definite", f"non-real pivot at step {j}")
            acc = acc.re
        if acc <= 0:
            raise InvariantError("positive_definite", f"pivot {acc} <= 0 at step {j}")
        d.append(acc)
        for i in range(j + 1, n):
            acc = g.rows[i][j]
            for k in range(j):
                acc = acc - lower[i][k] * star(lower[j][k]) * d[k]
            lower[i][j] = acc / d[j]
    return Matrix(lower), tuple(d)


def is_positive_definite(g: Matrix, hermitian: bool = False) -> bool:
    try:
        ldl(g, hermitian=hermitian)
    except InvariantError:
        return False
    return True


# subspaces ---------------------------------------------------------------
# A subspace is represented by a list of spanning column vectors.


def span_basis(vectors: Sequence[Sequence]) -> list[tuple]:
    """Basis of ``span(vectors)``, returned as the nonzero RREF rows."""
    if not vectors:
        return []
    r, pivots = rref(Matrix(vectors))
    return [r.rows[i] for i in range(len(pivots))]


def span_dim(vectors: Sequence[Sequence]) -> int:
    return len(span_basis(vectors)) if vectors else 0


def in_span(vectors: Sequence[Sequence], v: Sequence) -> bool:
    if not any(v):
        return True
    if not vectors:
        return False
    return span_dim(list(vectors) + [v]) == span_dim(vectors)


def contains(big: Sequence[Sequence], small: Sequence[Sequence]) -> bool:
    """``span(small)`` is a subspace of ``span(big)``."""
    if not small:
        return True
    return span_dim(list(big) + list(small)) == span_dim(big)


def same_span(u: Sequence[Sequence], v: Sequence[Sequence]) -> bool:
    return contains(u, v) and contains(v, u)


def intersect(u: Sequence[Sequence], v: Sequence[Sequence]) -> list[tuple]:
    """Basis of ``span(u) ∩ span(v)``."""
    u = span_basis(u)
    v = span_basis(v)
    if not u or not v:
        return []
    cols = [tuple(x) for x in u] + [tuple(-y for y in x) for x in v]
    system = Matrix.from_columns(cols)
    out = []
    for coeffs in kernel(system):
        w = [Fraction(0)] * len(u[0])
        for c, vec in zip(coeffs[: len(u)], u):
            if c:
                w = [a + c * b for a, b in zip(w, vec)]
        out.append(tuple(w))
    return span_basis(out)
