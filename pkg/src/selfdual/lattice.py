"""Polarized integral lattices ``(H_Z, Q)``."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, InvariantError
from .exact import Matrix, det, dot, vector


@dataclass(frozen=True)
class Signature:
    positive_count: int
    negative_count: int

    def __iter__(self):
        return iter((self.positive_count, self.negative_count))


@dataclass(frozen=True)
class PolarizedLattice:
    """Free lattice ``Z^n`` with an integral pairing of the declared parity.

    Even weight requires a symmetric Gram matrix, odd weight an
    antisymmetric one. Degenerate pairings are rejected here, once.
    """

    gram: Matrix
    weight: int

    def __post_init__(self):
        g = self.gram if isinstance(self.gram, Matrix) else Matrix(self.gram)
        object.__setattr__(self, "gram", g)
        if not g.is_square() or g.nrows == 0:
            raise DimensionError("gram matrix must be square and non-empty")
        if not g.is_integral():
            raise InvariantError("integral_gram", "gram matrix has non-integer entries")
        if self.weight % 2 == 0 and not g.is_symmetric():
            raise InvariantError("gram_symmetry", "even weight requires a symmetric gram matrix")
        if self.weight % 2 == 1 and not g.is_antisymmetric():
            raise InvariantError("gram_symmetry", "odd weight requires an antisymmetric gram matrix")
        if det(g) == 0:
            raise InvariantError("nondegenerate", "gram matrix is singular")

    @property
    def rank(self) -> int:
        return self.gram.nrows

    @property
    def even(self) -> bool:
        return self.weight % 2 == 0

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "weight": self.weight,
            "gram": [[int(a) for a in row] for row in self.gram.rows],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolarizedLattice":
        gram = Matrix(data["gram"])
        if "rank" in data and data["rank"] != gram.nrows:
            raise DimensionError(f"declared rank {data['rank']} but gram is {gram.nrows}x{gram.ncols}")
        return cls(gram, int(data["weight"]))


def pair(lattice: PolarizedLattice, v: Sequence, w: Sequence):
    """``Q(v, w) = v^T G w``; works for Gaussian-rational vectors too."""
    n = lattice.rank
    if len(v) != n or len(w) != n:
        raise DimensionError(f"vectors must have length {n}")
    return dot(vector(v), lattice.gram @ vector(w))


def signature(lattice_or_gram) -> Signature:
    """Inertia of a nondegenerate symmetric form by congruence diagonalization."""
    g = lattice_or_gram.gram if isinstance(lattice_or_gram, PolarizedLattice) else lattice_or_gram
    if isinstance(lattice_or_gram, PolarizedLattice) and not lattice_or_gram.even:
        raise InvariantError("gram_symmetry", "signature needs an even-weight (symmetric) form")
    if not g.is_symmetric():
        raise InvariantError("gram_symmetry", "signature needs a symmetric matrix")
    a = [list(r) for r in g.rows]
    pos = neg = 0
    while a:
        m = len(a)
        k = next((i for i in range(m) if a[i][i]), None)
        if k is None:
            j = next(((i, j) for i in range(m) for j in range(m) if a[i][j]), None)
            if j is None:
                raise InvariantError("nondegenerate", "degenerate symmetric form")
            i, j = j
            # row/col i += row/col j turns the zero diagonal into 2 a_ij
            for c in range(m):
                a[i][c] += a[j][c]
            for r in range(m):
                a[r][i] += a[r][j]
            k = i
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(m) if r != k]
        a = [[a[r][c] - a[r][k] * a[k][c] / p for c in rest] for r in rest]
    return Signature(pos, neg)


def is_isometry(lattice: PolarizedLattice, g: Matrix) -> bool:
    """``g^T G g == G``."""
    if not isinstance(g, Matrix):
        g = Matrix(g)
    if g.shape != lattice.gram.shape:
        return False
    return g.T @ lattice.gram @ g == lattice.gram


def hyperbolic_plane() -> PolarizedLattice:
    return PolarizedLattice(Matrix([[0, 1], [1, 0]]), 0)


def identity_lattice(n: int, weight: int = 0) -> PolarizedLattice:
    return PolarizedLattice(Matrix.identity(n), weight)


def diagonal_lattice(entries: Sequence[int], weight: int = 0) -> PolarizedLattice:
    return PolarizedLattice(Matrix.diag([Fraction(e) for e in entries]), weight)
