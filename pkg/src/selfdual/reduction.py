"""t-reduced inner products and Siegel-set membership tests.

A basis ``v_1..v_n`` is t-reduced for a positive definite form when

    (a) |v_i|^2 <= t |v_{i+1}|^2
    (b) 2 |<v_i, v_j>| <= t |v_i|^2          for i < j
    (c) prod |v_i|^2 <= t c1(n) det(<v_i, v_j>)

``c1(n)`` is a Minkowski-type constant supplied by configuration.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, InvariantError
from .exact import Matrix, det, is_positive_definite, rank, to_fraction, vector
from .hodge import WeilOperator
from .lattice import PolarizedLattice

# n-th powers of Hermite's constants where known; overridable
DEFAULT_C1: dict[int, Fraction] = {
    1: Fraction(1),
    2: Fraction(4, 3),
    3: Fraction(2),
    4: Fraction(4),
    5: Fraction(8),
    6: Fraction(64, 3),
    7: Fraction(64),
    8: Fraction(256),
}


@dataclass(frozen=True)
class ReductionParams:
    t: Fraction
    c1: Mapping[int, Fraction] = field(default_factory=lambda: dict(DEFAULT_C1))

    def __post_init__(self):
        object.__setattr__(self, "t", to_fraction(self.t))
        object.__setattr__(self, "c1", {int(k): to_fraction(v) for k, v in self.c1.items()})
        if self.t <= 0:
            raise InvariantError("t_positive", f"t must be positive, got {self.t}")
        for n, c in self.c1.items():
            if c < 1:
                raise InvariantError("c1_at_least_one", f"c1({n}) = {c} < 1")

    @classmethod
    def from_config(cls, t, config: Mapping | None = None) -> "ReductionParams":
        c1 = dict(DEFAULT_C1)
        for k, v in (config or {}).get("minkowski_constants", {}).items():
            c1[int(k)] = to_fraction(v)
        return cls(t, c1)

    def constant(self, n: int) -> Fraction:
        if n not in self.c1:
            raise InvariantError("c1_configured", f"no Minkowski constant configured for n = {n}")
        return self.c1[n]


@dataclass(frozen=True)
class ReductionReport:
    growth: bool  # (a)
    off_diagonal: bool  # (b)
    determinant: bool  # (c)
    failures: tuple[str, ...] = ()

    @property
    def reduced(self) -> bool:
        return self.growth and self.off_diagonal and self.determinant

    def __bool__(self):
        return self.reduced

    def to_json(self) -> dict:
        return {
            "reduced": self.reduced,
            "a": self.growth,
            "b": self.off_diagonal,
            "c": self.determinant,
            "failures": list(self.failures),
        }


def _gram_on(g: Matrix, basis: Sequence[tuple]) -> Matrix:
    return Matrix([[sum((a * b for a, b in zip(v, g @ w)), Fraction(0)) for w in basis] for v in basis])


def _check_basis(g: Matrix, basis: Sequence[Sequence]) -> list[tuple]:
    basis = [vector(v) for v in basis]
    if any(len(v) != g.nrows for v in basis):
        raise DimensionError("basis vectors do not match the form")
    if basis and rank(Matrix(basis)) != len(basis):
        raise InvariantError("independent_basis", "basis vectors are linearly dependent")
    return basis


def is_t_reduced(g: Matrix, basis: Sequence[Sequence], params: ReductionParams) -> ReductionReport:
    if not is_positive_definite(g):
        raise InvariantError("positive_definite", "the inner product is not positive definite")
    basis = _check_basis(g, basis)
    n, t = len(basis), params.t
    c1 = params.constant(n)
    h = _gram_on(g, basis)
    norms = [h.rows[i][i] for i in range(n)]
    failures = []
    growth = True
    for i in range(n - 1):
        if norms[i] > t * norms[i + 1]:
            growth = False
            failures.append(f"(a) |v_{i + 1}|^2 = {norms[i]} > t |v_{i + 2}|^2 = {t * norms[i + 1]}")
    off = True
    for i in range(n):
        for j in range(i + 1, n):
            if 2 * abs(h.rows[i][j]) > t * norms[i]:
                off = False
                failures.append(f"(b) 2|<v_{i + 1}, v_{j + 1}>| = {2 * abs(h.rows[i][j])} > {t * norms[i]}")
    prod = Fraction(1)
    for x in norms:
        prod *= x
    bound = t * c1 * det(h)
    determinant = prod <= bound
    if not determinant:
        failures.append(f"(c) product of norms {prod} > t c1(n) det = {bound}")
    return ReductionReport(growth, off, determinant, tuple(failures))


def siegel_membership(
    lattice: PolarizedLattice, basis: Sequence[Sequence], params: ReductionParams, c_g: WeilOperator
) -> ReductionReport:
    """Is ``(v, w) -> Q(v, C_g w)`` t-reduced on ``basis``?

    ``C_g`` is the already conjugated operator ``g C g^-1``.
    """
    if not c_g.even:
        raise InvariantError("even_weight", "Q(., C .) is an inner product only in even weight")
    return is_t_reduced(lattice.gram @ c_g.matrix, basis, params)


def insert_orthogonal_vector(
    g: Matrix, basis: Sequence[Sequence], a: Sequence, params: ReductionParams
) -> int:
    """Smallest index at which ``a`` can join ``basis`` keeping it t-reduced.

    Since ``a`` is orthogonal to the basis, only the chain condition (a) can
    break; for ``t >= 1`` some slot between neighbours always works.
    """
    if params.t < 1:
        raise InvariantError("t_at_least_one", f"insertion needs t >= 1, got {params.t}")
    basis = _check_basis(g, basis)
    a = vector(a)
    if len(a) != g.nrows:
        raise DimensionError("vector does not match the form")
    if not any(a):
        raise InvariantError("nonzero_vector", "cannot insert the zero vector")
    ga = g @ a
    for v in basis:
        if sum((x * y for x, y in zip(v, ga)), Fraction(0)) != 0:
            raise InvariantError("orthogonality", f"{a} is not orthogonal to {v}")
    if not basis:
        return 0
    before = is_t_reduced(g, basis, params)
    if not before:
        raise InvariantError("reduced_basis", "the starting basis is not t-reduced: " + "; ".join(before.failures))
    for i in range(len(basis) + 1):
        if is_t_reduced(g, basis[:i] + [a] + basis[i:], params):
            return i
    raise InvariantError(
        "insertion",
        f"no slot keeps the basis t-reduced; check that c1({len(basis) + 1}) >= c1({len(basis)})",
    )
