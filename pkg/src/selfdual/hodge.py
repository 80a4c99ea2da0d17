"""Hodge decompositions over Q(i) and their Weil operators.

For a polarized Hodge structure the Weil operator acts as ``i**(p-q)`` on
``H^{p,q}``. It is real, and because every input lives over Q(i) it is in
fact a rational matrix, so all predicates below are exact equalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, InvariantError, NonRationalError
from .exact import (
    Gauss,
    Matrix,
    dot,
    i_power,
    intersect,
    inverse,
    is_positive_definite,
    rank,
    same_span,
    span_basis,
    to_fraction,
    vconj,
    vector,
)
from .exact.linalg import InconsistentSystem
from .lattice import PolarizedLattice, is_isometry, pair


def parse_scalar(value):
    """JSON scalar -> exact number. Floats and symbolic strings are rejected."""
    if isinstance(value, float):
        raise NonRationalError(f"floating-point value {value!r} is not exact")
    if isinstance(value, Gauss):
        return value
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise NonRationalError(f"Gaussian rational must be [re, im], got {value!r}")
        return Gauss(parse_scalar(value[0]), parse_scalar(value[1]))
    try:
        return to_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise NonRationalError(f"{value!r} is not in Q(i)") from exc


def parse_gauss_vector(values) -> tuple:
    return tuple(Gauss.coerce(parse_scalar(v)) for v in values)


@dataclass(frozen=True)
class HodgePiece:
    p: int
    q: int
    basis: tuple

    def __post_init__(self):
        object.__setattr__(self, "basis", tuple(tuple(Gauss.coerce(a) for a in v) for v in self.basis))


@dataclass(frozen=True)
class HodgeDecomposition:
    weight: int
    pieces: tuple

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @classmethod
    def from_json(cls, data: Mapping) -> "HodgeDecomposition":
        pieces = tuple(
            HodgePiece(int(pc["p"]), int(pc["q"]), tuple(parse_gauss_vector(v) for v in pc["basis"]))
            for pc in data["pieces"]
        )
        return cls(int(data["weight"]), pieces)

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "pieces": [
                {"p": pc.p, "q": pc.q, "basis": [[a.to_json() for a in v] for v in pc.basis]}
                for pc in self.pieces
            ],
        }

    def piece(self, p: int) -> HodgePiece | None:
        return next((pc for pc in self.pieces if pc.p == p), None)

    def hodge_numbers(self) -> dict[tuple[int, int], int]:
        return {(pc.p, pc.q): len(pc.basis) for pc in self.pieces}


@dataclass(frozen=True)
class WeilOperator:
    """Rational matrix ``C`` with ``C^2 = (-1)^weight``.

    ``positivity_sign`` is +1 in even weight. In odd weight it is the global
    sign ``s`` for which ``s * i^(p-q) Q(u, conj u) > 0`` on every piece; it
    is detected, not assumed, and reported so it can be audited.
    """

    matrix: Matrix
    weight: int
    positivity_sign: int = 1

    @property
    def even(self) -> bool:
        return self.weight % 2 == 0

    @property
    def weight_parity(self) -> str:
        return "even" if self.even else "odd"

    @property
    def size(self) -> int:
        return self.matrix.nrows

    def __matmul__(self, v):
        return self.matrix @ v

    def to_json(self) -> dict:
        out = {"weil": self.matrix.to_json(), "weight": self.weight}
        if not self.even:
            out["positivity_sign"] = self.positivity_sign
        return out


@dataclass(frozen=True)
class HodgeNormForm:
    gram_c: Matrix

    def norm(self, v) -> Fraction:
        return dot(vector(v), self.gram_c @ vector(v))

    def inner(self, v, w) -> Fraction:
        return dot(vector(v), self.gram_c @ vector(w))


# validation ----------------------------------------------------------------


def _hermitian_piece_form(lattice: PolarizedLattice, piece: HodgePiece) -> Matrix:
    factor = i_power(piece.p - piece.q)
    return Matrix(
        [[factor * pair(lattice, u, vconj(w)) for w in piece.basis] for u in piece.basis]
    )


def validate_decomposition(lattice: PolarizedLattice, hodge: HodgeDecomposition) -> int:
    """Check every structural invariant of ``hodge`` against ``lattice``.

    Returns the positivity sign (+1 in even weight). Raises InvariantError
    naming the first invariant that fails.
    """
    n = lattice.rank
    if hodge.weight != lattice.weight:
        raise InvariantError("weight", f"decomposition has weight {hodge.weight}, lattice {lattice.weight}")
    seen = set()
    vectors = []
    for pc in hodge.pieces:
        if pc.p + pc.q != hodge.weight:
            raise InvariantError("hodge_type", f"p + q = {pc.p + pc.q} != weight", f"H^{pc.p},{pc.q}")
        if pc.p in seen:
            raise InvariantError("hodge_type", "piece listed twice", f"H^{pc.p},{pc.q}")
        seen.add(pc.p)
        for v in pc.basis:
            if len(v) != n:
                raise DimensionError(f"basis vector of length {len(v)} in rank {n} lattice")
        if len(span_basis(pc.basis)) != len(pc.basis):
            raise InvariantError("direct_sum", "basis vectors are dependent", f"H^{pc.p},{pc.q}")
        vectors.extend(pc.basis)
    if len(vectors) != n or rank(Matrix.from_columns(vectors)) != n:
        raise InvariantError("direct_sum", f"pieces do not form a direct sum decomposition of C^{n}")

    for pc in hodge.pieces:
        other = hodge.piece(pc.q)
        if other is None or len(other.basis) != len(pc.basis):
            raise InvariantError("conjugation_symmetry", "missing or mismatched conjugate piece", f"H^{pc.q},{pc.p}")
        if not same_span([vconj(v) for v in pc.basis], other.basis):
            raise InvariantError("conjugation_symmetry", "conjugate of piece is not the mirror piece", f"H^{pc.p},{pc.q}")

    for a in hodge.pieces:
        for b in hodge.pieces:
            if a.p + b.p == hodge.weight:
                continue
            for u in a.basis:
                for w in b.basis:
                    if pair(lattice, u, w) != 0:
                        raise InvariantError(
                            "riemann_orthogonality",
                            "Q does not vanish between pieces",
                            f"H^{a.p},{a.q} x H^{b.p},{b.q}",
                        )

    signs = []
    for pc in hodge.pieces:
        h = _hermitian_piece_form(lattice, pc)
        if is_positive_definite(h, hermitian=True):
            signs.append(1)
        elif is_positive_definite(-h, hermitian=True):
            signs.append(-1)
        else:
            raise InvariantError("riemann_positivity", "hermitian form is indefinite", f"H^{pc.p},{pc.q}")
    if hodge.weight % 2 == 0:
        if any(s != 1 for s in signs):
            raise InvariantError("riemann_positivity", "i^(p-q) Q(u, conj u) is not positive")
        return 1
    # odd weight: one global sign, read from the (k, k-1) piece
    k = (hodge.weight + 1) // 2
    ref = next((s for pc, s in zip(hodge.pieces, signs) if pc.p == k), signs[0])
    if any(s != ref for s in signs):
        raise InvariantError("riemann_positivity", "positivity sign differs between pieces")
    return ref


def validate_weil_matrix(lattice: PolarizedLattice, c: Matrix, positivity_sign: int | None = None) -> WeilOperator:
    """Validate a directly supplied Weil operator and wrap it."""
    if not isinstance(c, Matrix):
        c = Matrix(c)
    if c.shape != lattice.gram.shape:
        raise DimensionError(f"Weil operator of shape {c.shape} for rank {lattice.rank} lattice")
    if not c.is_real():
        raise NonRationalError("Weil operator has non-real entries")
    c = c.real_part()
    eps = 1 if lattice.even else -1
    if c @ c != eps * Matrix.identity(lattice.rank):
        raise InvariantError("weil_square", f"C^2 != {'+' if eps > 0 else '-'}identity")
    if not is_isometry(lattice, c):
        raise InvariantError("weil_isometry", "C does not preserve Q")
    form = lattice.gram @ c
    if not form.is_symmetric():
        raise InvariantError("weil_positivity", "Q(v, Cw) is not symmetric")
    if lattice.even:
        if not is_positive_definite(form):
            raise InvariantError("weil_positivity", "Q(v, Cv) is not positive definite")
        return WeilOperator(c, lattice.weight, 1)
    # odd weight: Q(v, Cv) = -2 i^(p-q) Q(u, conj u) for v = u + conj u
    candidates = (positivity_sign,) if positivity_sign else (1, -1)
    for s in candidates:
        if is_positive_definite(-s * form):
            return WeilOperator(c, lattice.weight, s)
    raise InvariantError("weil_positivity", "Q(v, Cv) is not definite")


def weil_operator(lattice: PolarizedLattice, hodge: HodgeDecomposition) -> WeilOperator:
    """Assemble ``C = P diag(i^(p-q)) P^-1`` from the decomposition and validate it."""
    sign = validate_decomposition(lattice, hodge)
    cols, eigen = [], []
    for pc in hodge.pieces:
        for v in pc.basis:
            cols.append(v)
            eigen.append(i_power(pc.p - pc.q))
    p_mat = Matrix.from_columns(cols)
    try:
        p_inv = inverse(p_mat)
    except InconsistentSystem as exc:
        raise InvariantError("direct_sum", "pieces do not span") from exc
    c = p_mat @ Matrix.diag(eigen) @ p_inv
    if not c.is_real():
        raise NonRationalError("Weil operator has nonzero imaginary part; decomposition is not conjugation-symmetric")
    return validate_weil_matrix(lattice, c.real_part(), positivity_sign=sign)


def hodge_norm_form(lattice: PolarizedLattice, c: WeilOperator) -> HodgeNormForm:
    """Gram matrix of ``<v, w> = Q(v, Cw)``, certified positive definite."""
    if not lattice.even:
        raise InvariantError("even_weight", "the Hodge norm form is only built in even weight")
    form = lattice.gram @ c.matrix
    if not form.is_symmetric() or not is_positive_definite(form):
        raise InvariantError("weil_positivity", "C is not a Weil operator for Q")
    return HodgeNormForm(form)


def split_selfdual(c: WeilOperator, v: Sequence) -> tuple[tuple, tuple]:
    """``v = v_plus + v_minus`` with ``C v_plus = v_plus`` and ``C v_minus = -v_minus``."""
    if not c.even:
        raise InvariantError("even_weight", "self-dual splitting needs C^2 = identity")
    v = vector(v)
    cv = c.matrix @ v
    half = Fraction(1, 2)
    return (
        tuple((a + b) * half for a, b in zip(v, cv)),
        tuple((a - b) * half for a, b in zip(v, cv)),
    )


def conjugate_weil(lattice: PolarizedLattice, c: WeilOperator, g: Matrix) -> WeilOperator:
    """``g C g^-1`` for an isometry ``g``, revalidated."""
    if not isinstance(g, Matrix):
        g = Matrix(g)
    if not is_isometry(lattice, g):
        raise InvariantError("isometry", "g does not preserve Q")
    return validate_weil_matrix(lattice, g @ c.matrix @ inverse(g), positivity_sign=c.positivity_sign or None)


def decomposition_from_filtration(filtration: Mapping[int, Sequence], weight: int, n: int) -> HodgeDecomposition:
    """``H^{p,q} = F^p ∩ conj(F^q)`` for a complete filtration given by bases per level.

    Levels above the largest key are zero; levels below the smallest are C^n.
    """
    levels = sorted(filtration)
    if levels and levels != list(range(levels[0], levels[-1] + 1)):
        raise InvariantError("filtration", f"levels {levels} are not contiguous")
    full = [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]

    def f(p):
        if not levels or p < levels[0]:
            return full
        if p > levels[-1]:
            return []
        return list(filtration[p])

    lo = min([0] + levels) if levels else 0
    hi = max([weight] + levels) if levels else weight
    pieces = []
    for p in range(lo, hi + 1):
        q = weight - p
        basis = intersect(f(p), [vconj(v) for v in f(q)]) if f(p) and f(q) else []
        if basis:
            pieces.append(HodgePiece(p, q, tuple(basis)))
    return HodgeDecomposition(weight, tuple(pieces))


def load_weil(lattice: PolarizedLattice, data: Mapping) -> WeilOperator:
    """Either ``{"weil": [[...]]}`` or a Hodge decomposition ``{"weight", "pieces"}``."""
    if "weil" in data:
        return validate_weil_matrix(lattice, Matrix([[parse_scalar(a) for a in row] for row in data["weil"]]))
    return weil_operator(lattice, HodgeDecomposition.from_json(data))
