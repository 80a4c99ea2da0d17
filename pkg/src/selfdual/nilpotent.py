"""One-parameter nilpotent orbits ``z -> e^{zN} F`` and their self-dual loci.

Conventions: ``[Y, N] = -2N``, so ``N`` lowers the ``Y``-weight by two and
``W_0(N)`` is the sum of the non-positive ``Y``-eigenspaces. ``sqrt(y)`` is
carried as the symbol ``s``; the operator ``e^{-1/2 log y Y}`` acts as
``s^-l`` on the eigenspace ``E_l``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DimensionError, InvariantError, NotNilpotentError
from .exact import (
    I,
    LaurentBivar,
    Matrix,
    contains,
    intersect,
    kernel,
    matrix_exp_nilpotent,
    nilpotency_index,
    same_span,
    span_basis,
    to_fraction,
    vector,
)
from .hodge import (
    HodgeDecomposition,
    WeilOperator,
    decomposition_from_filtration,
    parse_gauss_vector,
    parse_scalar,
    weil_operator,
)
from .lattice import PolarizedLattice, pair

BRACKET_CONVENTION = "[Y,N] = -2N: N maps E_l(Y) to E_(l-2)(Y)"


@dataclass(frozen=True)
class SL2Operators:
    """``N`` and ``Y`` with the bracket and spectrum checked; no Hodge data."""

    n_mat: Matrix
    y_mat: Matrix
    eigenvalues: tuple[int, ...]
    projectors: Mapping[int, Matrix] = field(repr=False)

    @property
    def size(self) -> int:
        return self.n_mat.nrows


@dataclass(frozen=True)
class SL2OrbitData:
    lattice: PolarizedLattice
    ops: SL2Operators
    filtration: Mapping[int, tuple]
    filtration_sharp: Mapping[int, tuple]
    hodge_sharp: HodgeDecomposition
    c_sharp: WeilOperator
    notes: tuple[str, ...] = (BRACKET_CONVENTION,)

    @property
    def n_mat(self) -> Matrix:
        return self.ops.n_mat

    @property
    def y_mat(self) -> Matrix:
        return self.ops.y_mat

    @property
    def size(self) -> int:
        return self.ops.size


@dataclass(frozen=True)
class LocusComponent:
    """Unbounded part of ``{z : v self-dual at z}`` for one integral ``v``."""

    tag: str  # "empty" | "full_disk" | "ray"
    ray_x: Fraction | None = None
    note: str | None = None

    EMPTY = "empty"
    FULL_DISK = "full_disk"
    RAY = "ray"

    def __post_init__(self):
        if self.tag not in (self.EMPTY, self.FULL_DISK, self.RAY):
            raise ValueError(f"unknown locus tag {self.tag!r}")
        if (self.tag == self.RAY) != (self.ray_x is not None):
            raise ValueError("ray_x is present exactly for rays")

    def predicts(self, x) -> bool:
        """Verdict this component gives for a point with real part ``x``."""
        if self.tag == self.FULL_DISK:
            return True
        if self.tag == self.RAY:
            return to_fraction(x) == self.ray_x
        return False

    def to_json(self) -> dict:
        out = {"component": self.tag}
        if self.ray_x is not None:
            out["x"] = self.ray_x
        return out


# operators ------------------------------------------------------------------


def _as_matrix(m) -> Matrix:
    if isinstance(m, Matrix):
        return m
    return Matrix([[parse_scalar(a) for a in row] for row in m])


def _integer_spectrum(y: Matrix) -> tuple[int, ...]:
    """Distinct integer eigenvalues of ``y``; raises unless ``y`` is diagonalizable over Z."""
    n = y.nrows
    # every eigenvalue lies in a Gershgorin disc
    radius = max(sum(abs(a) for a in row) for row in y.rows)
    found, total = [], 0
    for ell in range(-int(radius) - 1, int(radius) + 2):
        dim = len(kernel(y - Matrix.identity(n) * ell))
        if dim:
            found.append(ell)
            total += dim
    if total != n:
        raise InvariantError("y_semisimple", "Y is not semisimple with integer eigenvalues")
    return tuple(found)


def _projectors(y: Matrix, spectrum: Sequence[int]) -> dict[int, Matrix]:
    n = y.nrows
    out = {}
    for ell in spectrum:
        p = Matrix.identity(n)
        for m in spectrum:
            if m != ell:
                p = p @ ((y - Matrix.identity(n) * m) * Fraction(1, ell - m))
        out[ell] = p
    return out


def sl2_operators(n_mat, y_mat) -> SL2Operators:
    """Check nilpotency, ``[Y, N] = -2N`` and the integer spectrum of ``Y``."""
    n_mat, y_mat = _as_matrix(n_mat), _as_matrix(y_mat)
    if not n_mat.is_square() or n_mat.shape != y_mat.shape:
        raise DimensionError("N and Y must be square of the same size")
    if not n_mat.is_real() or not y_mat.is_real():
        raise InvariantError("rational", "N and Y must be rational")
    try:
        nilpotency_index(n_mat)
    except NotNilpotentError:
        raise NotNilpotentError("N is not nilpotent") from None
    bracket = y_mat.commutator(n_mat)
    if bracket != n_mat * -2:
        msg = "[Y,N] != -2N"
        if not n_mat.is_zero() and bracket == n_mat * 2:
            msg += " (data uses [Y,N] = +2N; replace Y by -Y)"
        raise InvariantError("sl2_bracket", msg)
    spectrum = _integer_spectrum(y_mat)
    return SL2Operators(n_mat, y_mat, spectrum, _projectors(y_mat, spectrum))


def _ops(data) -> SL2Operators:
    return data.ops if isinstance(data, SL2OrbitData) else data


def _filtration_dict(filtration: Mapping, n: int) -> dict[int, tuple]:
    out = {}
    for p, basis in filtration.items():
        vecs = tuple(parse_gauss_vector(v) for v in basis)
        if any(len(v) != n for v in vecs):
            raise DimensionError(f"F^{p} has vectors of the wrong length")
        out[int(p)] = vecs
    return out


def _level(filtration: Mapping[int, tuple], p: int, n: int) -> list:
    levels = sorted(filtration)
    if not levels or p < levels[0]:
        return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]
    if p > levels[-1]:
        return []
    return list(filtration[p])


def validate_sl2(lattice: PolarizedLattice, n_mat, y_mat, filtration: Mapping) -> SL2OrbitData:
    """Check every hypothesis on ``(N, Y, F)`` and derive ``F#`` and ``C#``.

    ``Y`` must be an infinitesimal isometry like ``N``, which is what makes
    ``e^{-1/2 log y Y}`` a real isometry of ``Q``.
    """
    if not lattice.even:
        raise InvariantError("even_weight", "nilpotent orbits are handled in even weight")
    ops = sl2_operators(n_mat, y_mat)
    n = lattice.rank
    if ops.size != n:
        raise DimensionError("N, Y and the lattice have different sizes")
    g = lattice.gram
    if not (ops.n_mat.T @ g + g @ ops.n_mat).is_zero():
        raise InvariantError("n_isometry", "Q(Nv,w) + Q(v,Nw) != 0")
    if not (ops.y_mat.T @ g + g @ ops.y_mat).is_zero():
        raise InvariantError("y_isometry", "Q(Yv,w) + Q(v,Yw) != 0")
    if not matrix_exp_nilpotent(ops.n_mat).is_integral():
        raise InvariantError("exp_n_integral", "e^N not integral")
    filt = _filtration_dict(filtration, n)
    for p in sorted(filt):
        fp = _level(filt, p, n)
        if not contains(fp, [ops.y_mat @ v for v in fp]):
            raise InvariantError("y_preserves_filtration", f"Y(F^{p}) not in F^{p}")
        if not contains(_level(filt, p - 1, n), [ops.n_mat @ v for v in fp]):
            raise InvariantError("griffiths_transversality", f"N(F^{p}) not in F^{p - 1}")
    e_in = matrix_exp_nilpotent(ops.n_mat, I)
    sharp = {p: tuple(span_basis([e_in @ v for v in basis])) for p, basis in filt.items()}
    hodge = decomposition_from_filtration(sharp, lattice.weight, n)
    c_sharp = weil_operator(lattice, hodge)
    if not (ops.y_mat @ c_sharp.matrix + c_sharp.matrix @ ops.y_mat).is_zero():
        raise InvariantError("y_anticommutes_weil", "Y C# + C# Y != 0")
    return SL2OrbitData(lattice, ops, filt, sharp, hodge, c_sharp)


def orbit_from_json(data: Mapping) -> SL2OrbitData:
    lattice = PolarizedLattice.from_json(data["lattice"])
    return validate_sl2(lattice, data["N"], data["Y"], {int(p): b for p, b in data["F"].items()})


# weights ----------------------------------------------------------------------


def weight_spaces(data, v: Sequence) -> dict[int, tuple]:
    """``v = sum v_l`` with ``Y v_l = l v_l``, one entry per eigenvalue of ``Y``."""
    ops = _ops(data)
    v = vector(v)
    if len(v) != ops.size:
        raise DimensionError("vector length does not match the orbit")
    return {ell: ops.projectors[ell] @ v for ell in ops.eigenvalues}


def weight_filtration_from_y(data, ell: int) -> list[tuple]:
    ops = _ops(data)
    vecs = []
    for m in ops.eigenvalues:
        if m <= ell:
            vecs.extend(kernel(ops.y_mat - Matrix.identity(ops.size) * m))
    return span_basis(vecs)


def intrinsic_weight_filtration(n_mat: Matrix, ell: int) -> list[tuple]:
    """``W_l = sum_{j >= max(0,l)} ker N^{j+1} ∩ im N^{j-l}``, centered at 0."""
    size = n_mat.nrows
    vecs = []
    # j = max(ell, size) already sees all of ker N^(j+1)
    for j in range(max(0, ell), max(ell, size) + 1):
        if j - ell > size:
            continue
        ker = kernel(n_mat ** (j + 1))
        im = span_basis((n_mat ** (j - ell)).columns())
        if ker and im:
            vecs.extend(intersect(ker, im))
    return span_basis(vecs)


def weight_filtration(data, ell: int) -> list[tuple]:
    """``W_l`` as the sum of ``E_m(Y)``, ``m <= l``, checked against ``N`` alone."""
    from_y = weight_filtration_from_y(data, ell)
    if not same_span(from_y, intrinsic_weight_filtration(_ops(data).n_mat, ell)):
        raise InvariantError("weight_filtration", f"W_{ell} from Y disagrees with the filtration of N")
    return from_y


# Weil operator along the orbit ------------------------------------------------


def _scaling(ops: SL2Operators, s, sign: int) -> Matrix:
    """``sum_l s^(sign*l) Pi_l``."""
    total = Matrix.zeros(ops.size)
    for ell in ops.eigenvalues:
        power = sign * ell
        if isinstance(s, LaurentBivar):
            factor = LaurentBivar.s(power)
        else:
            factor = Fraction(s) ** power
        total = total + ops.projectors[ell].map(lambda a, f=factor: f * a)
    return total


def _check_s(s) -> Fraction:
    s = to_fraction(s)
    if s <= 0:
        raise InvariantError("positive_s", f"s = sqrt(y) must be positive, got {s}")
    return s


def weil_at(data: SL2OrbitData, x=None, s=None) -> Matrix:
    """``e^{xN} e^{-1/2 log y Y} C# e^{1/2 log y Y} e^{-xN}`` with ``s = sqrt(y)``.

    Without arguments the result is a matrix of ``LaurentBivar`` entries in
    ``(x, s)``; with rational ``x`` and ``s > 0`` it is a rational matrix.
    """
    ops = data.ops
    if x is None and s is None:
        xs, ss = LaurentBivar.x(), LaurentBivar.s()
    elif x is None or s is None:
        raise TypeError("give both x and s, or neither")
    else:
        xs, ss = to_fraction(x), _check_s(s)
    forward = matrix_exp_nilpotent(ops.n_mat, xs)
    backward = matrix_exp_nilpotent(ops.n_mat, -xs)
    return forward @ _scaling(ops, ss, -1) @ data.c_sharp.matrix @ _scaling(ops, ss, 1) @ backward


def evaluate_symbolic(m: Matrix, x, s) -> Matrix:
    s = _check_s(s)
    return m.map(lambda a: a.evaluate(x, s) if isinstance(a, LaurentBivar) else a)


def is_selfdual_at(data: SL2OrbitData, v: Sequence, x, s) -> bool:
    """``C#(e^{1/2 log y Y} e^{-xN} v) == e^{1/2 log y Y} e^{-xN} v``."""
    s = _check_s(s)
    v = vector(v)
    if len(v) != data.size:
        raise DimensionError("vector length does not match the orbit")
    w = _exp_apply(data.n_mat, -to_fraction(x), v)
    u = [Fraction(0)] * len(v)
    for ell in data.ops.eigenvalues:
        scale = s**ell
        for i, a in enumerate(data.ops.projectors[ell] @ w):
            u[i] += scale * a
    u = tuple(u)
    return data.c_sharp.matrix @ u == u


def _exp_apply(n_mat: Matrix, x: Fraction, v: tuple) -> tuple:
    """``e^{xN} v`` without forming the matrix exponential."""
    total, term, j = list(v), v, 0
    while any(term):
        j += 1
        term = tuple(a * x / j for a in n_mat @ term)
        total = [a + b for a, b in zip(total, term)]
    return tuple(total)


def hodge_norm_at(data: SL2OrbitData, v: Sequence, x, s) -> Fraction:
    return pair(data.lattice, v, weil_at(data, x, s) @ vector(v))


def classify_locus(data: SL2OrbitData, v: Sequence) -> LocusComponent:
    """Full disk, a single ray ``Re z = x``, or no unbounded component.

    For ``v`` in ``W_0`` the verdict is exact at every point of the upper
    half-plane. Outside ``W_0`` the self-dual set has no points of large
    ``Im z``; ``empty`` then only speaks about that unbounded part.
    """
    v = vector(v)
    parts = weight_spaces(data, v)
    if any(any(part) for ell, part in parts.items() if ell > 0):
        return LocusComponent(LocusComponent.EMPTY, note="v not in W_0: no unbounded component")
    zero = tuple(Fraction(0) for _ in v)
    v0 = parts.get(0, zero)
    nv0 = data.n_mat @ v0
    fixed = data.c_sharp.matrix @ v0 == v0
    if not any(nv0):
        if v == v0 and fixed:
            return LocusComponent(LocusComponent.FULL_DISK)
        return LocusComponent(LocusComponent.EMPTY)
    k = next(i for i, a in enumerate(nv0) if a)
    x = parts.get(-2, zero)[k] / nv0[k]
    if fixed and _exp_apply(data.n_mat, x, v0) == v:
        return LocusComponent(LocusComponent.RAY, x)
    return LocusComponent(LocusComponent.EMPTY)


def default_grid() -> tuple[list[Fraction], list[Fraction]]:
    xs = [Fraction(k, 2) for k in range(-4, 5)]
    ss = [Fraction(k) for k in range(1, 9)]
    return xs, ss
