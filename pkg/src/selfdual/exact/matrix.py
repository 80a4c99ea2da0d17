"""Dense immutable matrices over exact rings.

Entries may be ``Fraction``, :class:`Gauss` or :class:`LaurentBivar`; the
class only needs ``+``, ``-`` and ``*`` from them. Vectors are plain tuples.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from ..errors import DimensionError, NotNilpotentError
from .gauss import Gauss, conj, format_fraction, to_fraction


def _entry(value):
    if isinstance(value, (Fraction, Gauss)):
        return value
    if isinstance(value, (int, str)) and not isinstance(value, bool):
        return to_fraction(value)
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return Gauss.coerce(value)
    # LaurentBivar and other exact ring elements pass through untouched
    return value


def vector(values: Iterable) -> tuple:
    return tuple(_entry(v) for v in values)


def dot(v: Sequence, w: Sequence):
    if len(v) != len(w):
        raise DimensionError(f"length mismatch {len(v)} != {len(w)}")
    # matrices here are sparse; skipping zero terms is the main saving
    return sum((a * b for a, b in zip(v, w) if a and b), Fraction(0))


def vadd(v: Sequence, w: Sequence) -> tuple:
    if len(v) != len(w):
        raise DimensionError(f"length mismatch {len(v)} != {len(w)}")
    return tuple(a + b for a, b in zip(v, w))


def vsub(v: Sequence, w: Sequence) -> tuple:
    if len(v) != len(w):
        raise DimensionError(f"length mismatch {len(v)} != {len(w)}")
    return tuple(a - b for a, b in zip(v, w))


def vscale(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def vconj(v: Sequence) -> tuple:
    return tuple(conj(a) for a in v)


def is_zero_vector(v: Sequence) -> bool:
    return not any(v)


class Matrix:
    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(_entry(x) for x in row) for row in rows)
        ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise DimensionError("ragged matrix rows")
        object.__setattr__(self, "rows", data)
        object.__setattr__(self, "nrows", len(data))
        object.__setattr__(self, "ncols", ncols)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    # constructors ---------------------------------------------------------
    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[Fraction(int(i == j)) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int | None = None) -> "Matrix":
        ncols = nrows if ncols is None else ncols
        return cls([[Fraction(0)] * ncols for _ in range(nrows)])

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise DimensionError("no columns given")
        n = len(columns[0])
        if any(len(c) != n for c in columns):
            raise DimensionError("columns of different lengths")
        return cls([[c[i] for c in columns] for i in range(n)])

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.nrows for b in blocks)
        m = sum(b.ncols for b in blocks)
        out = [[Fraction(0)] * m for _ in range(n)]
        r = c = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[r + i][c + j] = b.rows[i][j]
            r += b.nrows
            c += b.ncols
        return cls(out)

    # access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, key):
        i, j = key
        return self.rows[i][j]

    def row(self, i: int) -> tuple:
        return self.rows[i]

    def col(self, j: int) -> tuple:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[tuple]:
        return [self.col(j) for j in range(self.ncols)]

    def entries(self):
        for r in self.rows:
            yield from r

    # algebra --------------------------------------------------------------
    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return Matrix([[dot(r, c) for c in cols] for r in self.rows])
        if isinstance(other, (tuple, list)):
            if self.ncols != len(other):
                raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(other)}")
            v = vector(other)
            return tuple(dot(r, v) for r in self.rows)
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.shape != other.shape:
            raise DimensionError(f"cannot subtract {self.shape} and {other.shape}")
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self):
        return Matrix([[-a for a in r] for r in self.rows])

    def __mul__(self, scalar):
        if isinstance(scalar, Matrix):
            return NotImplemented
        return Matrix([[scalar * a for a in r] for r in self.rows])

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not self.is_square() or not isinstance(k, int) or k < 0:
            return NotImplemented
        result = Matrix.identity(self.nrows)
        base = self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    @property
    def T(self) -> "Matrix":
        return Matrix(zip(*self.rows)) if self.rows else self

    def conj(self) -> "Matrix":
        return Matrix([[conj(a) for a in r] for r in self.rows])

    def map(self, fn) -> "Matrix":
        return Matrix([[fn(a) for a in r] for r in self.rows])

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.entries())

    def is_identity(self) -> bool:
        return self.is_square() and self == Matrix.identity(self.nrows)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self == -self.T

    def is_real(self) -> bool:
        return all(not isinstance(a, Gauss) or a.im == 0 for a in self.entries())

    def is_integral(self) -> bool:
        return self.is_real() and all(to_fraction(a).denominator == 1 for a in self.real_part().entries())

    def real_part(self) -> "Matrix":
        return self.map(lambda a: a.re if isinstance(a, Gauss) else a)

    def imag_part(self) -> "Matrix":
        return self.map(lambda a: a.im if isinstance(a, Gauss) else Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Matrix({[[str(a) if isinstance(a, Gauss) else (format_fraction(a) if isinstance(a, Fraction) else repr(a)) for a in r] for r in self.rows]})"

    def to_json(self) -> list:
        return [[a.to_json() if isinstance(a, Gauss) else format_fraction(a) for a in r] for r in self.rows]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def nilpotency_index(n_mat: Matrix) -> int:
    """Smallest ``k`` with ``N**k == 0``; raises when no ``k <= n`` works."""
    if not n_mat.is_square():
        raise DimensionError("nilpotency is defined for square matrices")
    power = Matrix.identity(n_mat.nrows)
    for k in range(n_mat.nrows + 1):
        if power.is_zero():
            return k
        power = power @ n_mat
    raise NotNilpotentError()


def matrix_exp_nilpotent(n_mat: Matrix, scale=1) -> Matrix:
    """Finite exponential series ``sum scale**j N**j / j!`` of a nilpotent ``N``.

    ``scale`` may be any exact ring element that commutes with the entries:
    an int, Fraction, Gauss or LaurentBivar.
    """
    k = nilpotency_index(n_mat)
    size = n_mat.nrows
    result = Matrix.identity(size)
    if k <= 1:
        return result
    total = [list(r) for r in result.rows]
    power = n_mat
    coeff = Fraction(1)
    for j in range(1, k):
        coeff = coeff * scale
        inv_fact = Fraction(1, factorial(j))
        for r in range(size):
            for c in range(size):
                e = power.rows[r][c]
                if e:
                    total[r][c] = total[r][c] + coeff * (e * inv_fact)
        power = power @ n_mat
    return Matrix(total)


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product; row index ``i * b.nrows + k``."""
    return Matrix(
        [[x * y for x in ra for y in rb] for ra in a.rows for rb in b.rows]
    )
