"""Complete enumeration of integral classes of fixed self-intersection.

Everything reduces to listing ``{v in Z^n : v^T G v = q}`` for a positive
definite rational ``G`` (the Hodge-norm form). The form is factored exactly
as ``G = L D L^T`` and rewritten with integer weights, so the tree search
in ``selfdual._kernel`` never rounds; its bounds come from exact integer
square roots, which makes the output provably complete.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm
from typing import Sequence

from . import _kernel
from .errors import DimensionError, InvariantError
from .exact import Matrix, inverse, ldl, vector
from .hodge import HodgeNormForm, WeilOperator, hodge_norm_form, validate_weil_matrix
from .lattice import PolarizedLattice, pair

SELF_DUAL = "selfdual"
ANTI_SELF_DUAL = "antiselfdual"
PAIRS = "pairs"


@dataclass(frozen=True)
class EnumerationResult:
    target_value: int
    vectors: tuple
    mode: str

    @property
    def count(self) -> int:
        return len(self.vectors)

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.vectors)

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "q": self.target_value,
            "count": self.count,
            "vectors": [list(v) for v in self.vectors],
        }


def _check_target(q) -> int:
    if isinstance(q, bool) or int(q) != q:
        raise InvariantError("target_value", f"q must be an integer, got {q!r}")
    q = int(q)
    if q <= 0:
        raise InvariantError("target_value", f"q must be >= 1, got {q}")
    return q


def coordinate_bounds(g: Matrix, q) -> list[int]:
    """``|v_j| <= sqrt(q (G^-1)_jj)`` for every ``v`` with ``v^T G v <= q``."""
    ginv = inverse(g)
    q = Fraction(q)
    return [isqrt(int(q * ginv.rows[j][j])) for j in range(g.nrows)]


def _integer_levels(g: Matrix, q: int):
    """Rewrite ``v^T G v == q`` as ``sum w_k (b_k v_k + sum_{j>k} a_jk v_j)^2 == S``."""
    lower, d = ldl(g)
    n = g.nrows
    b, a = [], [[0] * n for _ in range(n)]
    for k in range(n):
        bk = 1
        for j in range(k + 1, n):
            bk = lcm(bk, lower.rows[j][k].denominator)
        b.append(bk)
        for j in range(k + 1, n):
            a[j][k] = int(lower.rows[j][k] * bk)
    scaled = [Fraction(d[k]) / (b[k] * b[k]) for k in range(n)]
    den = 1
    for x in scaled:
        den = lcm(den, x.denominator)
    w = [int(x * den) for x in scaled]
    budget = den * q
    common = budget
    for x in w:
        common = gcd(common, x)
    if common > 1:
        w = [x // common for x in w]
        budget //= common
    return w, b, a, budget


def enumerate_norm(
    form: HodgeNormForm | Matrix,
    q: int,
    zero_mask: Sequence[bool] | None = None,
    threads: int = 1,
    backend: str | None = None,
) -> list[tuple[int, ...]]:
    """All integer ``v`` with ``v^T G v == q``, sorted lexicographically.

    ``zero_mask[k]`` pins coordinate ``k`` to zero inside the search.
    """
    g = form.gram_c if isinstance(form, HodgeNormForm) else form
    q = _check_target(q)
    if zero_mask is None:
        zero_mask = [False] * g.nrows
    if len(zero_mask) != g.nrows:
        raise DimensionError("zero mask length does not match the form")
    w, b, a, budget = _integer_levels(g, q)
    bounds = coordinate_bounds(g, q)
    found, _ = _kernel.run_search(w, b, a, budget, list(zero_mask), bounds, backend=backend, threads=threads)
    return sorted(set(found))


def _require_even(c: WeilOperator, what: str) -> None:
    if not c.even:
        raise InvariantError("even_weight", f"{what} needs even weight; route odd weight through enumerate_pairs")


def enumerate_selfdual(
    lattice: PolarizedLattice, c: WeilOperator, q: int, threads: int = 1, backend: str | None = None
) -> EnumerationResult:
    """``H_q^+``: integral ``v`` with ``Cv = v`` and ``Q(v, v) = q``.

    Self-dual vectors have Hodge norm exactly ``Q(v, v)``, so they sit on the
    Hodge-norm ellipsoid of level ``q`` and a finite search finds them all.
    """
    _require_even(c, "self-dual enumeration")
    q = _check_target(q)
    form = hodge_norm_form(lattice, c)
    found = [v for v in enumerate_norm(form, q, threads=threads, backend=backend) if c.matrix @ v == vector(v)]
    return EnumerationResult(q, tuple(found), SELF_DUAL)


def enumerate_antiselfdual(
    lattice: PolarizedLattice, c: WeilOperator, q: int, threads: int = 1, backend: str | None = None
) -> EnumerationResult:
    """Integral ``v`` with ``Cv = -v`` and ``Q(v, v) = -q``."""
    _require_even(c, "anti-self-dual enumeration")
    q = _check_target(q)
    form = hodge_norm_form(lattice, c)
    found = []
    for v in enumerate_norm(form, q, threads=threads, backend=backend):
        if c.matrix @ v == tuple(-Fraction(x) for x in v):
            found.append(v)
    return EnumerationResult(q, tuple(found), ANTI_SELF_DUAL)


# tensor constructions -------------------------------------------------------


@dataclass(frozen=True)
class TensorStructure:
    """Base structure tensored with the weight-1 or Sym^2 elliptic structure."""

    base_lattice: PolarizedLattice
    base_weil: WeilOperator
    lattice: PolarizedLattice
    weil: WeilOperator
    kind: str  # "weight1" or "sym2"

    @property
    def base_rank(self) -> int:
        return self.base_lattice.rank

    @property
    def slots(self) -> int:
        return 2 if self.kind == "weight1" else 3

    def components(self, x: Sequence) -> tuple[tuple, ...]:
        n = self.base_rank
        if len(x) != n * self.slots:
            raise DimensionError(f"expected a vector of length {n * self.slots}")
        return tuple(tuple(x[i * n:(i + 1) * n]) for i in range(self.slots))

    def embed(self, *parts: Sequence) -> tuple:
        if len(parts) != self.slots or any(len(p) != self.base_rank for p in parts):
            raise DimensionError("wrong number or size of components")
        return tuple(x for p in parts for x in p)


def _blocks(layout: list[list], n: int) -> Matrix:
    zero = Matrix.zeros(n)
    rows = []
    for block_row in layout:
        mats = [blk if blk is not None else zero for blk in block_row]
        for i in range(n):
            rows.append([x for m in mats for x in m.rows[i]])
    return Matrix(rows)


def tensor_weight1(lattice: PolarizedLattice, c: WeilOperator) -> TensorStructure:
    """Odd weight ``2k-1`` -> even weight ``2k`` on ``H + H``.

    Pairing ``Q~((a1,a2),(b1,b2)) = Q(a1,b2) - Q(a2,b1)``,
    Weil operator ``C~(a1,a2) = (C a2, -C a1)``.
    """
    if lattice.even:
        raise InvariantError("odd_weight", "the weight-1 tensor construction needs odd weight")
    n = lattice.rank
    g, cm = lattice.gram, c.matrix
    product = PolarizedLattice(_blocks([[None, g], [-g, None]], n), lattice.weight + 1)
    weil = validate_weil_matrix(product, _blocks([[None, cm], [-cm, None]], n))
    return TensorStructure(lattice, c, product, weil, "weight1")


def tensor_sym2(lattice: PolarizedLattice, c: WeilOperator) -> TensorStructure:
    """Even weight ``2k`` -> ``2k+2`` on ``H + H + H``.

    Pairing ``Q(a1,b3) + Q(a3,b1) - Q(a2,b2)``,
    Weil operator ``(C a3, -C a2, C a1)``.
    """
    if not lattice.even:
        raise InvariantError("even_weight", "the Sym^2 tensor construction needs even weight")
    n = lattice.rank
    g, cm = lattice.gram, c.matrix
    product = PolarizedLattice(_blocks([[None, None, g], [None, -g, None], [g, None, None]], n), lattice.weight + 2)
    weil = validate_weil_matrix(product, _blocks([[None, None, cm], [None, -cm, None], [cm, None, None]], n))
    return TensorStructure(lattice, c, product, weil, "sym2")


def enumerate_pairs(
    lattice: PolarizedLattice, c: WeilOperator, q: int, threads: int = 1, backend: str | None = None
) -> EnumerationResult:
    """Integral pairs ``(v, w)`` with ``v = C w`` and ``Q(v, w) = q``.

    Odd weight: self-dual classes of the weight-1 tensor of norm ``2q``.
    Even weight: self-dual triples ``(a1, 0, a3)`` of the Sym^2 tensor of
    norm ``2q``, the middle slot pinned to zero during the search.
    Vectors are reported as the concatenation ``v + w``.
    """
    q = _check_target(q)
    n = lattice.rank
    if not lattice.even:
        t = tensor_weight1(lattice, c)
        hits = enumerate_selfdual(t.lattice, t.weil, 2 * q, threads=threads, backend=backend).vectors
        pairs = [t.components(x) for x in hits]
    else:
        t = tensor_sym2(lattice, c)
        form = hodge_norm_form(t.lattice, t.weil)
        mask = [False] * n + [True] * n + [False] * n
        pairs = []
        for x in enumerate_norm(form, 2 * q, zero_mask=mask, threads=threads, backend=backend):
            if t.weil.matrix @ x == vector(x):
                a1, _, a3 = t.components(x)
                pairs.append((a1, a3))
    out = []
    for v, w in pairs:
        if c.matrix @ w != vector(v) or pair(lattice, v, w) != q:
            raise InvariantError("pairs_consistency", f"projected pair {v}, {w} fails v = Cw, Q(v,w) = q")
        out.append(tuple(v) + tuple(w))
    return EnumerationResult(q, tuple(sorted(out)), PAIRS)


def gaussian_eigenvector_check(c: WeilOperator, v: Sequence, w: Sequence) -> bool:
    """``C(v + iw) = i(v + iw)``, i.e. ``Cv = -w`` and ``Cw = v``."""
    if c.even:
        raise InvariantError("odd_weight", "the Gaussian eigenvector test is for odd weight")
    v, w = vector(v), vector(w)
    return c.matrix @ v == tuple(-x for x in w) and c.matrix @ w == v


def antiselfdual_via_sym2(
    lattice: PolarizedLattice, c: WeilOperator, q: int, threads: int = 1, backend: str | None = None
) -> EnumerationResult:
    """Anti-self-dual classes read off the ``(0, a2, 0)`` slice of the Sym^2 tensor."""
    q = _check_target(q)
    t = tensor_sym2(lattice, c)
    found = []
    for x in enumerate_selfdual(t.lattice, t.weil, q, threads=threads, backend=backend).vectors:
        a1, a2, a3 = t.components(x)
        if not any(a1) and not any(a3):
            found.append(a2)
    return EnumerationResult(q, tuple(sorted(found)), ANTI_SELF_DUAL)
