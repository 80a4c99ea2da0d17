"""Period points of K3 type and the anti-self-dual locus of an integral class.

A period is a line ``[sigma]`` with ``Q(sigma, sigma) = 0`` and
``Q(sigma, conj sigma) < 0``. An integral ``v`` is anti-self-dual at
``[sigma]`` exactly when it lies in the real plane spanned by ``Re sigma``
and ``Im sigma``, which is the linear equation

    Q(sigma, conj sigma) v = Q(v, conj sigma) sigma + Q(v, sigma) conj sigma.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DimensionError, InvariantError
from .exact import Gauss, Matrix, kernel, vconj, vector
from .hodge import HodgeDecomposition, HodgePiece, WeilOperator, parse_gauss_vector, weil_operator
from .lattice import PolarizedLattice, pair

ORBIT_LABELS = {
    2: "closed orbit",
    1: "anti-self-dual-locus closure",
    0: "dense orbit",
}


@dataclass(frozen=True)
class K3Period:
    lattice: PolarizedLattice
    sigma: tuple

    @property
    def sigma_bar(self) -> tuple:
        return vconj(self.sigma)


def _sigma(lattice: PolarizedLattice, sigma: Sequence) -> tuple:
    sigma = parse_gauss_vector(sigma)
    if len(sigma) != lattice.rank:
        raise DimensionError("period vector does not match the lattice rank")
    if not any(sigma):
        raise InvariantError("nonzero_period", "the period vector is zero")
    return sigma


def is_period_point(lattice: PolarizedLattice, sigma: Sequence) -> bool:
    if lattice.weight != 2:
        raise InvariantError("weight_two", "K3-type periods live in weight 2")
    sigma = _sigma(lattice, sigma)
    return pair(lattice, sigma, sigma) == 0 and Gauss.coerce(pair(lattice, sigma, vconj(sigma))).re < 0


def k3_period(lattice: PolarizedLattice, sigma: Sequence) -> K3Period:
    if lattice.weight != 2:
        raise InvariantError("weight_two", "K3-type periods live in weight 2")
    sigma = _sigma(lattice, sigma)
    if pair(lattice, sigma, sigma) != 0:
        raise InvariantError("period_isotropic", "Q(sigma, sigma) != 0")
    if Gauss.coerce(pair(lattice, sigma, vconj(sigma))).re >= 0:
        raise InvariantError("period_negative", "Q(sigma, conj sigma) is not negative")
    return K3Period(lattice, sigma)


def period_from_json(data) -> K3Period:
    lattice = PolarizedLattice.from_json(data["lattice"])
    return k3_period(lattice, data["sigma"])


def antiselfdual_locus_contains(period: K3Period, v: Sequence) -> bool:
    v = vector(v)
    if len(v) != period.lattice.rank:
        raise DimensionError("vector does not match the lattice rank")
    s, sb = period.sigma, period.sigma_bar
    lam = pair(period.lattice, s, sb)
    a, b = pair(period.lattice, v, sb), pair(period.lattice, v, s)
    return all(lam * x == a * p + b * q for x, p, q in zip(v, s, sb))


def locus_matrix(period: K3Period) -> Matrix:
    """Rational ``n x n`` matrix whose kernel is the locus (the map is real)."""
    lat = period.lattice
    n = lat.rank
    s, sb = period.sigma, period.sigma_bar
    lam = Gauss.coerce(pair(lat, s, sb)).re
    columns = []
    for k in range(n):
        e = tuple(Fraction(int(i == k)) for i in range(n))
        a, b = pair(lat, e, sb), pair(lat, e, s)
        col = [lam * e[i] - Gauss.coerce(a * s[i] + b * sb[i]).re for i in range(n)]
        columns.append(col)
    return Matrix.from_columns(columns)


def locus_basis(period: K3Period) -> list[tuple]:
    """Primitive integer basis of the solution space's rational span."""
    out = []
    for v in kernel(locus_matrix(period)):
        den = 1
        for x in v:
            den = lcm(den, x.denominator)
        w = [int(x * den) for x in v]
        g = 0
        for x in w:
            g = gcd(g, x)
        out.append(tuple(x // g for x in w))
    return out


def transcendental_rank(period: K3Period) -> tuple[int, str]:
    """Rank of ``(H^{2,0} + H^{0,2}) ∩ Z^n`` and the orbit-closure label."""
    r = len(kernel(locus_matrix(period)))
    return r, ORBIT_LABELS[r]


def period_decomposition(period: K3Period) -> HodgeDecomposition:
    """``H^{2,0} = <sigma>``, ``H^{0,2} = <conj sigma>``, ``H^{1,1}`` their orthogonal complement."""
    g = period.lattice.gram
    s = period.sigma
    re = tuple(Gauss.coerce(x).re for x in s)
    im = tuple(Gauss.coerce(x).im for x in s)
    rows = Matrix([g @ re, g @ im])
    middle = tuple(tuple(Gauss(x) for x in v) for v in kernel(rows))
    return HodgeDecomposition(
        2,
        (
            HodgePiece(2, 0, (s,)),
            HodgePiece(1, 1, middle),
            HodgePiece(0, 2, (period.sigma_bar,)),
        ),
    )


def period_weil_operator(period: K3Period) -> WeilOperator:
    return weil_operator(period.lattice, period_decomposition(period))
