"""Small named Hodge structures and nilpotent orbits used as presets.

``elliptic_curve`` is H^1 of C/(Z + Zi); ``elliptic_sym2`` is its symmetric
square. Both have integral Weil operators. The orbit fixtures degenerate
the symmetric square along the standard unipotent monodromy.
"""

from __future__ import annotations

from fractions import Fraction

from .exact import Gauss, Matrix, kron
from .hodge import HodgeDecomposition, HodgePiece, validate_weil_matrix, weil_operator
from .lattice import PolarizedLattice

_i = Gauss(0, 1)


def elliptic_curve_lattice() -> PolarizedLattice:
    # (a, b) -> a1 b2 - a2 b1
    return PolarizedLattice(Matrix([[0, 1], [-1, 0]]), 1)


def elliptic_curve_hodge() -> HodgeDecomposition:
    return HodgeDecomposition(
        1,
        (
            HodgePiece(1, 0, ((Gauss(1), _i),)),
            HodgePiece(0, 1, ((Gauss(1), -_i),)),
        ),
    )


def elliptic_sym2_lattice() -> PolarizedLattice:
    # (a, b) -> a1 b3 + a3 b1 - a2 b2
    return PolarizedLattice(Matrix([[0, 0, 1], [0, -1, 0], [1, 0, 0]]), 2)


def elliptic_sym2_hodge_lattice() -> PolarizedLattice:
    """Pairing for which the listed Sym^2 decomposition satisfies the Riemann relations.

    With ``a1 b3 + a3 b1 - a2 b2`` the line (1, 2i, -1) is not isotropic;
    the induced Sym^2 pairing ``2 a1 b3 + 2 a3 b1 - a2 b2`` is the one it
    matches. Both pairings share the Weil operator (a3, -a2, a1).
    """
    return PolarizedLattice(Matrix([[0, 0, 2], [0, -1, 0], [2, 0, 0]]), 2)


def elliptic_sym2_hodge() -> HodgeDecomposition:
    return HodgeDecomposition(
        2,
        (
            HodgePiece(2, 0, ((Gauss(1), 2 * _i, Gauss(-1)),)),
            HodgePiece(1, 1, ((Gauss(1), Gauss(0), Gauss(1)),)),
            HodgePiece(0, 2, ((Gauss(1), -2 * _i, Gauss(-1)),)),
        ),
    )


def elliptic_curve():
    lat = elliptic_curve_lattice()
    return lat, weil_operator(lat, elliptic_curve_hodge())


def elliptic_sym2():
    c = weil_operator(elliptic_sym2_hodge_lattice(), elliptic_sym2_hodge())
    lat = elliptic_sym2_lattice()
    return lat, validate_weil_matrix(lat, c.matrix)


def hyperbolic_swap():
    """Hyperbolic plane with the swap as Weil operator (weight 0)."""
    lat = PolarizedLattice(Matrix([[0, 1], [1, 0]]), 0)
    return lat, validate_weil_matrix(lat, Matrix([[0, 1], [1, 0]]))


def diagonal_with_weil(entries, weight: int = 0):
    """Diagonal lattice whose Weil operator is the sign of each entry."""
    lat = PolarizedLattice(Matrix.diag([Fraction(e) for e in entries]), weight)
    signs = [Fraction(1 if e > 0 else -1) for e in entries]
    return lat, validate_weil_matrix(lat, Matrix.diag(signs))


# nilpotent orbits ------------------------------------------------------------

# Sym^2 of the standard sl2 triple, with [Y, N] = -2N
SYM2_N = Matrix([[0, 0, 0], [2, 0, 0], [0, 2, 0]])
SYM2_Y = Matrix.diag([2, 0, -2])


def _unit(n: int, i: int) -> tuple:
    return tuple(Gauss(int(i == j)) for j in range(n))


def sym2_orbit_input() -> dict:
    """Rank 3 degeneration of the symmetric square; ``F^2 = <e1>``, ``F^1 = <e1, e2>``."""
    return {
        "lattice": elliptic_sym2_lattice(),
        "N": SYM2_N,
        "Y": SYM2_Y,
        "F": {2: [_unit(3, 0)], 1: [_unit(3, 0), _unit(3, 1)]},
    }


def sym2_type_orbit_input() -> dict:
    """``Sym^2 (x) P + <1>`` in weight 4, rank 7.

    ``P`` is a rank-2 weight-2 structure with ``H^{2,0} = (1, i)`` and Weil
    operator ``-1``; the extra summand is a self-dual class of type (2,2).
    ``C#`` is ``+1`` on ``E_0(Y)``, so self-dual rays and full disks both
    occur.
    """
    gram = Matrix.block_diag(kron(elliptic_sym2_lattice().gram, Matrix.diag([-1, -1])), Matrix([[1]]))
    two = Matrix.identity(2)
    n_mat = Matrix.block_diag(kron(SYM2_N, two), Matrix([[0]]))
    y_mat = Matrix.block_diag(kron(SYM2_Y, two), Matrix([[0]]))
    sigma = (Gauss(1), Gauss(0, 1))

    def lift(i, f):
        return tuple(f[k] if j == i else Gauss(0) for j in range(3) for k in range(2)) + (Gauss(0),)

    plane = [(Gauss(1), Gauss(0)), (Gauss(0), Gauss(1))]
    extra = tuple(Gauss(0) for _ in range(6)) + (Gauss(1),)
    f4 = [lift(0, sigma)]
    f3 = [lift(0, sigma), lift(1, sigma)]
    f2 = [lift(0, f) for f in plane] + [lift(1, sigma), lift(2, sigma), extra]
    f1 = [lift(i, f) for i in range(2) for f in plane] + [lift(2, sigma), extra]
    return {
        "lattice": PolarizedLattice(gram, 4),
        "N": n_mat,
        "Y": y_mat,
        "F": {4: f4, 3: f3, 2: f2, 1: f1},
    }


def trivial_orbit_input() -> dict:
    """``N = Y = 0`` over the elliptic symmetric square."""
    lat = elliptic_sym2_hodge_lattice()
    hodge = elliptic_sym2_hodge()
    f2 = list(hodge.piece(2).basis)
    return {
        "lattice": lat,
        "N": Matrix.zeros(3),
        "Y": Matrix.zeros(3),
        "F": {2: f2, 1: f2 + list(hodge.piece(1).basis)},
    }


def orbit_input_to_json(data: dict) -> dict:
    return {
        "lattice": data["lattice"].to_json(),
        "N": data["N"].to_json(),
        "Y": data["Y"].to_json(),
        "F": {str(p): [[a.to_json() for a in v] for v in basis] for p, basis in data["F"].items()},
    }
