import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_unimodular
from selfdual.errors import DimensionError, InvariantError
from selfdual.exact import Matrix, inverse
from selfdual.lattice import (
    PolarizedLattice,
    diagonal_lattice,
    hyperbolic_plane,
    identity_lattice,
    is_isometry,
    pair,
    signature,
)

ints = st.integers(min_value=-6, max_value=6)


def test_pair_examples():
    assert pair(hyperbolic_plane(), (1, 1), (1, 1)) == 2
    assert pair(identity_lattice(3), (1, 2, 3), (0, 0, 0)) == 0
    elliptic = PolarizedLattice(Matrix([[0, 1], [-1, 0]]), 1)
    assert pair(elliptic, (1, 0), (0, 1)) == 1
    assert pair(elliptic, (0, 1), (1, 0)) == -1


def test_pair_dimension_mismatch():
    with pytest.raises(DimensionError):
        pair(identity_lattice(2), (1, 2, 3), (1, 2))


def test_construction_invariants():
    with pytest.raises(InvariantError, match="gram_symmetry"):
        PolarizedLattice(Matrix([[0, 1], [-1, 0]]), 0)
    with pytest.raises(InvariantError, match="gram_symmetry"):
        PolarizedLattice(Matrix([[0, 1], [1, 0]]), 1)
    with pytest.raises(InvariantError, match="nondegenerate"):
        PolarizedLattice(Matrix([[1, 1], [1, 1]]), 0)
    with pytest.raises(InvariantError, match="integral_gram"):
        PolarizedLattice(Matrix([["1/2", 0], [0, 1]]), 0)


def test_json_roundtrip():
    lat = diagonal_lattice([1, -2, 3], weight=2)
    assert PolarizedLattice.from_json(lat.to_json()) == lat
    with pytest.raises(DimensionError):
        PolarizedLattice.from_json({"rank": 4, "weight": 0, "gram": [[1]]})


def test_signature_examples():
    assert tuple(signature(identity_lattice(3))) == (3, 0)
    assert tuple(signature(diagonal_lattice([-1, -1, 1]))) == (1, 2)
    # eigenvalues of [[0,1],[1,0]] are the roots of x^2 - 1
    assert tuple(signature(hyperbolic_plane())) == (1, 1)


def test_isometry_examples():
    assert is_isometry(hyperbolic_plane(), Matrix.identity(2))
    assert is_isometry(hyperbolic_plane(), Matrix([[0, 1], [1, 0]]))
    assert not is_isometry(identity_lattice(2), Matrix([[1, 1], [0, 1]]))


@settings(max_examples=40)
@given(st.lists(ints, min_size=4, max_size=4), st.lists(ints, min_size=2, max_size=2), st.lists(ints, min_size=2, max_size=2))
def test_pair_symmetry_sign(entries, v, w):
    a, b, c, d = entries
    sym = Matrix([[a, b], [b, d]])
    if sym[0, 0] * sym[1, 1] - b * b != 0:
        lat = PolarizedLattice(sym, 0)
        assert pair(lat, v, w) == pair(lat, w, v)
    if c != 0:
        skew = PolarizedLattice(Matrix([[0, c], [-c, 0]]), 3)
        assert pair(skew, v, w) == -pair(skew, w, v)


@settings(max_examples=40)
@given(st.integers(min_value=0, max_value=10**6))
def test_signature_invariant_under_unimodular_change(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 5)
    diag = [rng.choice([-3, -2, -1, 1, 2, 3]) for _ in range(n)]
    b = Matrix(random_unimodular(rng, n))
    g = b.T @ Matrix.diag(diag) @ b
    pos = sum(1 for x in diag if x > 0)
    assert tuple(signature(g)) == (pos, n - pos)


@settings(max_examples=25)
@given(st.integers(min_value=0, max_value=10**6))
def test_isometries_closed_under_product_and_inverse(seed):
    rng = random.Random(seed)
    lat = PolarizedLattice(Matrix.block_diag(Matrix([[0, 1], [1, 0]]), Matrix([[0, 1], [1, 0]])), 0)
    swap = Matrix.block_diag(Matrix([[0, 1], [1, 0]]), Matrix.identity(2))
    k = rng.randint(-3, 3)
    # Eichler-type transvection on U + U
    shear = Matrix([[1, 0, 0, 0], [0, 1, -k, 0], [0, 0, 1, 0], [k, 0, 0, 1]])
    assert is_isometry(lat, swap)
    assert is_isometry(lat, shear)
    assert is_isometry(lat, swap @ shear)
    assert is_isometry(lat, inverse(shear))
