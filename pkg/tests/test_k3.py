import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_unimodular
from selfdual.errors import InvariantError
from selfdual.exact import Gauss, Matrix, inverse, is_positive_definite, rank
from selfdual.k3 import (
    antiselfdual_locus_contains,
    is_period_point,
    k3_period,
    locus_basis,
    period_from_json,
    period_weil_operator,
    transcendental_rank,
)
from selfdual.lattice import PolarizedLattice, diagonal_lattice

I = Gauss(0, 1)


def _basic():
    return k3_period(diagonal_lattice([-1, -1, 1], weight=2), (1, I, 0))


def _random_period(rng, n):
    """Lattice M^T diag(-1,-1,d..) M, d > 0, with period lambda M^-1 (e1 + i e2)."""
    m = Matrix(random_unimodular(rng, n, steps=5))
    diag = [-1, -1] + [rng.choice([1, 2, 3]) for _ in range(n - 2)]
    lat = PolarizedLattice(m.T @ Matrix.diag(diag) @ m, 2)
    m_inv = inverse(m)
    plane = [m_inv @ tuple(int(i == k) for i in range(n)) for k in (0, 1)]
    lam = Gauss(rng.randint(-3, 3) or 1, rng.randint(-3, 3))
    sigma = tuple(lam * (a + I * b) for a, b in zip(*plane))
    return k3_period(lat, sigma), plane


def test_example():
    p = _basic()
    assert transcendental_rank(p) == (2, "closed orbit")
    assert sorted(locus_basis(p)) == [(0, 1, 0), (1, 0, 0)]
    assert antiselfdual_locus_contains(p, (3, -2, 0))
    assert not antiselfdual_locus_contains(p, (0, 0, 1))


def test_json_entry():
    p = period_from_json({"lattice": {"rank": 3, "weight": 2, "gram": [[-1, 0, 0], [0, -1, 0], [0, 0, 1]]},
                          "sigma": [[1, 0], [0, 1], [0, 0]]})
    assert p.sigma == _basic().sigma


def test_invalid_periods():
    lat = diagonal_lattice([-1, -1, 1], weight=2)
    with pytest.raises(InvariantError, match="weight_two"):
        k3_period(diagonal_lattice([-1, -1, 1]), (1, I, 0))
    with pytest.raises(InvariantError, match="nonzero_period"):
        k3_period(lat, (0, 0, 0))
    with pytest.raises(InvariantError, match="period_isotropic"):
        k3_period(lat, (1, 0, 0))
    with pytest.raises(InvariantError, match="period_negative"):
        k3_period(diagonal_lattice([1, 1, -1], weight=2), (1, I, 0))
    assert not is_period_point(lat, (1, 1, 0))
    assert is_period_point(lat, (I, 1, 0))


def test_weil_operator_from_period():
    c = period_weil_operator(_basic())
    assert c.matrix == Matrix.diag([-1, -1, 1])


def test_box_brute_force_matches_rank():
    # oracle: the locus is the rational span of the plane the period was built from
    rng = random.Random(17)
    for _ in range(8):
        n = rng.randint(3, 4)
        p, plane = _random_period(rng, n)
        r, label = transcendental_rank(p)
        basis = locus_basis(p)
        assert (r, label) == (2, "closed orbit") and len(basis) == 2
        assert rank(Matrix([list(b) for b in basis] + [list(v) for v in plane])) == 2
        for v in itertools.product(range(-2, 3), repeat=n):
            in_plane = rank(Matrix([list(v)] + [list(w) for w in plane])) == 2
            assert antiselfdual_locus_contains(p, v) == in_plane


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_locus_properties(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 5)
    p, plane = _random_period(rng, n)
    c = period_weil_operator(p)
    assert c.matrix @ c.matrix == Matrix.identity(n)
    assert is_positive_definite(p.lattice.gram @ c.matrix)
    basis = locus_basis(p)
    for v in basis + plane:
        assert antiselfdual_locus_contains(p, v)
        assert c.matrix @ v == tuple(-Fraction(x) for x in v)
    # linear: integer combinations stay inside
    a, b = rng.randint(-4, 4), rng.randint(-4, 4)
    combo = tuple(a * x + b * y for x, y in zip(*basis))
    assert antiselfdual_locus_contains(p, combo)
    # independent of the representative of the line
    lam = Gauss(rng.randint(1, 3), rng.randint(-3, 3))
    scaled = k3_period(p.lattice, tuple(lam * x for x in p.sigma))
    assert sorted(locus_basis(scaled)) == sorted(basis)


def test_vector_outside_plane():
    rng = random.Random(4)
    for _ in range(20):
        p, plane = _random_period(rng, 4)
        c = period_weil_operator(p)
        for v in itertools.product(range(-1, 2), repeat=4):
            inside = antiselfdual_locus_contains(p, v)
            assert inside == (c.matrix @ v == tuple(-Fraction(x) for x in v))
