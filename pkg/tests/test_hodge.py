import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import catalog
from selfdual import fixtures
from selfdual.errors import InvariantError, NonRationalError
from selfdual.exact import Gauss, Matrix, inverse, is_positive_definite
from selfdual.hodge import (
    HodgeDecomposition,
    HodgePiece,
    conjugate_weil,
    decomposition_from_filtration,
    hodge_norm_form,
    load_weil,
    parse_scalar,
    split_selfdual,
    validate_decomposition,
    validate_weil_matrix,
    weil_operator,
)
from selfdual.lattice import PolarizedLattice, identity_lattice, is_isometry, pair

small = st.integers(min_value=-9, max_value=9)


def test_weight_zero_single_piece_is_identity():
    lat = identity_lattice(3)
    basis = tuple(tuple(Gauss(int(i == j)) for j in range(3)) for i in range(3))
    c = weil_operator(lat, HodgeDecomposition(0, (HodgePiece(0, 0, basis),)))
    assert c.matrix == Matrix.identity(3)


def test_elliptic_curve_operator():
    lat, c = fixtures.elliptic_curve()
    assert c.matrix == Matrix([[0, 1], [-1, 0]])
    assert c.matrix @ (3, 5) == (5, -3)
    assert c.positivity_sign == 1


def test_elliptic_sym2_operator():
    lat = fixtures.elliptic_sym2_hodge_lattice()
    c = weil_operator(lat, fixtures.elliptic_sym2_hodge())
    assert c.matrix @ (1, 2, 3) == (3, -2, 1)
    # same matrix is a Weil operator for the three-term pairing too
    assert fixtures.elliptic_sym2()[1].matrix == c.matrix


def test_listed_sym2_line_not_isotropic_for_three_term_pairing():
    lat = fixtures.elliptic_sym2_lattice()
    sigma = (Gauss(1), Gauss(0, 2), Gauss(-1))
    assert pair(lat, sigma, sigma) == 2
    with pytest.raises(InvariantError, match="riemann_orthogonality"):
        validate_decomposition(lat, fixtures.elliptic_sym2_hodge())


def test_non_symmetric_decomposition_rejected():
    lat = identity_lattice(2)
    bad = HodgeDecomposition(0, (HodgePiece(0, 0, ((Gauss(1), Gauss(0, 1)), (Gauss(0), Gauss(1)))),))
    weil_operator(lat, bad)  # C^n as one piece: still the identity
    broken = HodgeDecomposition(
        2, (HodgePiece(2, 0, ((Gauss(1), Gauss(0, 1)),)), HodgePiece(0, 2, ((Gauss(1), Gauss(0, 2)),)))
    )
    with pytest.raises(InvariantError, match="conjugation_symmetry"):
        weil_operator(PolarizedLattice(Matrix.diag([-1, -1]), 2), broken)


def test_float_input_rejected():
    with pytest.raises(NonRationalError):
        parse_scalar(0.5)
    with pytest.raises(NonRationalError):
        parse_scalar("sqrt(2)")


def test_validate_weil_matrix_failures():
    lat = identity_lattice(2)
    with pytest.raises(InvariantError, match="weil_square"):
        validate_weil_matrix(lat, Matrix([[1, 1], [0, 1]]))
    with pytest.raises(InvariantError, match="weil_isometry"):
        validate_weil_matrix(lat, Matrix([[1, 0], [1, -1]]))
    with pytest.raises(InvariantError, match="weil_positivity"):
        validate_weil_matrix(lat, -Matrix.identity(2))


@pytest.mark.parametrize("name", sorted(catalog.EVEN_FIXTURES))
def test_even_fixture_operators(name):
    lat, c = catalog.EVEN_FIXTURES[name]()
    assert c.matrix @ c.matrix == Matrix.identity(lat.rank)
    assert is_isometry(lat, c.matrix)
    assert is_positive_definite(hodge_norm_form(lat, c).gram_c)


@pytest.mark.parametrize("name", sorted(catalog.ODD_FIXTURES))
def test_odd_fixture_operators(name):
    lat, c = catalog.ODD_FIXTURES[name]()
    assert c.matrix @ c.matrix == -Matrix.identity(lat.rank)
    assert is_isometry(lat, c.matrix)


def test_hodge_norm_examples():
    lat, c = fixtures.hyperbolic_swap()
    assert hodge_norm_form(lat, c).gram_c == Matrix.identity(2)
    lat, c = catalog.identity_weight0(3)
    assert hodge_norm_form(lat, c).gram_c == Matrix.identity(3)
    lat, c = catalog.k3_surrogate()
    assert hodge_norm_form(lat, c).gram_c == Matrix.identity(3)
    with pytest.raises(InvariantError, match="even_weight"):
        hodge_norm_form(*fixtures.elliptic_curve())


def test_split_examples():
    lat, c = catalog.identity_weight0()
    assert split_selfdual(c, (2, 3)) == ((2, 3), (0, 0))
    lat, c = fixtures.hyperbolic_swap()
    half = Fraction(1, 2)
    assert split_selfdual(c, (1, 0)) == ((half, half), (half, -half))


@settings(max_examples=60)
@given(st.sampled_from(sorted(catalog.EVEN_FIXTURES)), st.lists(small, min_size=12, max_size=12))
def test_norm_decomposition_identity(name, coords):
    lat, c = catalog.EVEN_FIXTURES[name]()
    v = tuple(coords[: lat.rank])
    form = hodge_norm_form(lat, c)
    plus, minus = split_selfdual(c, v)
    assert c.matrix @ plus == plus and c.matrix @ minus == tuple(-x for x in minus)
    assert tuple(a + b for a, b in zip(plus, minus)) == tuple(Fraction(x) for x in v)
    assert form.norm(v) == form.norm(plus) + form.norm(minus)
    assert pair(lat, v, v) == form.norm(plus) - form.norm(minus)
    assert form.norm(v) >= pair(lat, v, v)
    assert (form.norm(v) == pair(lat, v, v)) == (c.matrix @ v == tuple(Fraction(x) for x in v))


def test_conjugate_weil_examples():
    lat, c = fixtures.hyperbolic_swap()
    assert conjugate_weil(lat, c, Matrix.identity(2)).matrix == c.matrix
    assert conjugate_weil(lat, c, c.matrix).matrix == c.matrix
    with pytest.raises(InvariantError, match="isometry"):
        conjugate_weil(lat, c, Matrix([[1, 1], [0, 1]]))


@settings(max_examples=30)
@given(st.fractions(min_value=Fraction(1, 9), max_value=9))
def test_conjugate_by_real_torus_element(a):
    lat, c = fixtures.hyperbolic_swap()
    g = Matrix.diag([a, 1 / a])
    conj = conjugate_weil(lat, c, g)
    assert conj.matrix == g @ c.matrix @ inverse(g)
    assert is_positive_definite(lat.gram @ conj.matrix)
    # only the coset gK matters: k = C and k = -1 commute with C
    for k in (c.matrix, -Matrix.identity(2)):
        assert conjugate_weil(lat, c, g @ k).matrix == conj.matrix


def test_decomposition_from_filtration_recovers_weil():
    lat = fixtures.elliptic_sym2_hodge_lattice()
    hodge = fixtures.elliptic_sym2_hodge()
    f2 = list(hodge.piece(2).basis)
    f1 = f2 + list(hodge.piece(1).basis)
    rebuilt = decomposition_from_filtration({2: f2, 1: f1}, 2, 3)
    assert weil_operator(lat, rebuilt).matrix == weil_operator(lat, hodge).matrix


def test_load_weil_both_forms():
    lat = fixtures.elliptic_curve_lattice()
    by_matrix = load_weil(lat, {"weil": [[0, 1], [-1, 0]]})
    by_pieces = load_weil(lat, fixtures.elliptic_curve_hodge().to_json())
    assert by_matrix.matrix == by_pieces.matrix


def test_random_isometry_conjugates_of_k3_surrogate():
    rng = random.Random(11)
    lat, c = catalog.k3_surrogate()
    # rotations in the negative plane by rational Pythagorean angles
    for _ in range(10):
        m, n = rng.randint(1, 6), rng.randint(0, 6)
        r = m * m + n * n
        cos, sin = Fraction(m * m - n * n, r), Fraction(2 * m * n, r)
        g = Matrix([[cos, -sin, 0], [sin, cos, 0], [0, 0, 1]])
        assert conjugate_weil(lat, c, g).matrix == c.matrix
