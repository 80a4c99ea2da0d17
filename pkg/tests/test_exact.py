import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from selfdual.errors import DimensionError, NotNilpotentError
from selfdual.exact import (
    Gauss,
    I,
    InconsistentSystem,
    LaurentBivar,
    Matrix,
    UnderdeterminedSystem,
    det,
    format_fraction,
    i_power,
    intersect,
    inverse,
    kernel,
    ldl,
    mat_mul,
    matrix_exp_nilpotent,
    nilpotency_index,
    rank,
    solve_linear,
    span_dim,
    to_fraction,
)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(Gauss, fractions, fractions)


def rat_matrix(n, m=None):
    m = m or n
    return st.lists(st.lists(fractions, min_size=m, max_size=m), min_size=n, max_size=n).map(Matrix)


def gauss_matrix(n):
    return st.lists(st.lists(gauss, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def strictly_lower(n):
    return st.lists(fractions, min_size=n * n, max_size=n * n).map(
        lambda xs: Matrix([[xs[i * n + j] if j < i else 0 for j in range(n)] for i in range(n)])
    )


class TestRationals:
    def test_parse_and_format(self):
        assert to_fraction("3/6") == Fraction(1, 2)
        assert format_fraction(Fraction(4, 2)) == "2"
        assert format_fraction(Fraction(-3, 9)) == "-1/3"

    def test_rejects_bool_and_float(self):
        with pytest.raises(TypeError):
            to_fraction(True)
        with pytest.raises(TypeError):
            to_fraction(0.5)

    @given(fractions)
    def test_canonical_form(self, x):
        assert x.denominator > 0
        assert Fraction(x.numerator, x.denominator) == x


class TestGauss:
    def test_i_squared(self):
        assert I * I == -1
        assert [i_power(k) for k in range(4)] == [1, I, -1, -I]

    @given(gauss)
    def test_conjugation_involution(self, z):
        assert z.conjugate().conjugate() == z

    @given(gauss)
    def test_norm_nonnegative(self, z):
        assert z.norm() >= 0
        assert (z.norm() == 0) == (z == 0)

    @given(gauss, gauss)
    def test_field_ops(self, a, b):
        assert a * b == b * a
        assert (a + b) - b == a
        if b != 0:
            assert (a / b) * b == a

    def test_hash_matches_fraction(self):
        assert hash(Gauss(Fraction(1, 2))) == hash(Fraction(1, 2))
        assert Gauss(3) == 3

    def test_json(self):
        assert Gauss(Fraction(1, 2), -1).to_json() == ["1/2", "-1"]


class TestMatrix:
    def test_identity_product(self):
        assert mat_mul(Matrix.identity(2), Matrix.identity(2)) == Matrix.identity(2)

    def test_rotation_squares_to_minus_identity(self):
        j = Matrix([[0, 1], [-1, 0]])
        assert j @ j == -Matrix.identity(2)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionError):
            Matrix.identity(2) @ Matrix.identity(3)

    @settings(max_examples=30)
    @given(rat_matrix(3), rat_matrix(3))
    def test_schoolbook_oracle(self, a, b):
        prod = a @ b
        for i in range(3):
            for j in range(3):
                assert prod[i, j] == sum(a[i, k] * b[k, j] for k in range(3))

    @settings(max_examples=30)
    @given(rat_matrix(3), rat_matrix(3), rat_matrix(3))
    def test_associativity(self, a, b, c):
        assert (a @ b) @ c == a @ (b @ c)

    @settings(max_examples=30)
    @given(gauss_matrix(2), gauss_matrix(2))
    def test_conjugation_commutes_with_product(self, a, b):
        assert (a @ b).conj() == a.conj() @ b.conj()


class TestSolve:
    def test_identity(self):
        b = (Fraction(3), Fraction(-1, 2), Fraction(7))
        assert solve_linear(Matrix.identity(3), b) == b

    def test_inconsistent(self):
        with pytest.raises(InconsistentSystem):
            solve_linear(Matrix([[1, 1], [2, 2]]), (1, 3))

    def test_underdetermined(self):
        with pytest.raises(UnderdeterminedSystem):
            solve_linear(Matrix([[1, 1], [2, 2]]), (1, 2))

    def test_diagonal(self):
        assert solve_linear(Matrix([[2, 0], [0, 3]]), (1, 1)) == (Fraction(1, 2), Fraction(1, 3))

    @settings(max_examples=30)
    @given(rat_matrix(3))
    def test_inverse_roundtrip(self, a):
        if det(a) == 0:
            with pytest.raises(InconsistentSystem):
                inverse(a)
        else:
            assert a @ inverse(a) == Matrix.identity(3)

    @settings(max_examples=30)
    @given(rat_matrix(3, 4))
    def test_rank_nullity(self, a):
        ker = kernel(a)
        assert rank(a) + len(ker) == 4
        for v in ker:
            assert not any(a @ v)

    def test_intersect(self):
        u = [(1, 0, 0), (0, 1, 0)]
        v = [(0, 1, 0), (0, 0, 1)]
        meet = intersect(u, v)
        assert span_dim(meet) == 1
        assert span_dim(meet + [(0, 1, 0)]) == 1


class TestLDL:
    def test_example(self):
        lower, d = ldl(Matrix([[2, 1], [1, 2]]))
        assert d == (2, Fraction(3, 2))
        assert lower[1, 0] == Fraction(1, 2)

    @settings(max_examples=30)
    @given(strictly_lower(3), st.lists(st.fractions(min_value=Fraction(1, 10), max_value=10), min_size=3, max_size=3))
    def test_reconstructs(self, strict, pivots):
        lower = strict + Matrix.identity(3)
        g = lower @ Matrix.diag(pivots) @ lower.T
        l2, d2 = ldl(g)
        assert l2 == lower and list(d2) == pivots


class TestNilpotentExponential:
    def test_zero(self):
        assert matrix_exp_nilpotent(Matrix.zeros(3)) == Matrix.identity(3)

    def test_degree_one(self):
        x = LaurentBivar.x()
        e = matrix_exp_nilpotent(Matrix([[0, 1], [0, 0]]), x)
        assert e[0, 0] == 1 and e[0, 1] == x and e[1, 0] == 0 and e[1, 1] == 1

    def test_jordan_block_series_oracle(self):
        n = Matrix([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
        expected = Matrix.identity(3) + n * 2 + (n @ n) * Fraction(4, 2)
        assert matrix_exp_nilpotent(n, 2) == expected

    def test_not_nilpotent(self):
        with pytest.raises(NotNilpotentError):
            matrix_exp_nilpotent(Matrix([[1, 0], [0, 0]]))
        assert nilpotency_index(Matrix([[0, 1], [0, 0]])) == 2

    @settings(max_examples=30)
    @given(strictly_lower(4), fractions, fractions)
    def test_group_law(self, n, a, b):
        assert matrix_exp_nilpotent(n, a) @ matrix_exp_nilpotent(n, b) == matrix_exp_nilpotent(n, a + b)


class TestLaurent:
    def test_drop_zero_terms(self):
        x = LaurentBivar.x()
        assert (x - x).terms == {}
        assert not (x - x)

    def test_evaluate(self):
        p = LaurentBivar.x() * 3 + LaurentBivar.s(-2)
        assert p.evaluate(Fraction(1, 3), 2) == Fraction(5, 4)
        with pytest.raises(ZeroDivisionError):
            p.evaluate(0, 0)

    @given(fractions, fractions, st.fractions(min_value=Fraction(1, 5), max_value=5))
    def test_ring_homomorphism(self, a, x, s):
        p = LaurentBivar.x() + LaurentBivar.s(-1) * a
        q = LaurentBivar.s(2) - a
        assert (p * q).evaluate(x, s) == p.evaluate(x, s) * q.evaluate(x, s)
        assert (p + q).evaluate(x, s) == p.evaluate(x, s) + q.evaluate(x, s)

    def test_random_matrix_exp_specialization(self):
        rng = random.Random(3)
        n = Matrix([[0, 0, 0], [rng.randint(1, 5), 0, 0], [rng.randint(-3, 3), rng.randint(1, 4), 0]])
        sym = matrix_exp_nilpotent(n, LaurentBivar.x())
        for _ in range(5):
            x = Fraction(rng.randint(-9, 9), rng.randint(1, 6))
            assert sym.map(lambda e: e.evaluate(x, 1) if isinstance(e, LaurentBivar) else e) == matrix_exp_nilpotent(n, x)
