import random
from fractions import Fraction

import pytest

from drazinlab import (
    GaussianRational,
    Matrix,
    ShapeError,
    SingularMatrixError,
    block_diag,
    inverse,
    null_space_basis,
    one_inverse,
    rank,
    rref,
    solve,
)
from util import (
    as_matrix,
    assert_matrix_equals,
    imat_eye,
    imat_mul,
    rand_gauss_matrix,
    rand_int_matrix,
    rand_rank_matrix,
)


def test_identity_power():
    eye = Matrix.identity(2)
    assert eye**5 == eye
    assert eye**0 == eye


def test_product_matches_int_oracle():
    a = [[1, 1], [1, 0]]
    b = [[1, -1], [0, 0]]
    assert_matrix_equals(as_matrix(a) * as_matrix(b), imat_mul(a, b))
    assert imat_mul(a, b) == [[1, -1], [1, -1]]


def test_nilpotent_square_is_zero():
    j = as_matrix([[0, 1], [0, 0]])
    assert (j**2).is_zero()


def test_power_by_repeated_product():
    rng = random.Random(7)
    a = rand_int_matrix(rng, 4)
    by_hand = Matrix.identity(4)
    for k in range(6):
        assert a**k == by_hand
        by_hand = by_hand * a


def test_shape_errors():
    a = Matrix.zeros(2, 3)
    b = Matrix.zeros(2, 3)
    with pytest.raises(ShapeError):
        a * b
    with pytest.raises(ShapeError):
        a + Matrix.zeros(3, 2)
    with pytest.raises(ShapeError):
        a**2
    with pytest.raises(ValueError):
        Matrix.identity(2) ** -1
    with pytest.raises(ShapeError):
        Matrix(2, 2, [1, 2, 3])
    with pytest.raises(ShapeError):
        Matrix(0, 2, [])


def test_rref_examples():
    r, rk, piv = rref(Matrix.identity(2))
    assert r.is_identity() and rk == 2 and piv == (0, 1)

    r, rk, piv = rref(as_matrix([[1, -1], [1, -1]]))
    assert rk == 1 and piv == (0,)
    assert_matrix_equals(r, [[1, -1], [0, 0]])

    assert rref(Matrix.zeros(2, 2)).rank == 0


def test_rref_idempotent_and_rank_stable():
    rng = random.Random(3)
    for _ in range(25):
        n = rng.randint(1, 5)
        m = rng.randint(1, 5)
        a = rand_int_matrix(rng, n, m)
        r = rref(a).matrix
        assert rref(r).matrix == r
        assert rank(a) == rank(r)


def test_inverse_examples():
    assert inverse(Matrix.identity(2)).is_identity()
    assert_matrix_equals(inverse(as_matrix([[1, -1], [0, 1]])), [[1, 1], [0, 1]])
    with pytest.raises(SingularMatrixError):
        inverse(as_matrix([[1, 1], [1, 1]]))
    with pytest.raises(ShapeError):
        inverse(Matrix.zeros(2, 3))


def test_inverse_succeeds_iff_full_rank():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(1, 5)
        a = rand_int_matrix(rng, n)
        if rank(a) == n:
            assert inverse(a) * a == Matrix.identity(n)
            assert a * inverse(a) == Matrix.identity(n)
        else:
            with pytest.raises(SingularMatrixError):
                inverse(a)


def test_one_inverse_examples():
    z = Matrix.zeros(2, 2)
    assert one_inverse(z) == z
    assert one_inverse(Matrix.identity(2)).is_identity()
    ones = as_matrix([[1, 1], [1, 1]])
    g = one_inverse(ones)
    assert ones * g * ones == ones


def test_one_inverse_rectangular_shape():
    a = Matrix.from_rows([[1, 2, 3], [0, 0, 1]])
    g = one_inverse(a)
    assert (g.rows, g.cols) == (3, 2)
    assert a * g * a == a
    assert one_inverse(Matrix.zeros(2, 3)) == Matrix.zeros(3, 2)


def test_one_inverse_property_random():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 6)
        a = rand_rank_matrix(rng, n, rng.randint(0, n))
        g = one_inverse(a)
        assert a * g * a == a
    for _ in range(10):
        a = rand_gauss_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        g = one_inverse(a)
        assert a * g * a == a


def test_associativity_on_random_triples():
    rng = random.Random(13)
    for _ in range(20):
        n, k, m, p = (rng.randint(1, 4) for _ in range(4))
        a = rand_gauss_matrix(rng, n, k)
        b = rand_gauss_matrix(rng, k, m)
        c = rand_gauss_matrix(rng, m, p)
        assert (a * b) * c == a * (b * c)


def test_conjugate_transpose_antihomomorphism():
    rng = random.Random(17)
    a = rand_gauss_matrix(rng, 3, 4)
    b = rand_gauss_matrix(rng, 4, 2)
    assert (a * b).H == b.H * a.H
    assert a.H.H == a
    assert a.T.T == a


def test_scale_and_fraction_entries():
    a = as_matrix([[Fraction(1, 2), 1], [0, Fraction(-3, 2)]])
    assert a.scale(2) == as_matrix([[1, 2], [0, -3]])
    assert 2 * a == a.scale(2)
    assert a.scale(GaussianRational(0, 1)).entry(0, 0) == GaussianRational(0, Fraction(1, 2))


def test_null_space_basis():
    a = as_matrix([[1, 1], [1, 1]])
    basis = null_space_basis(a)
    assert len(basis) == 1
    assert (a * basis[0]).is_zero()
    assert null_space_basis(Matrix.identity(3)) == []


def test_solve():
    a = as_matrix([[1, 2], [3, 4]])
    b = as_matrix([[5], [6]])
    x = solve(a, b)
    assert a * x == b
    inconsistent = solve(as_matrix([[1, 1], [1, 1]]), as_matrix([[0], [1]]))
    assert inconsistent is None


def test_block_diag():
    a = Matrix.identity(2)
    b = as_matrix([[5]])
    m = block_diag(a, b)
    assert m.rows == 3 and m.entry(2, 2) == 5 and m.entry(0, 2).is_zero()


def test_matrices_are_hashable_values():
    a = as_matrix([[1, 2], [3, 4]])
    b = as_matrix([[1, 2], [3, 4]])
    assert len({a, b}) == 1
