from __future__ import annotations

import random

import pytest
from sympy import Rational

from clusterposet import exact_linalg as la


def test_matrix_shape_checked():
    with pytest.raises(ValueError):
        la.matrix(2, 2, [[1, 2, 3]])
    with pytest.raises(ValueError):
        la.matrix(-1, 2)


def test_matrix_entries_are_exact():
    A = la.matrix(1, 2, [[Rational(1, 3), 2]])
    assert A[0, 0] * 3 == 1


def test_rank():
    assert la.rank(la.matrix(2, 2, [[1, 2], [2, 4]])) == 1
    assert la.rank(la.identity(3)) == 3
    assert la.rank(la.zeros(0, 4)) == 0


def test_kernel_basis_of_row():
    basis = la.kernel_basis(la.matrix(1, 2, [[1, 1]]))
    assert len(basis) == 1
    assert list(basis[0]) == [-1, 1]


def test_kernel_of_map_from_zero_space():
    assert la.kernel_basis(la.zeros(3, 0)) == []


def test_kernel_of_map_to_zero_space_is_everything():
    basis = la.kernel_basis(la.zeros(0, 2))
    assert [list(v) for v in basis] == [[1, 0], [0, 1]]


def test_image_basis_keeps_pivot_columns():
    A = la.matrix(2, 3, [[1, 2, 0], [0, 0, 1]])
    image = la.image_basis(A)
    assert image.shape == (2, 2)
    assert la.rank(image) == 2


def test_cokernel_of_identity_is_zero():
    P = la.cokernel_projection(la.identity(2))
    assert P.shape == (0, 2)


def test_cokernel_of_zero_map_is_identity():
    P = la.cokernel_projection(la.zeros(2, 1))
    assert P == la.identity(2)


def test_cokernel_projection_kills_image():
    A = la.matrix(3, 1, [[1], [1], [0]])
    P = la.cokernel_projection(A)
    assert P.shape == (2, 3)
    assert la.is_zero(P * A)
    assert la.rank(P) == 2


def test_stacking_empty_blocks():
    assert la.hstack([], 3).shape == (3, 0)
    assert la.vstack([], 2).shape == (0, 2)
    assert la.hstack([la.zeros(2, 0), la.identity(2)], 2) == la.identity(2)


def random_matrix(rows: int, cols: int, seed: int) -> la.Matrix:
    rng = random.Random(seed)
    return la.matrix(rows, cols, [[rng.randint(-3, 3) for _ in range(cols)] for _ in range(rows)])


@pytest.mark.parametrize(
    "A",
    [
        la.zeros(2, 3),
        la.identity(3),
        la.matrix(2, 3, [[1, 2, 3], [2, 4, 6]]),
        la.zeros(0, 2),
        la.zeros(3, 0),
    ]
    + [random_matrix(3, 4, seed) for seed in range(5)]
    + [random_matrix(4, 2, seed) for seed in range(5)],
)
def test_rank_plus_nullity_is_cols(A):
    kernel = la.kernel_basis(A)
    assert la.rank(A) + len(kernel) == A.cols
    for v in kernel:
        assert la.is_zero(A * v)


def test_right_inverse():
    A = la.matrix(2, 3, [[1, 0, 1], [0, 1, 1]])
    assert A * la.right_inverse(A) == la.identity(2)
    assert la.right_inverse(la.zeros(0, 3)).shape == (3, 0)
    with pytest.raises(ValueError):
        la.right_inverse(la.matrix(2, 2, [[1, 1], [1, 1]]))


def test_block_diagonal_keeps_empty_blocks():
    D = la.block_diagonal([la.identity(1), la.zeros(0, 2), la.matrix(1, 1, [[5]])])
    assert D.shape == (2, 4)
    assert D == la.matrix(2, 4, [[1, 0, 0, 0], [0, 0, 0, 5]])


def test_char_poly_of_rotation():
    p = la.char_poly(la.matrix(2, 2, [[-1, -1], [1, 0]]))
    assert la.poly_coefficients(p) == [1, 1, 1]
    assert la.poly_text(p) == "x**2 + x + 1"


def test_char_poly_of_empty_matrix():
    assert la.poly_coefficients(la.char_poly(la.zeros(0, 0))) == [1]


@pytest.mark.parametrize("seed", range(10))
def test_char_poly_annihilates_its_matrix(seed):
    A = random_matrix(3, 3, seed)
    value = la.zeros(3, 3)
    for c in la.poly_coefficients(la.char_poly(A)):
        value = value * A + c * la.identity(3)
    assert la.is_zero(value)


def test_char_poly_rejects_bad_input():
    with pytest.raises(ValueError):
        la.char_poly(la.zeros(2, 3))
    with pytest.raises(ValueError):
        la.char_poly(la.matrix(1, 1, [[Rational(1, 2)]]))
