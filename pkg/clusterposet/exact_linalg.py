"""
Exact Linear Algebra Module

Thin layer over SymPy's exact matrices. Every matrix is an
``ImmutableMatrix`` of rationals; zero-dimensional matrices are allowed
and behave as maps to or from the zero space. Bases come out of the
reduced row echelon form, so they are reproducible run to run.
"""

from __future__ import annotations

import logging
from typing import Iterable, List, Sequence

from sympy import ImmutableMatrix, MutableDenseMatrix, Poly, Rational, Symbol

logger = logging.getLogger(__name__)

Matrix = ImmutableMatrix

LAMBDA = Symbol("x")


# ------------------------------------------------------------
# Construction
# ------------------------------------------------------------

def matrix(rows: int, cols: int, entries: Sequence[Sequence] | None = None) -> Matrix:
    """
    Build a rows x cols exact matrix from nested sequences (row-major).
    """
    if rows < 0 or cols < 0:
        raise ValueError("matrix dimensions must be nonnegative")

    if entries is None:
        return zeros(rows, cols)

    flat = [Rational(value) for row in entries for value in row]
    if len(flat) != rows * cols:
        raise ValueError(
            f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(flat)}"
        )
    return ImmutableMatrix(rows, cols, flat)


def zeros(rows: int, cols: int) -> Matrix:
    return ImmutableMatrix.zeros(rows, cols)


def identity(n: int) -> Matrix:
    return ImmutableMatrix.eye(n) if n else zeros(0, 0)


def hstack(blocks: Iterable[Matrix], rows: int) -> Matrix:
    """
    Concatenate blocks side by side; ``rows`` fixes the shape when empty.
    """
    blocks = [b for b in blocks if b.cols]
    if not blocks:
        return zeros(rows, 0)
    return ImmutableMatrix(Matrix.hstack(*blocks))


def vstack(blocks: Iterable[Matrix], cols: int) -> Matrix:
    """
    Stack blocks on top of each other; ``cols`` fixes the shape when empty.
    """
    blocks = [b for b in blocks if b.rows]
    if not blocks:
        return zeros(0, cols)
    return ImmutableMatrix(Matrix.vstack(*blocks))


def column(entries: Sequence) -> Matrix:
    return matrix(len(entries), 1, [[value] for value in entries])


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    """
    Block-diagonal matrix of the given blocks; empty blocks still add
    their rows or columns.
    """
    rows = sum(b.rows for b in blocks)
    cols = sum(b.cols for b in blocks)
    out = MutableDenseMatrix.zeros(rows, cols)
    r = c = 0
    for b in blocks:
        if b.rows and b.cols:
            out[r:r + b.rows, c:c + b.cols] = b
        r += b.rows
        c += b.cols
    return ImmutableMatrix(out)


# ------------------------------------------------------------
# Rank, kernel, image, cokernel
# ------------------------------------------------------------

def rank(A: Matrix) -> int:
    """
    Exact rank of A.
    """
    if A.rows == 0 or A.cols == 0:
        return 0
    return int(A.rank())


def kernel_basis(A: Matrix) -> List[Matrix]:
    """
    Basis of the right null space of A as column vectors.

    The basis is read off the reduced row echelon form: one vector per
    free column, with a 1 in that column.
    """
    if A.cols == 0:
        return []
    if A.rows == 0:
        eye = identity(A.cols)
        return [eye[:, j] for j in range(A.cols)]
    return [ImmutableMatrix(v) for v in A.nullspace()]


def image_basis(A: Matrix) -> Matrix:
    """
    Matrix whose columns are the pivot columns of A (a basis of Im A).
    """
    if A.rows == 0 or A.cols == 0:
        return zeros(A.rows, 0)
    _, pivots = A.rref()
    return hstack([A[:, j] for j in pivots], A.rows)


def cokernel_projection(A: Matrix) -> Matrix:
    """
    Matrix of the canonical surjection k^rows -> k^rows / Im(A).

    The rows of the result span the left null space of A, so the result
    P satisfies P * A = 0 and has full row rank rows(A) - rank(A).
    """
    if A.rows == 0:
        return zeros(0, 0)
    left_kernel = kernel_basis(A.T)
    if not left_kernel:
        return zeros(0, A.rows)
    return ImmutableMatrix(hstack(left_kernel, A.rows).T)


def right_inverse(A: Matrix) -> Matrix:
    """
    A matrix S with A * S = I, for A of full row rank.

    Raises:
        ValueError: A does not have full row rank.
    """
    if A.rows == 0:
        return zeros(A.cols, 0)
    if rank(A) != A.rows:
        raise ValueError(f"right inverse needs full row rank, got rank {rank(A)} of {A.rows}")
    return ImmutableMatrix(A.T * (A * A.T).inv())


def is_zero(A: Matrix) -> bool:
    return all(value == 0 for value in A)


# ------------------------------------------------------------
# Characteristic polynomial
# ------------------------------------------------------------

def char_poly(A: Matrix) -> Poly:
    """
    Characteristic polynomial det(x*I - A) of an integer matrix.

    Raises:
        ValueError: A is not square or has non-integer entries.
    """
    if A.rows != A.cols:
        raise ValueError(f"char_poly needs a square matrix, got {A.rows}x{A.cols}")
    if not all(value.is_integer for value in A):
        raise ValueError("char_poly needs integer entries")

    if A.rows == 0:
        return Poly(1, LAMBDA, domain="ZZ")

    cp = A.charpoly(LAMBDA)
    return Poly(cp.as_expr(), LAMBDA, domain="ZZ")


def poly_coefficients(p: Poly) -> List[int]:
    """
    Integer coefficients, highest degree first.
    """
    return [int(c) for c in p.all_coeffs()]


def poly_text(p: Poly) -> str:
    return str(p.as_expr())
