"""Exact dense linear algebra over rational numbers.

Matrices are numpy arrays with ``dtype=object`` whose entries are
``fractions.Fraction`` values, so every operation is exact.  Only the small
amount of linear algebra the rest of the package needs lives here:
construction, identity, Gauss-Jordan inversion with pivot search, rank,
and float conversion.  All matrices in this package are at most 14x14, so
no attention is paid to asymptotic performance.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

import numpy as np

__all__ = [
    "SingularMatrixError",
    "rat",
    "rarray",
    "rzeros",
    "reye",
    "rat_inv",
    "rat_rank",
    "to_float",
    "is_antisymmetric",
]


class SingularMatrixError(ValueError):
    """Raised when a matrix inversion is requested for a singular matrix."""

    def __init__(self, message: str, rank: int) -> None:
        super().__init__(message)
        self.rank = rank


def rat(value) -> Fraction:
    """Coerce ``value`` to an exact ``Fraction``.

    Accepts ``Fraction``, integers, strings like ``"3/7"``, and floats
    (converted exactly via their binary expansion).
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str, Rational)):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rarray(rows) -> np.ndarray:
    """Build an object-dtype array of ``Fraction`` from nested sequences."""
    arr = np.array(rows, dtype=object)
    flat = arr.reshape(-1)
    for i, entry in enumerate(flat):
        flat[i] = rat(entry)
    return flat.reshape(arr.shape)


def rzeros(shape) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr.reshape(-1)[:] = [Fraction(0)] * arr.size
    return arr


def reye(n: int) -> np.ndarray:
    arr = rzeros((n, n))
    for i in range(n):
        arr[i, i] = Fraction(1)
    return arr


def rat_inv(matrix: np.ndarray) -> np.ndarray:
    """Invert a square matrix of ``Fraction`` entries exactly.

    Gauss-Jordan elimination with row-swap pivoting.  Raises
    ``SingularMatrixError`` if no nonzero pivot can be found.
    """
    n = matrix.shape[0]
    if matrix.shape != (n, n):
        raise ValueError(f"expected a square matrix, got shape {matrix.shape}")

    work = matrix.copy()
    out = reye(n)

    for col in range(n):
        pivot_row = None
        for row in range(col, n):
            if work[row, col] != 0:
                pivot_row = row
                break
        if pivot_row is None:
            rank = rat_rank(matrix)
            raise SingularMatrixError(
                f"matrix is singular (rank {rank} of {n})", rank
            )
        if pivot_row != col:
            work[[col, pivot_row], :] = work[[pivot_row, col], :]
            out[[col, pivot_row], :] = out[[pivot_row, col], :]
        pivot = work[col, col]
        work[col, :] = work[col, :] / pivot
        out[col, :] = out[col, :] / pivot
        for row in range(n):
            if row != col and work[row, col] != 0:
                factor = work[row, col]
                work[row, :] = work[row, :] - factor * work[col, :]
                out[row, :] = out[row, :] - factor * out[col, :]
    return out


def rat_rank(matrix: np.ndarray) -> int:
    """Exact rank via row echelon reduction."""
    work = matrix.copy().astype(object)
    n_rows, n_cols = work.shape
    rank = 0
    for col in range(n_cols):
        pivot_row = None
        for row in range(rank, n_rows):
            if work[row, col] != 0:
                pivot_row = row
                break
        if pivot_row is None:
            continue
        if pivot_row != rank:
            work[[rank, pivot_row], :] = work[[pivot_row, rank], :]
        pivot = work[rank, col]
        work[rank, :] = work[rank, :] / pivot
        for row in range(n_rows):
            if row != rank and work[row, col] != 0:
                work[row, :] = work[row, :] - work[row, col] * work[rank, :]
        rank += 1
        if rank == n_rows:
            break
    return rank


def to_float(matrix: np.ndarray) -> np.ndarray:
    """Convert an object-dtype rational array to float64."""
    return np.asarray(matrix, dtype=float)


def is_antisymmetric(matrix: np.ndarray) -> bool:
    return bool(np.all(matrix == -matrix.T))
