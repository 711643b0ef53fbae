"""
Dense real matrix value type and the elementary operations on it.
"""

from typing import Any, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from lti_discretize.errors import DimensionMismatchError, NonFiniteEntryError

MatrixLike = Union['Matrix', np.ndarray, Sequence[Sequence[float]]]


class Matrix:
    """
    Immutable dense float64 matrix stored row-major.

    Zero-sized dimensions are allowed: an n×0 input matrix is how a system
    without deterministic input is represented.
    """

    __slots__ = ('_array',)

    def __init__(self, entries: Any, rows: Optional[int] = None, cols: Optional[int] = None):
        """
        Args:
            entries: nested rows, a 2-D array, another Matrix, or a flat
                row-major sequence when ``rows`` and ``cols`` are given.
            rows: row count for flat input.
            cols: column count for flat input.
        """
        if isinstance(entries, Matrix):
            array = entries._array
        elif rows is not None and cols is not None:
            flat = np.asarray(entries, dtype=np.float64).ravel()
            if flat.size != rows * cols:
                raise DimensionMismatchError(
                    f"{flat.size} entries cannot fill a {rows}x{cols} matrix", [(rows, cols)]
                )
            array = flat.reshape(rows, cols)
        else:
            array = np.asarray(entries, dtype=np.float64)
            if array.ndim != 2:
                raise DimensionMismatchError(f"expected a 2-D matrix, got {array.ndim} dimension(s)")

        if rows is not None and array.shape[0] != rows or cols is not None and array.shape[1] != cols:
            raise DimensionMismatchError(
                f"expected a {rows}x{cols} matrix, got {array.shape[0]}x{array.shape[1]}", [array.shape]
            )
        if not np.all(np.isfinite(array)):
            raise NonFiniteEntryError(f"matrix of shape {array.shape[0]}x{array.shape[1]} has non-finite entries")

        array = np.array(array, dtype=np.float64, order='C', copy=True)
        array.setflags(write=False)
        self._array = array

    @classmethod
    def zeros(cls, rows: int, cols: int) -> 'Matrix':
        return cls(np.zeros((rows, cols)))

    @classmethod
    def identity(cls, n: int) -> 'Matrix':
        return cls(np.eye(n))

    @classmethod
    def diag(cls, values: Iterable[float]) -> 'Matrix':
        return cls(np.diag(np.asarray(list(values), dtype=np.float64)))

    @property
    def rows(self) -> int:
        return self._array.shape[0]

    @property
    def cols(self) -> int:
        return self._array.shape[1]

    @property
    def shape(self) -> Tuple[int, int]:
        return self._array.shape

    @property
    def array(self) -> np.ndarray:
        """Read-only view of the underlying float64 array."""
        return self._array

    @property
    def entries(self) -> Tuple[float, ...]:
        """Entries in row-major order."""
        return tuple(float(x) for x in self._array.ravel())

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def T(self) -> 'Matrix':
        return transpose(self)

    def to_rows(self) -> list:
        return self._array.tolist()

    def __matmul__(self, other: 'Matrix') -> 'Matrix':
        return matmul(self, other)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._array, other._array))

    def __hash__(self) -> int:
        return hash((self.shape, self._array.tobytes()))

    def __repr__(self) -> str:
        return f"Matrix({self.to_rows()!r})"


def as_matrix(value: MatrixLike) -> Matrix:
    return value if isinstance(value, Matrix) else Matrix(value)


def matmul(a: Matrix, b: Matrix) -> Matrix:
    """Standard matrix product; rejects mismatched inner dimensions."""
    if a.cols != b.rows:
        raise DimensionMismatchError(
            f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}", [a.shape, b.shape]
        )
    return Matrix(a.array @ b.array)


def transpose(a: Matrix) -> Matrix:
    return Matrix(a.array.T)


def symmetrize(a: Matrix) -> Matrix:
    """Return (a + aᵀ)/2, which is exactly symmetric in floating point."""
    if not a.is_square:
        raise DimensionMismatchError(f"cannot symmetrize a {a.rows}x{a.cols} matrix", [a.shape])
    return Matrix((a.array + a.array.T) / 2.0)


def inf_norm(a: Matrix) -> float:
    """Maximum absolute row sum; 0 for empty matrices."""
    if a.array.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(a.array), axis=1)))


def one_norm(a: Matrix) -> float:
    """Maximum absolute column sum; 0 for empty matrices."""
    if a.array.size == 0:
        return 0.0
    return float(np.max(np.sum(np.abs(a.array), axis=0)))


def asymmetry(a: Matrix) -> float:
    """‖a − aᵀ‖∞ for a square matrix."""
    return inf_norm(Matrix(a.array - a.array.T))


def is_symmetric(a: Matrix, rtol: float = 1e-10) -> bool:
    """True when ‖a − aᵀ‖∞ ≤ rtol · max(1, ‖a‖∞)."""
    return a.is_square and asymmetry(a) <= rtol * max(1.0, inf_norm(a))


def min_symmetric_eigenvalue(a: Matrix) -> float:
    """Smallest eigenvalue of the symmetric part of ``a``; +inf for 0×0."""
    if not a.is_square:
        raise DimensionMismatchError(f"eigenvalues need a square matrix, got {a.rows}x{a.cols}", [a.shape])
    if a.rows == 0:
        return float('inf')
    sym = (a.array + a.array.T) / 2.0
    return float(np.linalg.eigvalsh(sym)[0])
