"""
Cholesky factorization for positive semi-definite matrices.
"""

import logging
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from lti_discretize.errors import AsymmetricMatrixError, DimensionMismatchError, IndefiniteMatrixError
from .matrix import Matrix, asymmetry, inf_norm

logger = logging.getLogger(__name__)

SYMMETRY_RTOL = 1e-10


class JitterPolicy(BaseModel):
    model_config = ConfigDict(frozen=True)

    factors: Tuple[float, ...] = Field(default=(0.0, 1e-14, 1e-12, 1e-10))
    """Jitter rungs tried in order, each scaled by max(1, ‖q‖∞)."""

    @field_validator('factors')
    @classmethod
    def _non_negative(cls, factors: Tuple[float, ...]) -> Tuple[float, ...]:
        if not factors:
            raise ValueError("jitter policy needs at least one rung")
        if any(not f >= 0 for f in factors):
            raise ValueError("jitter factors must be non-negative")
        return factors


DEFAULT_JITTER_POLICY = JitterPolicy()


class CholeskyFactor(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    factor: Matrix
    """Lower-triangular L with L·Lᵀ ≈ q + jitter·I."""

    jitter: float
    """Absolute jitter that was added to the diagonal (0 when none was needed)."""


def _factor_once(a: np.ndarray, zero_tol: float) -> Tuple[Optional[np.ndarray], float, int]:
    """
    Left-looking semi-definite Cholesky.

    Returns (L, 0, -1) on success or (None, pivot, index) at the first pivot
    that cannot be factored. A pivot within ±zero_tol is an exact zero only
    if the rest of its column is within zero_tol too; its column is then
    left at zero. Otherwise a near-zero pivot fails, as does any pivot
    below -zero_tol.
    """
    n = a.shape[0]
    lower = np.zeros_like(a)
    for j in range(n):
        row = lower[j, :j]
        pivot = a[j, j] - row @ row
        column = a[j + 1:, j] - lower[j + 1:, :j] @ row
        if pivot < -zero_tol:
            return None, float(pivot), j
        if pivot <= zero_tol:
            if column.size and np.max(np.abs(column)) > zero_tol:
                return None, float(pivot), j
            continue
        diag = np.sqrt(pivot)
        lower[j, j] = diag
        lower[j + 1:, j] = column / diag
    return lower, 0.0, -1


def cholesky_psd(q: Matrix, jitter_policy: JitterPolicy = DEFAULT_JITTER_POLICY) -> CholeskyFactor:
    """
    Factor a symmetric positive semi-definite matrix as L·Lᵀ.

    Each rung of the jitter policy is tried in order on q + εI, where
    ε = factor · max(1, ‖q‖∞); the first rung that factors wins.

    Args:
        q (Matrix): Square matrix, symmetric within 1e-10 · max(1, ‖q‖∞).
        jitter_policy (JitterPolicy): Rungs to try.

    Returns:
        CholeskyFactor: The lower factor and the jitter that was applied.

    Raises:
        DimensionMismatchError: If ``q`` is not square.
        AsymmetricMatrixError: If ``q`` is not symmetric within tolerance.
        IndefiniteMatrixError: If no rung factors; carries the failing pivot.
    """
    if not q.is_square:
        raise DimensionMismatchError(f"cholesky_psd needs a square matrix, got {q.rows}x{q.cols}", [q.shape])
    n = q.rows
    norm = inf_norm(q)
    scale = max(1.0, norm)
    skew = asymmetry(q)
    if skew > SYMMETRY_RTOL * scale:
        raise AsymmetricMatrixError(f"matrix is not symmetric: ‖q − qᵀ‖∞ = {skew:.3e}")

    a = (q.array + q.array.T) / 2.0
    zero_tol = max(n, 1) * np.finfo(np.float64).eps * norm
    pivot, index = 0.0, -1
    for factor in jitter_policy.factors:
        jitter = factor * scale
        lower, pivot, index = _factor_once(a + jitter * np.eye(n), zero_tol)
        if lower is not None:
            if jitter > 0:
                logger.warning(f"cholesky_psd applied diagonal jitter {jitter:.3e} to a {n}x{n} matrix")
            return CholeskyFactor(factor=Matrix(lower), jitter=jitter)
        logger.debug(f"cholesky_psd rung {factor:.0e} failed at pivot {index} = {pivot:.3e}")

    raise IndefiniteMatrixError(
        f"matrix is indefinite: pivot {index} is {pivot:.6g} after the largest jitter", pivot=pivot, index=index
    )
