import logging

import numpy as np
from pydantic import BaseModel, ConfigDict

from lti_discretize.linalg import Matrix, cholesky_psd, inf_norm
from .gaussian import PolarGaussianSource

logger = logging.getLogger(__name__)

PROCESS_NOISE_STREAM = 0
MEASUREMENT_NOISE_STREAM = 1


def sample_noise(cov: Matrix, count: int, seed: int, stream: int = PROCESS_NOISE_STREAM) -> np.ndarray:
    """
    Draw ``count`` vectors from N(0, cov).

    Each row is F·z, with F the lower factor from ``cholesky_psd`` and z
    filled row by row from a ``PolarGaussianSource(seed, stream)``.

    Returns:
        np.ndarray: Array of shape (count, n).

    Raises:
        IndefiniteMatrixError: If ``cov`` is not positive semi-definite.
    """
    n = cov.rows
    if n == 0:
        return np.zeros((count, 0))
    factor = cholesky_psd(cov).factor.array
    z = PolarGaussianSource(seed, stream).standard_normal(count * n).reshape(count, n)
    return z @ factor.T


class EmpiricalCovariance(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    covariance: Matrix
    """Unbiased (count − 1) sample covariance."""

    max_relative_deviation: float
    """max |sample − cov| / ‖cov‖∞ (absolute when cov is zero)."""

    count: int
    seed: int


def empirical_noise_covariance(cov: Matrix, count: int, seed: int) -> EmpiricalCovariance:
    """
    Sample ``count`` draws from N(0, cov) and measure their covariance.

    Raises:
        ValueError: If ``count`` < 2.
    """
    if count < 2:
        raise ValueError("empirical covariance needs at least 2 samples")
    samples = sample_noise(cov, count, seed)
    centered = samples - samples.mean(axis=0)
    sample_cov = Matrix(centered.T @ centered / (count - 1))
    deviation = float(np.max(np.abs(sample_cov.array - cov.array))) if cov.rows else 0.0
    scale = inf_norm(cov)
    if scale > 0:
        deviation /= scale
    logger.info(f"Empirical covariance from {count} samples deviates by {deviation:.3e} (relative)")
    return EmpiricalCovariance(covariance=sample_cov, max_relative_deviation=deviation, count=count, seed=seed)
