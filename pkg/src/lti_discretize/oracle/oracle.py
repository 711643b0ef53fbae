"""
Ground-truth discretization by integrating the defining differential equations.

Nothing here calls the matrix exponential, so it can check the block
exponential method without sharing its failure modes. The three initial
value problems on [0, dt] are

    X' = A X,              X(0) = I   ->  Ad
    Y' = A Y + B,          Y(0) = 0   ->  Bd
    P' = A P + P Aᵀ + LQLᵀ, P(0) = 0   ->  Qd
"""

import logging
from typing import Optional

import numpy as np

from lti_discretize.linalg import Matrix
from lti_discretize.model import (
    ContinuousLtiSystem,
    DiscreteLtiSystem,
    discrete_measurement_covariance,
    validate_system,
)
from .rk4 import integrate_linear_rk4

logger = logging.getLogger(__name__)


def lyapunov_operator(a: np.ndarray) -> np.ndarray:
    """Matrix of P ↦ A P + P Aᵀ acting on row-major vec(P)."""
    ident = np.eye(a.shape[0])
    return np.kron(a, ident) + np.kron(ident, a)


def oracle_discretize(
        system: ContinuousLtiSystem,
        dt: float,
        steps: int,
        measurement_covariance: Optional[Matrix] = None,
) -> DiscreteLtiSystem:
    """
    Discretize by classical RK4 over [0, dt] in ``steps`` uniform steps.

    Args:
        system (ContinuousLtiSystem): The continuous-time system.
        dt (float): Sampling period, > 0.
        steps (int): RK4 step count, ≥ 1.
        measurement_covariance (Optional[Matrix]): Rd given directly.

    Returns:
        DiscreteLtiSystem: Qd is not symmetrized.

    Raises:
        SystemValidationError: If the system is not valid.
        OracleDivergenceError: If the integration produces non-finite state.
    """
    if not (np.isfinite(dt) and dt > 0):
        raise ValueError("dt must be positive")
    if steps < 1:
        raise ValueError("steps must be at least 1")
    validate_system(system)
    n, m_u = system.n, system.m_u
    a = system.A.array
    logger.info(f"Oracle integrating n={n}, m_u={m_u} over dt={dt:g} in {steps} RK4 steps")

    # Ad and Bd share the operator A: integrate [X | Y] together.
    forcing = np.zeros((n, n + m_u))
    forcing[:, n:] = system.B.array
    initial = np.zeros((n, n + m_u))
    initial[:, :n] = np.eye(n)
    state_input = integrate_linear_rk4(a, forcing, initial, dt, steps)

    noise = system.noise_intensity.array.reshape(n * n, 1)
    covariance = integrate_linear_rk4(lyapunov_operator(a), noise, np.zeros((n * n, 1)), dt, steps)

    return DiscreteLtiSystem(
        Ad=Matrix(state_input[:, :n]),
        Bd=Matrix(state_input[:, n:]),
        Cd=system.C,
        Md=system.M,
        Qd=Matrix(covariance.reshape(n, n)),
        Rd=discrete_measurement_covariance(system, dt, measurement_covariance),
        dt=dt,
    )
