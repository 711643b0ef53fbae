"""
Classical fourth-order Runge-Kutta integration on array-valued state.
"""

from typing import Callable

import numpy as np

from lti_discretize.errors import OracleDivergenceError

RightHandSide = Callable[[np.ndarray], np.ndarray]


def rk4_step(rhs: RightHandSide, y: np.ndarray, h: float) -> np.ndarray:
    """One classical RK4 step of an autonomous ODE y' = rhs(y)."""
    k1 = rhs(y)
    k2 = rhs(y + (h / 2) * k1)
    k3 = rhs(y + (h / 2) * k2)
    k4 = rhs(y + h * k3)
    return y + h * ((k1 + 2 * k2 + 2 * k3 + k4) / 6)


def _check_finite(y: np.ndarray, step: int):
    if not np.all(np.isfinite(y)):
        raise OracleDivergenceError(f"RK4 state became non-finite by step {step}")


def integrate_rk4(rhs: RightHandSide, y0: np.ndarray, t_end: float, steps: int) -> np.ndarray:
    """
    Integrate y' = rhs(y) from y(0) = y0 to t_end in ``steps`` uniform steps.

    This is the stage-by-stage reference recursion for arbitrary right-hand
    sides. The oracle itself uses ``integrate_linear_rk4``, which must agree
    with it up to rounding.

    Raises:
        OracleDivergenceError: If the state becomes non-finite.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    h = t_end / steps
    y = np.array(y0, dtype=np.float64)
    with np.errstate(over='ignore', invalid='ignore'):
        for _ in range(steps):
            y = rk4_step(rhs, y, h)
    _check_finite(y, steps)
    return y


def integrate_linear_rk4(
        operator: np.ndarray,
        forcing: np.ndarray,
        y0: np.ndarray,
        t_end: float,
        steps: int,
) -> np.ndarray:
    """
    RK4 for the linear ODE Y' = operator·Y + forcing with matrix-valued Y.

    For a linear right-hand side one RK4 step is the affine map
    Y ↦ Φ·Y + γ, where Φ is one step applied to the identity without
    forcing and γ is one step applied to zero with forcing. Both are
    formed with ``rk4_step`` once and the map is iterated ``steps`` times,
    which reproduces the stage-by-stage recursion up to rounding.

    Raises:
        OracleDivergenceError: If the state becomes non-finite.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    h = t_end / steps
    size = operator.shape[0]
    with np.errstate(over='ignore', invalid='ignore'):
        phi = rk4_step(lambda y: operator @ y, np.eye(size), h)
        gamma = rk4_step(lambda y: operator @ y + forcing, np.zeros_like(forcing, dtype=np.float64), h)
        y = np.array(y0, dtype=np.float64)
        for _ in range(steps):
            y = phi @ y + gamma
    _check_finite(y, steps)
    return y
