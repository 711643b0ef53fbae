import logging
from typing import Optional, Sequence

import numpy as np
from pydantic import BaseModel, ConfigDict

from lti_discretize.errors import DimensionMismatchError, NonFiniteEntryError
from lti_discretize.model import DiscreteLtiSystem
from .noise import MEASUREMENT_NOISE_STREAM, PROCESS_NOISE_STREAM, sample_noise

logger = logging.getLogger(__name__)


class Trajectory(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    states: np.ndarray
    """(K + 1) × n, x_0 first."""

    outputs: np.ndarray
    """K × p, y_1 … y_K."""

    seed: Optional[int]
    """None for a noise-free run."""

    dt: float

    @property
    def length(self) -> int:
        return self.outputs.shape[0]


def simulate(
        dsys: DiscreteLtiSystem,
        x0: Sequence[float],
        inputs: Sequence[Sequence[float]],
        seed: Optional[int] = None,
) -> Trajectory:
    """
    Run the discrete recursion

        x_k = Ad x_{k−1} + Bd u_{k−1} + w_{k−1},  y_k = Cd x_k + Md v_k

    for k = 1 … K with K = len(inputs).

    Args:
        dsys (DiscreteLtiSystem): The discrete system.
        x0 (Sequence[float]): Initial state, length n.
        inputs (Sequence[Sequence[float]]): u_0 … u_{K−1}, each of length m_u.
        seed (Optional[int]): Noise seed; None runs without noise.

    Returns:
        Trajectory: Deterministic given the seed.

    Raises:
        DimensionMismatchError: If x0 or the inputs do not fit the system.
    """
    n, m_u = dsys.n, dsys.m_u
    x = np.asarray(x0, dtype=np.float64)
    if x.shape != (n,):
        raise DimensionMismatchError(f"x0 has shape {x.shape} but the system has {n} states", [(n, 1)])
    if not np.all(np.isfinite(x)):
        raise NonFiniteEntryError("x0 has non-finite entries")
    u = np.asarray(inputs, dtype=np.float64)
    if u.size == 0 and len(inputs) * m_u == 0:
        u = u.reshape(len(inputs), m_u)
    if u.ndim != 2 or u.shape[1] != m_u:
        raise DimensionMismatchError(f"inputs have shape {u.shape} but the system has {m_u} inputs", [(len(inputs), m_u)])
    steps = u.shape[0]

    if seed is None:
        w = np.zeros((steps, n))
        v = np.zeros((steps, dsys.m_v))
    else:
        w = sample_noise(dsys.Qd, steps, seed, PROCESS_NOISE_STREAM)
        v = sample_noise(dsys.Rd, steps, seed, MEASUREMENT_NOISE_STREAM)
    logger.info(f"Simulating {steps} step(s), {'noise-free' if seed is None else f'seed {seed}'}")

    ad, bd, cd, md = dsys.Ad.array, dsys.Bd.array, dsys.Cd.array, dsys.Md.array
    states = np.empty((steps + 1, n))
    outputs = np.empty((steps, dsys.p))
    states[0] = x
    for k in range(1, steps + 1):
        x = ad @ x + bd @ u[k - 1] + w[k - 1]
        states[k] = x
        outputs[k - 1] = cd @ x + md @ v[k - 1]
    states.setflags(write=False)
    outputs.setflags(write=False)
    return Trajectory(states=states, outputs=outputs, seed=seed, dt=dsys.dt)
