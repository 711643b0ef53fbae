import logging

from lti_discretize.errors import IndefiniteMatrixError, NumericalOverflowError
from lti_discretize.linalg import Matrix, expm, symmetrize
from lti_discretize.model import (
    ContinuousLtiSystem,
    DiscreteLtiSystem,
    DiscretizationOptions,
    discrete_measurement_covariance,
    psd_violation,
)
from .blocks import build_xi, extract_blocks

logger = logging.getLogger(__name__)


def discretize(system: ContinuousLtiSystem, opts: DiscretizationOptions) -> DiscreteLtiSystem:
    """
    Discretize a continuous-time stochastic LTI system with one matrix exponential.

    Args:
        system (ContinuousLtiSystem): The continuous-time system.
        opts (DiscretizationOptions): Sampling period and related options.

    Returns:
        DiscreteLtiSystem: Ad, Bd (zero-order hold), Qd (exactly symmetric),
        Cd = C, Md = M and Rd = R/dt unless Rd is given in the options.

    Raises:
        SystemValidationError: If the system is not valid.
        NumericalOverflowError: If exp(Ξ·dt) overflows.
        IndefiniteMatrixError: If Qd comes out indefinite beyond tolerance.
    """
    dt = opts.dt
    xi = build_xi(system)
    n, m_u = system.n, system.m_u
    logger.info(f"Discretizing system with n={n}, m_u={m_u}, m_v={system.m_v} at dt={dt:g}")

    try:
        upsilon = expm(Matrix(xi.array * dt))
    except NumericalOverflowError as e:
        raise NumericalOverflowError(f"{e}; ‖A‖·dt is too large, use a smaller dt") from e
    blocks = extract_blocks(upsilon, n, m_u)

    qd = symmetrize(blocks.upsilon12 @ blocks.upsilon11.T)
    # No eigenvalue clipping: an indefinite Qd points at a numerical problem.
    indefinite = psd_violation(qd, "Qd")
    if indefinite is not None:
        raise IndefiniteMatrixError(indefinite.message)

    discrete = DiscreteLtiSystem(
        Ad=blocks.upsilon11,
        Bd=blocks.upsilon34,
        Cd=system.C,
        Md=system.M,
        Qd=qd,
        Rd=discrete_measurement_covariance(system, dt, opts.measurement_covariance),
        dt=dt,
    )
    logger.info(f"Discretization finished at dt={dt:g}")
    return discrete
