from typing import Optional

from lti_discretize.errors import AsymmetricMatrixError, DimensionMismatchError, IndefiniteMatrixError
from lti_discretize.linalg import Matrix
from .systems import ContinuousLtiSystem
from .validation import psd_violation, symmetry_violation


def discrete_measurement_covariance(
        system: ContinuousLtiSystem,
        dt: float,
        direct: Optional[Matrix] = None,
) -> Matrix:
    """
    Covariance of the sampled measurement noise.

    The measurement equation has no dynamics, so Rd = R/dt, one division per
    entry. When ``direct`` is given it is used as Rd instead, after checking
    it is m_v×m_v, symmetric and positive semi-definite. Without measurement
    noise (m_v = 0) the result is 0×0.
    """
    m_v = system.m_v
    if direct is not None:
        if direct.shape != (m_v, m_v):
            raise DimensionMismatchError(
                f"directly specified Rd is {direct.rows}x{direct.cols} but M has {m_v} columns",
                [direct.shape, (m_v, m_v)],
            )
        asymmetric = symmetry_violation(direct, "Rd")
        if asymmetric is not None:
            raise AsymmetricMatrixError(asymmetric.message)
        indefinite = psd_violation(direct, "Rd")
        if indefinite is not None:
            raise IndefiniteMatrixError(indefinite.message)
        return direct
    if m_v == 0:
        return Matrix.zeros(0, 0)
    return Matrix(system.R.array / dt)
