"""
Matrix exponential by scaling and squaring with diagonal Padé approximants.

Degree selection follows the 1-norm thresholds for degrees 3, 5, 7, 9 and
13; above the degree-13 threshold the argument is scaled by 2**-s, the
degree-13 approximant is evaluated, and the result is squared s times.
"""

import logging
import math
from typing import Tuple

import numpy as np

from lti_discretize.errors import DimensionMismatchError, NumericalOverflowError
from .matrix import Matrix, one_norm

logger = logging.getLogger(__name__)

# Largest 1-norm for which each Padé degree meets unit roundoff in float64.
THETA_3 = 1.495585217958292e-2
THETA_5 = 2.539398330063230e-1
THETA_7 = 9.504178996162932e-1
THETA_9 = 2.097847961257068e0
THETA_13 = 5.371920351148152e0

PADE_COEFFICIENTS = {
    3: (120., 60., 12., 1.),
    5: (30240., 15120., 3360., 420., 30., 1.),
    7: (17297280., 8648640., 1995840., 277200., 25200., 1512., 56., 1.),
    9: (17643225600., 8821612800., 2075673600., 302702400., 30270240.,
        2162160., 110880., 3960., 90., 1.),
    13: (64764752532480000., 32382376266240000., 7771770303897600.,
         1187353796428800., 129060195264000., 10559470521600.,
         670442572800., 33522128640., 1323241920., 40840800., 960960.,
         16380., 182., 1.),
}


def _pade_low(a: np.ndarray, degree: int) -> Tuple[np.ndarray, np.ndarray]:
    """Odd (U) and even (V) parts of the degree 3/5/7/9 Padé numerator."""
    b = PADE_COEFFICIENTS[degree]
    ident = np.eye(a.shape[0])
    a2 = a @ a
    power = ident
    u = b[1] * ident
    v = b[0] * ident
    for i in range(1, degree // 2 + 1):
        power = power @ a2
        u = u + b[2 * i + 1] * power
        v = v + b[2 * i] * power
    return a @ u, v


def _pade_13(a: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    b = PADE_COEFFICIENTS[13]
    ident = np.eye(a.shape[0])
    a2 = a @ a
    a4 = a2 @ a2
    a6 = a2 @ a4
    u = a @ (a6 @ (b[13] * a6 + b[11] * a4 + b[9] * a2)
             + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident)
    v = (a6 @ (b[12] * a6 + b[10] * a4 + b[8] * a2)
         + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident)
    return u, v


def _solve_pade(u: np.ndarray, v: np.ndarray) -> np.ndarray:
    try:
        return np.linalg.solve(v - u, v + u)
    except np.linalg.LinAlgError as e:
        raise NumericalOverflowError(f"Padé denominator is singular: {e}") from e


def select_pade_degree(norm: float) -> Tuple[int, int]:
    """Return (degree, squarings) for a matrix with the given 1-norm."""
    for degree, theta in ((3, THETA_3), (5, THETA_5), (7, THETA_7), (9, THETA_9)):
        if norm <= theta:
            return degree, 0
    squarings = max(0, int(math.ceil(math.log2(norm / THETA_13))))
    return 13, squarings


def expm(a: Matrix) -> Matrix:
    """
    Compute the matrix exponential of a square matrix.

    Args:
        a (Matrix): Square matrix with finite entries.

    Returns:
        Matrix: exp(a). The zero matrix maps exactly to the identity.

    Raises:
        DimensionMismatchError: If ``a`` is not square.
        NumericalOverflowError: If the result leaves the float64 range.
    """
    if not a.is_square:
        raise DimensionMismatchError(f"expm needs a square matrix, got {a.rows}x{a.cols}", [a.shape])
    n = a.rows
    if n == 0 or not np.any(a.array):
        return Matrix.identity(n)

    norm = one_norm(a)
    degree, squarings = select_pade_degree(norm)
    logger.debug(f"expm: n={n}, 1-norm={norm:.3e}, Padé degree {degree}, {squarings} squaring(s)")

    with np.errstate(over='ignore', invalid='ignore'):
        if degree < 13:
            u, v = _pade_low(a.array, degree)
            result = _solve_pade(u, v)
        else:
            scaled = a.array * 2.0 ** -squarings
            u, v = _pade_13(scaled)
            result = _solve_pade(u, v)
            for _ in range(squarings):
                result = result @ result
                if not np.all(np.isfinite(result)):
                    break

    if not np.all(np.isfinite(result)):
        raise NumericalOverflowError(
            f"matrix exponential overflowed (1-norm {norm:.3e}, {squarings} squaring(s))"
        )
    return Matrix(result)
