"""
Block matrix construction and block extraction.

The block matrix is

    [ A   LQLᵀ   0   0 ]
    [ 0   −Aᵀ    0   0 ]
    [ 0   0      A   B ]
    [ 0   0      0   0 ]

of size (3n + m_u). Its exponential at dt carries exp(A·dt) in the (1,1)
block, the process noise ingredient in the (1,2) block and the zero-order
hold input matrix in the (3,4) block. Without inputs the last block row
and column are dropped.
"""

import numpy as np
from pydantic import BaseModel, ConfigDict

from lti_discretize.errors import DimensionMismatchError
from lti_discretize.linalg import Matrix
from lti_discretize.model import ContinuousLtiSystem, validate_system


class VanLoanBlocks(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    upsilon11: Matrix
    """n×n, exp(A·dt)."""

    upsilon12: Matrix
    """n×n, ∫ exp(A(dt−s)) LQLᵀ exp(−Aᵀs) ds."""

    upsilon34: Matrix
    """n×m_u, ∫ exp(A(dt−s)) B ds."""


def build_xi(system: ContinuousLtiSystem) -> Matrix:
    """
    Build the (3n + m_u) square block matrix for a validated system.

    Raises:
        SystemValidationError: If the system is not valid.
    """
    validate_system(system)
    n, m_u = system.n, system.m_u
    a = system.A.array
    xi = np.zeros((3 * n + m_u, 3 * n + m_u))
    xi[:n, :n] = a
    xi[:n, n:2 * n] = system.noise_intensity.array
    xi[n:2 * n, n:2 * n] = -a.T
    xi[2 * n:3 * n, 2 * n:3 * n] = a
    xi[2 * n:3 * n, 3 * n:] = system.B.array
    return Matrix(xi)


def extract_blocks(upsilon: Matrix, n: int, m_u: int) -> VanLoanBlocks:
    """
    Slice the blocks the discretization needs out of exp(Ξ·dt).

    Raises:
        DimensionMismatchError: If ``upsilon`` is not (3n + m_u) square.
    """
    size = 3 * n + m_u
    if upsilon.shape != (size, size):
        raise DimensionMismatchError(
            f"expected a {size}x{size} matrix for n={n}, m_u={m_u}, got {upsilon.rows}x{upsilon.cols}",
            [upsilon.shape, (size, size)],
        )
    u = upsilon.array
    return VanLoanBlocks(
        upsilon11=Matrix(u[:n, :n]),
        upsilon12=Matrix(u[:n, n:2 * n]),
        upsilon34=Matrix(u[2 * n:3 * n, 3 * n:]),
    )
