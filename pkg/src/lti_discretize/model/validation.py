"""
Structural and stochastic checks for continuous-time systems.

Violations are reported in a fixed order: every dimension rule first
(A, B, L, Q, C, M, R, in that order), then for Q and then R the symmetry
rule followed by the semi-definiteness rule. A matrix with a dimension
violation is not checked spectrally.

Non-finite entries never reach these checks: ``Matrix`` rejects them when
it is built. ``ViolationKind.NON_FINITE`` is reported by the document
reader, which builds each matrix itself.
"""

import logging
from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from lti_discretize.errors import IndefiniteMatrixError, SystemValidationError
from lti_discretize.linalg import Matrix, asymmetry, cholesky_psd, inf_norm, min_symmetric_eigenvalue
from .systems import ContinuousLtiSystem

logger = logging.getLogger(__name__)

SYMMETRY_RTOL = 1e-10
PSD_RTOL = 1e-10
# Largest size checked with a dense symmetric eigenvalue solve.
EIGENVALUE_CHECK_MAX_SIZE = 32


class ViolationKind(str, Enum):
    DIMENSION = "dimension"
    NON_FINITE = "non_finite"
    ASYMMETRIC = "asymmetric"
    INDEFINITE = "indefinite"


class Violation(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: ViolationKind
    """Which rule was broken."""

    matrices: Tuple[str, ...]
    """Names of the matrices involved."""

    message: str
    """Human readable description."""


def _shape(m: Matrix) -> str:
    return f"{m.rows}x{m.cols}"


def symmetry_violation(matrix: Matrix, name: str) -> Optional[Violation]:
    skew = asymmetry(matrix)
    if skew > SYMMETRY_RTOL * max(1.0, inf_norm(matrix)):
        return Violation(
            kind=ViolationKind.ASYMMETRIC,
            matrices=(name,),
            message=f"{name} is not symmetric: ‖{name} − {name}ᵀ‖∞ = {skew:.3e}",
        )
    return None


def psd_violation(matrix: Matrix, name: str) -> Optional[Violation]:
    """Check min eigenvalue ≥ −1e-10 · ‖matrix‖∞ for a symmetric matrix."""
    if matrix.rows > EIGENVALUE_CHECK_MAX_SIZE:
        try:
            cholesky_psd(matrix)
        except IndefiniteMatrixError as e:
            return Violation(kind=ViolationKind.INDEFINITE, matrices=(name,), message=f"{name} is indefinite: {e}")
        return None

    smallest = min_symmetric_eigenvalue(matrix)
    if smallest < -PSD_RTOL * inf_norm(matrix):
        return Violation(
            kind=ViolationKind.INDEFINITE,
            matrices=(name,),
            message=f"{name} is indefinite: smallest eigenvalue {smallest:.6g}",
        )
    return None


def _dimension_violations(system: ContinuousLtiSystem) -> Tuple[List[Violation], List[str]]:
    violations: List[Violation] = []
    broken: List[str] = []

    def report(names: Tuple[str, ...], message: str):
        violations.append(Violation(kind=ViolationKind.DIMENSION, matrices=names, message=message))
        broken.append(names[0])

    a = system.A
    n = a.rows
    if not a.is_square:
        report(("A",), f"A must be square, got {_shape(a)}")
    elif n < 1:
        report(("A",), "A must have at least one state")
    if system.B.rows != n:
        report(("B", "A"), f"B has {system.B.rows} rows but A is {_shape(a)}")
    if system.L.rows != n:
        report(("L", "A"), f"L has {system.L.rows} rows but A is {_shape(a)}")
    m_w = system.L.cols
    if system.Q.shape != (m_w, m_w):
        report(("Q", "L"), f"Q is {_shape(system.Q)} but L is {_shape(system.L)} (expected {m_w}x{m_w})")
    if system.C.cols != n:
        report(("C", "A"), f"C has {system.C.cols} columns but A is {_shape(a)}")
    if system.M.rows != system.C.rows:
        report(("M", "C"), f"M has {system.M.rows} rows but C is {_shape(system.C)}")
    m_v = system.M.cols
    if system.R.shape != (m_v, m_v):
        report(("R", "M"), f"R is {_shape(system.R)} but M is {_shape(system.M)} (expected {m_v}x{m_v})")
    return violations, broken


def collect_violations(system: ContinuousLtiSystem) -> List[Violation]:
    """
    Return every rule the system violates, in the documented order.

    An empty list means the system is valid.
    """
    violations, broken = _dimension_violations(system)
    for name in ("Q", "R"):
        if name in broken:
            continue
        matrix = getattr(system, name)
        asymmetric = symmetry_violation(matrix, name)
        if asymmetric is not None:
            violations.append(asymmetric)
            continue
        indefinite = psd_violation(matrix, name)
        if indefinite is not None:
            violations.append(indefinite)
    return violations


def validate_system(system: ContinuousLtiSystem) -> ContinuousLtiSystem:
    """
    Validate a continuous-time system.

    Args:
        system (ContinuousLtiSystem): The system to check.

    Returns:
        ContinuousLtiSystem: The same object, unchanged, when it is valid.

    Raises:
        SystemValidationError: Listing every violated rule.
    """
    violations = collect_violations(system)
    if violations:
        logger.info(f"System rejected with {len(violations)} violation(s)")
        raise SystemValidationError(violations)
    return system
