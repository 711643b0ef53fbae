from .systems import ContinuousLtiSystem, DiscreteLtiSystem
from .options import DiscretizationOptions
from .validation import (
    Violation,
    ViolationKind,
    collect_violations,
    psd_violation,
    symmetry_violation,
    validate_system,
)
from .measurement import discrete_measurement_covariance

__all__ = [
    "ContinuousLtiSystem", "DiscreteLtiSystem", "DiscretizationOptions", "Violation", "ViolationKind",
    "collect_violations", "psd_violation", "symmetry_violation", "validate_system",
    "discrete_measurement_covariance",
]
