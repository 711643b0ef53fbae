import math
from typing import List

import jinja2
import numpy as np
from pydantic import BaseModel, ConfigDict

from lti_discretize.errors import DimensionMismatchError
from lti_discretize.linalg import Matrix, inf_norm
from lti_discretize.model import DiscreteLtiSystem
from lti_discretize.utils.utils import load_template

TOLERANCE_CHECKED = ("Ad", "Bd", "Qd")
EXACT_CHECKED = ("Cd", "Md", "Rd")


class MatrixError(BaseModel):
    model_config = ConfigDict(frozen=True)

    name: str
    """Matrix name, e.g. "Qd"."""

    max_abs_error: float
    """Largest entrywise absolute difference."""

    max_rel_error: float
    """max_abs_error / ‖reference‖∞; 0 for a zero reference with no error, inf otherwise."""

    exact: bool
    """True when the matrix must match bit for bit rather than within tolerance."""

    passed: bool


class ComparisonReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    dt: float
    tolerance: float
    errors: List[MatrixError]

    @property
    def passed(self) -> bool:
        return all(error.passed for error in self.errors)

    def error_for(self, name: str) -> MatrixError:
        for error in self.errors:
            if error.name == name:
                return error
        raise KeyError(name)

    def render(self) -> str:
        template = jinja2.Template(load_template('comparison_report.jinja'), keep_trailing_newline=True)
        return template.render(report=self)


def _errors(method: Matrix, reference: Matrix) -> tuple[float, float]:
    if method.array.size == 0:
        return 0.0, 0.0
    max_abs = float(np.max(np.abs(method.array - reference.array)))
    scale = inf_norm(reference)
    if scale == 0.0:
        return max_abs, 0.0 if max_abs == 0.0 else math.inf
    return max_abs, max_abs / scale


def compare(method: DiscreteLtiSystem, reference: DiscreteLtiSystem, tol: float) -> ComparisonReport:
    """
    Compare a discretization against a reference one.

    Ad, Bd and Qd pass when their relative error is at most ``tol``; Cd, Md
    and Rd must be exactly equal.

    Raises:
        DimensionMismatchError: If any matrix shape differs.
        ValueError: If the sampling periods differ.
    """
    if method.dt != reference.dt:
        raise ValueError(f"sampling periods differ: {method.dt!r} vs {reference.dt!r}")
    errors = []
    for name in TOLERANCE_CHECKED + EXACT_CHECKED:
        ours, theirs = getattr(method, name), getattr(reference, name)
        if ours.shape != theirs.shape:
            raise DimensionMismatchError(
                f"{name} is {ours.rows}x{ours.cols} in one system and {theirs.rows}x{theirs.cols} in the other",
                [ours.shape, theirs.shape],
            )
        max_abs, max_rel = _errors(ours, theirs)
        exact = name in EXACT_CHECKED
        passed = max_abs == 0.0 if exact else max_rel <= tol
        errors.append(MatrixError(name=name, max_abs_error=max_abs, max_rel_error=max_rel, exact=exact, passed=passed))
    return ComparisonReport(dt=method.dt, tolerance=tol, errors=errors)
