"""
Reading and writing the JSON documents the command line works with.

A system document holds the continuous-time matrices as nested row-major
arrays. Results (discrete systems and trajectories) are rendered from
templates with every number written to 17 significant digits so that
reading them back reproduces the same float64 values.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

from jsonschema import Draft7Validator
from pydantic import BaseModel, ConfigDict

from lti_discretize.errors import DocumentError, NonFiniteEntryError, SystemValidationError
from lti_discretize.linalg import Matrix
from lti_discretize.model import (
    ContinuousLtiSystem,
    DiscreteLtiSystem,
    Violation,
    ViolationKind,
    collect_violations,
    psd_violation,
    symmetry_violation,
)
from lti_discretize.sim import Trajectory
from lti_discretize.utils.utils import render_template

logger = logging.getLogger(__name__)

_MATRIX_SCHEMA = {
    "type": "array",
    "items": {"type": "array", "items": {"type": "number"}},
}

SYSTEM_DOCUMENT_SCHEMA: Dict[str, Any] = {
    "$schema": "http://json-schema.org/draft-07/schema#",
    "type": "object",
    "properties": {
        "name": {"type": "string"},
        "units": {"type": "string"},
        "A": _MATRIX_SCHEMA,
        "B": _MATRIX_SCHEMA,
        "L": _MATRIX_SCHEMA,
        "C": _MATRIX_SCHEMA,
        "M": _MATRIX_SCHEMA,
        "Q": _MATRIX_SCHEMA,
        "R": _MATRIX_SCHEMA,
        "Rd": _MATRIX_SCHEMA,
    },
    "required": ["A", "L", "C", "Q"],
    "additionalProperties": False,
}

# Parse order; an empty array takes its column count from an earlier matrix.
_MATRIX_FIELDS = ("A", "B", "L", "Q", "C", "M", "R", "Rd")
_EMPTY_WIDTH_FROM = {"Q": ("L", "cols"), "C": ("A", "cols"), "R": ("M", "cols"), "Rd": ("M", "cols")}


class SystemDocument(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    system: ContinuousLtiSystem
    """The validated continuous-time system."""

    measurement_covariance: Optional[Matrix] = None
    """Rd given directly in the document."""

    name: Optional[str] = None
    units: Optional[str] = None


def _parse_matrix(name: str, rows: List[List[float]], parsed: Dict[str, Matrix]) -> Matrix:
    if not rows:
        source, attribute = _EMPTY_WIDTH_FROM.get(name, (None, None))
        width = getattr(parsed[source], attribute) if source in parsed else 0
        return Matrix.zeros(0, width)
    if len({len(row) for row in rows}) != 1:
        raise ValueError(f"{name} has rows of unequal length")
    return Matrix(rows)


def _measurement_covariance_violations(rd: Matrix, system: ContinuousLtiSystem) -> List[Violation]:
    m_v = system.m_v
    if rd.shape != (m_v, m_v):
        return [Violation(
            kind=ViolationKind.DIMENSION,
            matrices=("Rd", "M"),
            message=f"Rd is {rd.rows}x{rd.cols} but M has {m_v} columns (expected {m_v}x{m_v})",
        )]
    violation = symmetry_violation(rd, "Rd") or psd_violation(rd, "Rd")
    return [violation] if violation is not None else []


def parse_system_document(text: str) -> SystemDocument:
    """
    Parse and validate a system document.

    Args:
        text (str): JSON text.

    Returns:
        SystemDocument: The document with a system that passes validation.

    Raises:
        DocumentError: If the text is not JSON or does not match the schema.
        SystemValidationError: If the matrices are malformed or the system
            breaks a structural rule; every problem is listed.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentError(f"system document is not valid JSON: {e}") from e

    errors = sorted(Draft7Validator(SYSTEM_DOCUMENT_SCHEMA).iter_errors(data), key=lambda err: list(err.path))
    if errors:
        details = "; ".join(
            f"{'/'.join(str(p) for p in error.path) or '<document>'}: {error.message}" for error in errors
        )
        raise DocumentError(f"system document does not match the schema: {details}")

    parsed: Dict[str, Matrix] = {}
    violations: List[Violation] = []
    for name in _MATRIX_FIELDS:
        if name not in data:
            continue
        try:
            parsed[name] = _parse_matrix(name, data[name], parsed)
        except NonFiniteEntryError:
            violations.append(Violation(
                kind=ViolationKind.NON_FINITE, matrices=(name,), message=f"{name} has non-finite entries"
            ))
        except ValueError as e:
            violations.append(Violation(kind=ViolationKind.DIMENSION, matrices=(name,), message=str(e)))
    if violations:
        raise SystemValidationError(violations)

    measurement_covariance = parsed.pop("Rd", None)
    system = ContinuousLtiSystem(**parsed)
    violations = collect_violations(system)
    if measurement_covariance is not None and not violations:
        violations = _measurement_covariance_violations(measurement_covariance, system)
    if violations:
        raise SystemValidationError(violations)

    logger.debug(f"Parsed system document with n={system.n}, m_u={system.m_u}, p={system.p}")
    return SystemDocument(
        system=system,
        measurement_covariance=measurement_covariance,
        name=data.get("name"),
        units=data.get("units"),
    )


def load_system_document(path: Union[str, Path]) -> SystemDocument:
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except FileNotFoundError as e:
        raise DocumentError(f"input file '{path}' does not exist") from e
    except OSError as e:
        raise DocumentError(f"cannot read input file '{path}': {e}") from e
    return parse_system_document(text)


def dump_system_document(document: SystemDocument) -> str:
    """Write a system document that parses back to the same matrices."""
    return render_template('system_document.jinja', document=document, system=document.system)


def dump_discrete_system(system: DiscreteLtiSystem) -> str:
    return render_template('discrete_system.jinja', system=system)


def dump_trajectory(trajectory: Trajectory) -> str:
    return render_template('trajectory.jinja', trajectory=trajectory)
