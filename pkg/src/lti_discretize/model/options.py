from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from lti_discretize.linalg import Matrix
from lti_discretize.settings import settings


class DiscretizationOptions(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    dt: float = Field(gt=0, allow_inf_nan=False)
    """Sampling period."""

    oracle_steps: int = Field(default_factory=lambda: settings.oracle_steps, ge=1)
    """Uniform RK4 steps the integration oracle takes over [0, dt]."""

    compare_tolerance: float = Field(default_factory=lambda: settings.compare_tolerance, gt=0, allow_inf_nan=False)
    """Relative tolerance used when comparing against the oracle."""

    measurement_covariance: Optional[Matrix] = None
    """Rd given directly; when set it replaces R/dt."""
