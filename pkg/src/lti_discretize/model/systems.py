"""
Continuous-time and discrete-time LTI system types.

Units are advisory: A is 1/time, Q and R are power spectral densities
(units² · time) and Qd, Rd are covariances (units²). Nothing here checks
dimensional consistency of user data.
"""

import math
from typing import Any

from pydantic import BaseModel, ConfigDict, field_validator, model_validator

from lti_discretize.linalg import Matrix, as_matrix


def _coerce_matrix(value: Any) -> Any:
    if value is None or isinstance(value, Matrix):
        return value
    return as_matrix(value)


class ContinuousLtiSystem(BaseModel):
    """
    ẋ = A x + B u + L w,  y = C x + M v, with white noises of power spectral
    densities Q (for w) and R (for v), uncorrelated with each other.

    Omitted B, M or R become zero-width matrices: B is n×0 without a
    deterministic input, M is p×0 and R is 0×0 without measurement noise.
    Construction does not check the structural rules; use
    ``validate_system`` for that.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    A: Matrix
    B: Matrix
    L: Matrix
    C: Matrix
    M: Matrix
    Q: Matrix
    R: Matrix

    @model_validator(mode='before')
    @classmethod
    def _fill_absent_channels(cls, data: Any) -> Any:
        if not isinstance(data, dict):
            return data
        data = {key: _coerce_matrix(value) for key, value in data.items()}
        a, c = data.get('A'), data.get('C')
        if data.get('B') is None and a is not None:
            data['B'] = Matrix.zeros(a.rows, 0)
        if data.get('M') is None and c is not None:
            data['M'] = Matrix.zeros(c.rows, 0)
        if data.get('R') is None and data.get('M') is not None:
            m_v = data['M'].cols
            data['R'] = Matrix.zeros(m_v, m_v)
        return data

    @property
    def n(self) -> int:
        return self.A.rows

    @property
    def m_u(self) -> int:
        return self.B.cols

    @property
    def m_w(self) -> int:
        return self.L.cols

    @property
    def p(self) -> int:
        return self.C.rows

    @property
    def m_v(self) -> int:
        return self.M.cols

    @property
    def noise_intensity(self) -> Matrix:
        """L·Q·Lᵀ, the only combination of L and Q the discretization depends on."""
        return Matrix(self.L.array @ self.Q.array @ self.L.array.T)


class DiscreteLtiSystem(BaseModel):
    """
    x_k = Ad x_{k−1} + Bd u_{k−1} + w_{k−1},  y_k = Cd x_k + Md v_k,
    with w_k ~ N(0, Qd) and v_k ~ N(0, Rd). The input is held constant
    (zero-order hold) over each sampling period dt.
    """
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    Ad: Matrix
    Bd: Matrix
    Cd: Matrix
    Md: Matrix
    Qd: Matrix
    Rd: Matrix
    dt: float

    @field_validator('dt')
    @classmethod
    def _positive_dt(cls, dt: float) -> float:
        if not (math.isfinite(dt) and dt > 0):
            raise ValueError("dt must be positive and finite")
        return dt

    @model_validator(mode='after')
    def _check_dimensions(self) -> 'DiscreteLtiSystem':
        n = self.Ad.rows
        problems = []
        if self.Ad.shape != (n, n):
            problems.append(f"Ad is {self.Ad.rows}x{self.Ad.cols}, expected square")
        if self.Bd.rows != n:
            problems.append(f"Bd has {self.Bd.rows} rows but Ad is {n}x{n}")
        if self.Qd.shape != (n, n):
            problems.append(f"Qd is {self.Qd.rows}x{self.Qd.cols} but Ad is {n}x{n}")
        if self.Cd.cols != n:
            problems.append(f"Cd has {self.Cd.cols} columns but Ad is {n}x{n}")
        if self.Md.rows != self.Cd.rows:
            problems.append(f"Md has {self.Md.rows} rows but Cd has {self.Cd.rows}")
        if self.Rd.shape != (self.Md.cols, self.Md.cols):
            problems.append(f"Rd is {self.Rd.rows}x{self.Rd.cols} but Md has {self.Md.cols} columns")
        if problems:
            raise ValueError("; ".join(problems))
        return self

    @property
    def n(self) -> int:
        return self.Ad.rows

    @property
    def m_u(self) -> int:
        return self.Bd.cols

    @property
    def p(self) -> int:
        return self.Cd.rows

    @property
    def m_v(self) -> int:
        return self.Md.cols
