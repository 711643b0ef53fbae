from .rk4 import integrate_linear_rk4, integrate_rk4, rk4_step
from .oracle import lyapunov_operator, oracle_discretize
from .compare import ComparisonReport, MatrixError, compare
from .random_systems import gershgorin_abscissa_bound, random_stable_suite, random_stable_system

__all__ = [
    "integrate_linear_rk4", "integrate_rk4", "rk4_step", "lyapunov_operator", "oracle_discretize",
    "ComparisonReport", "MatrixError", "compare",
    "gershgorin_abscissa_bound", "random_stable_suite", "random_stable_system",
]
