from .matrix import (
    Matrix,
    MatrixLike,
    as_matrix,
    asymmetry,
    inf_norm,
    is_symmetric,
    matmul,
    min_symmetric_eigenvalue,
    one_norm,
    symmetrize,
    transpose,
)
from .expm import expm
from .cholesky import CholeskyFactor, JitterPolicy, DEFAULT_JITTER_POLICY, cholesky_psd

__all__ = [
    "Matrix", "MatrixLike", "as_matrix", "asymmetry", "inf_norm", "is_symmetric", "matmul",
    "min_symmetric_eigenvalue", "one_norm", "symmetrize", "transpose", "expm",
    "CholeskyFactor", "JitterPolicy", "DEFAULT_JITTER_POLICY", "cholesky_psd",
]
