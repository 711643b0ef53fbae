from .gaussian import PolarGaussianSource
from .noise import EmpiricalCovariance, empirical_noise_covariance, sample_noise
from .simulate import Trajectory, simulate

__all__ = [
    "PolarGaussianSource", "EmpiricalCovariance", "empirical_noise_covariance", "sample_noise",
    "Trajectory", "simulate",
]
