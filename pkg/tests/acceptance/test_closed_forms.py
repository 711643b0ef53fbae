import unittest

import numpy as np

from lti_discretize.linalg import Matrix, inf_norm
from lti_discretize.model import ContinuousLtiSystem, DiscretizationOptions
from lti_discretize.vanloan import discretize
from tests.helper.systems import (
    double_integrator,
    double_integrator_expected,
    scalar_expected,
    scalar_system,
)


def _relative_error(got: np.ndarray, expected: np.ndarray) -> float:
    return float(np.max(np.abs(got - expected))) / inf_norm(Matrix(expected))


class TestClosedForms(unittest.TestCase):
    def test_scalar_system(self):
        result = discretize(scalar_system(a=-1.0, b=2.0, q=3.0), DiscretizationOptions(dt=1.0))
        expected = scalar_expected(-1.0, 2.0, 3.0, 1.0)
        for got, value in zip((result.Ad, result.Bd, result.Qd), expected):
            self.assertLessEqual(abs(got.array[0, 0] - value), 1e-12 * abs(value))

    def test_double_integrator(self):
        for q in (1.0, 2.5):
            for dt in (0.01, 0.1, 1.0):
                with self.subTest(q=q, dt=dt):
                    result = discretize(double_integrator(q=q), DiscretizationOptions(dt=dt))
                    ad, bd, qd = double_integrator_expected(q, dt)
                    self.assertLessEqual(_relative_error(result.Ad.array, ad), 1e-12)
                    self.assertLessEqual(_relative_error(result.Bd.array, bd), 1e-12)
                    self.assertLessEqual(_relative_error(result.Qd.array, qd), 1e-12)


class TestSmallStepOrder(unittest.TestCase):
    def _deviations(self, system, dt):
        result = discretize(system, DiscretizationOptions(dt=dt))
        n = system.n
        return (
            inf_norm(Matrix(result.Ad.array - np.eye(n) - system.A.array * dt)),
            inf_norm(Matrix(result.Bd.array - system.B.array * dt)),
            inf_norm(Matrix(result.Qd.array - system.noise_intensity.array * dt)),
        )

    def test_deviation_shrinks_quadratically(self):
        systems = (
            scalar_system(a=-1.0, b=2.0, q=3.0),
            ContinuousLtiSystem(
                A=[[-1.0, 0.5], [0.2, -2.0]], B=[[1.0], [0.5]], L=np.eye(2), Q=np.diag([1.0, 2.0]), C=[[1.0, 0.0]],
            ),
        )
        for system in systems:
            coarse, fine = self._deviations(system, 1e-2), self._deviations(system, 5e-3)
            for big, small in zip(coarse, fine):
                self.assertTrue(3.0 <= big / small <= 5.0, f"ratio {big / small}")


if __name__ == '__main__':
    unittest.main()
