import math
import unittest

import numpy as np

from lti_discretize.linalg import Matrix, expm


class TestExpmSuite(unittest.TestCase):
    def test_exact_cases(self):
        theta = math.pi / 2
        cases = (
            (np.zeros((4, 4)), np.eye(4)),
            (np.diag([1.0, -1.0]), np.diag([math.e, math.exp(-1.0)])),
            (np.array([[0.0, 1.0], [0.0, 0.0]]), np.array([[1.0, 1.0], [0.0, 1.0]])),
            (np.array([[0.0, -theta], [theta, 0.0]]), np.array([[0.0, -1.0], [1.0, 0.0]])),
        )
        for a, expected in cases:
            np.testing.assert_allclose(expm(Matrix(a)).array, expected, rtol=0, atol=1e-14)

    def test_identities_on_random_inputs(self):
        rng = np.random.default_rng(99)
        for _ in range(100):
            n = int(rng.integers(1, 7))
            a = rng.uniform(-1.0, 1.0, size=(n, n))
            a *= rng.uniform(0.0, 2.0) / np.max(np.sum(np.abs(a), axis=0))
            once, twice = expm(Matrix(a)).array, expm(Matrix(2.0 * a)).array
            self.assertLessEqual(np.linalg.norm(once @ once - twice), 1e-12 * np.linalg.norm(twice))
            np.testing.assert_allclose(once @ expm(Matrix(-a)).array, np.eye(n), rtol=0, atol=1e-11)
            if n <= 4:
                expected = math.exp(np.trace(a))
                self.assertLessEqual(abs(np.linalg.det(once) - expected), 1e-10 * expected)


if __name__ == '__main__':
    unittest.main()
