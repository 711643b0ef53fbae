import math
import unittest

import numpy as np

from lti_discretize.errors import DimensionMismatchError, NumericalOverflowError
from lti_discretize.linalg import Matrix, expm
from lti_discretize.linalg.expm import select_pade_degree


def _random_inputs(seed: int, count: int, max_n: int = 6, max_norm: float = 2.0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        a = rng.uniform(-1.0, 1.0, size=(n, n))
        norm = np.max(np.sum(np.abs(a), axis=0))
        yield a * (rng.uniform(0.0, max_norm) / norm)


class TestExpm(unittest.TestCase):
    def test_zero_matrix_is_identity(self):
        self.assertEqual(expm(Matrix.zeros(3, 3)), Matrix.identity(3))
        self.assertEqual(expm(Matrix.zeros(0, 0)).shape, (0, 0))

    def test_diagonal(self):
        result = expm(Matrix.diag([1.0, -1.0])).array
        np.testing.assert_allclose(result, np.diag([math.e, math.exp(-1.0)]), rtol=0, atol=1e-14)

    def test_nilpotent(self):
        result = expm(Matrix([[0.0, 1.0], [0.0, 0.0]])).array
        np.testing.assert_allclose(result, [[1.0, 1.0], [0.0, 1.0]], rtol=0, atol=1e-14)

    def test_rotation_generator(self):
        theta = math.pi / 2
        result = expm(Matrix([[0.0, -theta], [theta, 0.0]])).array
        np.testing.assert_allclose(result, [[0.0, -1.0], [1.0, 0.0]], rtol=0, atol=1e-14)

    def test_scaling_and_squaring_branch(self):
        result = expm(Matrix([[10.0]])).array[0, 0]
        self.assertAlmostEqual(result / math.exp(10.0), 1.0, delta=1e-13)

    def test_semigroup(self):
        for a in _random_inputs(seed=11, count=50):
            once = expm(Matrix(a)).array
            twice = expm(Matrix(2.0 * a)).array
            error = np.max(np.abs(once @ once - twice))
            self.assertLessEqual(error, 1e-12 * np.max(np.abs(twice)) * twice.shape[0])

    def test_determinant_is_exp_of_trace(self):
        for a in _random_inputs(seed=12, count=50, max_n=4):
            det = np.linalg.det(expm(Matrix(a)).array)
            expected = math.exp(np.trace(a))
            self.assertLessEqual(abs(det - expected), 1e-10 * expected)

    def test_inverse(self):
        for a in _random_inputs(seed=13, count=50):
            product = expm(Matrix(a)).array @ expm(Matrix(-a)).array
            np.testing.assert_allclose(product, np.eye(a.shape[0]), rtol=0, atol=1e-11)

    def test_degree_selection(self):
        self.assertEqual(select_pade_degree(0.01), (3, 0))
        self.assertEqual(select_pade_degree(0.2), (5, 0))
        self.assertEqual(select_pade_degree(0.9), (7, 0))
        self.assertEqual(select_pade_degree(2.0), (9, 0))
        self.assertEqual(select_pade_degree(5.0), (13, 0))
        self.assertEqual(select_pade_degree(20.0), (13, 2))

    def test_overflow_raises(self):
        with self.assertRaises(NumericalOverflowError):
            expm(Matrix([[1000.0]]))

    def test_non_square_raises(self):
        with self.assertRaises(DimensionMismatchError):
            expm(Matrix.zeros(2, 3))


if __name__ == '__main__':
    unittest.main()
