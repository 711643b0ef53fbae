import math
import unittest

import numpy as np

from lti_discretize.errors import DimensionMismatchError, OracleDivergenceError
from lti_discretize.linalg import Matrix
from lti_discretize.model import ContinuousLtiSystem, DiscreteLtiSystem
from lti_discretize.oracle import (
    compare,
    gershgorin_abscissa_bound,
    integrate_linear_rk4,
    integrate_rk4,
    lyapunov_operator,
    oracle_discretize,
    random_stable_suite,
    rk4_step,
)
from tests.helper.systems import double_integrator, double_integrator_expected, scalar_expected, scalar_system


def _scalar_discrete(qd: float, dt: float = 0.1) -> DiscreteLtiSystem:
    return DiscreteLtiSystem(
        Ad=Matrix([[0.5]]), Bd=Matrix([[1.0]]), Cd=Matrix([[1.0]]), Md=Matrix([[1.0]]),
        Qd=Matrix([[qd]]), Rd=Matrix([[0.2]]), dt=dt,
    )


class TestRk4(unittest.TestCase):
    def test_constant_right_hand_side_is_exact(self):
        y = rk4_step(lambda y: np.full_like(y, 3.0), np.zeros(2), 0.5)
        np.testing.assert_array_equal(y, [1.5, 1.5])

    def test_exponential_decay(self):
        y = integrate_rk4(lambda y: -y, np.array([1.0]), 1.0, 100)
        self.assertAlmostEqual(y[0], math.exp(-1.0), delta=1e-9)

    def test_linear_map_matches_stagewise_recursion(self):
        operator = np.array([[-1.0, 0.5], [0.0, -2.0]])
        forcing = np.array([[1.0], [2.0]])
        y0 = np.array([[0.3], [-0.1]])
        stagewise = integrate_rk4(lambda y: operator @ y + forcing, y0, 0.8, 40)
        affine = integrate_linear_rk4(operator, forcing, y0, 0.8, 40)
        np.testing.assert_allclose(affine, stagewise, rtol=0, atol=1e-14)

    def test_convergence_order(self):
        errors = []
        for steps in (8, 16, 32, 64):
            y = integrate_linear_rk4(np.array([[-1.0]]), np.zeros((1, 1)), np.ones((1, 1)), 1.0, steps)
            errors.append(abs(y[0, 0] - math.exp(-1.0)))
        for coarse, fine in zip(errors, errors[1:]):
            self.assertTrue(12.0 <= coarse / fine <= 20.0, f"ratio {coarse / fine}")

    def test_divergence_raises(self):
        with self.assertRaises(OracleDivergenceError):
            integrate_linear_rk4(np.array([[1e3]]), np.zeros((1, 1)), np.ones((1, 1)), 100.0, 100)

    def test_steps_must_be_positive(self):
        with self.assertRaises(ValueError):
            integrate_linear_rk4(np.eye(1), np.zeros((1, 1)), np.ones((1, 1)), 1.0, 0)
        with self.assertRaises(ValueError):
            integrate_rk4(lambda y: y, np.ones(1), 1.0, 0)


class TestOracleDiscretize(unittest.TestCase):
    def test_single_step_pure_integrator(self):
        system = ContinuousLtiSystem(A=[[0.0]], B=[[1.0]], L=[[1.0]], Q=[[2.0]], C=[[1.0]])
        result = oracle_discretize(system, 0.5, 1)
        self.assertEqual(result.Ad, Matrix([[1.0]]))
        self.assertEqual(result.Bd, Matrix([[0.5]]))
        self.assertEqual(result.Qd, Matrix([[1.0]]))

    def test_scalar_closed_form(self):
        result = oracle_discretize(scalar_system(), 1.0, 1000)
        for got, expected in zip((result.Ad, result.Bd, result.Qd), scalar_expected(-1.0, 2.0, 3.0, 1.0)):
            self.assertAlmostEqual(got.array[0, 0] / expected, 1.0, delta=1e-10)

    def test_double_integrator(self):
        result = oracle_discretize(double_integrator(q=1.0), 0.1, 100)
        ad, bd, qd = double_integrator_expected(1.0, 0.1)
        np.testing.assert_allclose(result.Qd.array, qd, rtol=0, atol=1e-12)
        np.testing.assert_allclose(result.Ad.array, ad, rtol=0, atol=1e-12)
        np.testing.assert_allclose(result.Bd.array, bd, rtol=0, atol=1e-12)

    def test_qd_symmetric_without_symmetrization(self):
        for system in random_stable_suite(seed=5, count=10):
            qd = oracle_discretize(system, 0.1, 200).Qd.array
            np.testing.assert_allclose(qd, qd.T, rtol=0, atol=1e-12)

    def test_rejects_bad_arguments(self):
        with self.assertRaises(ValueError):
            oracle_discretize(scalar_system(), 0.0, 10)
        with self.assertRaises(ValueError):
            oracle_discretize(scalar_system(), 0.1, 0)

    def test_lyapunov_operator_acts_on_row_major_vec(self):
        rng = np.random.default_rng(2)
        a, p = rng.normal(size=(3, 3)), rng.normal(size=(3, 3))
        expected = (a @ p + p @ a.T).reshape(9)
        np.testing.assert_allclose(lyapunov_operator(a) @ p.reshape(9), expected, rtol=0, atol=1e-13)


class TestCompare(unittest.TestCase):
    def test_identical_systems_pass(self):
        system = _scalar_discrete(1.0)
        report = compare(system, system, 1e-8)
        self.assertTrue(report.passed)
        self.assertTrue(all(e.max_abs_error == 0.0 and e.max_rel_error == 0.0 for e in report.errors))
        self.assertEqual([e.name for e in report.errors], ["Ad", "Bd", "Qd", "Cd", "Md", "Rd"])

    def test_perturbed_qd_fails(self):
        report = compare(_scalar_discrete(1.0 + 1e-6), _scalar_discrete(1.0), 1e-8)
        self.assertFalse(report.passed)
        qd = report.error_for("Qd")
        self.assertFalse(qd.passed)
        self.assertAlmostEqual(qd.max_rel_error, 1e-6, delta=1e-12)
        self.assertTrue(report.error_for("Ad").passed)

    def test_exact_rows_need_bit_equality(self):
        method = _scalar_discrete(1.0).model_copy(update={"Rd": Matrix([[0.2 + 1e-15]])})
        report = compare(method, _scalar_discrete(1.0), 1e-3)
        self.assertFalse(report.error_for("Rd").passed)
        self.assertTrue(report.error_for("Rd").exact)

    def test_zero_reference(self):
        zero = _scalar_discrete(0.0)
        self.assertEqual(compare(zero, zero, 1e-8).error_for("Qd").max_rel_error, 0.0)
        self.assertEqual(compare(_scalar_discrete(1e-20), zero, 1e-8).error_for("Qd").max_rel_error, math.inf)

    def test_differing_dt_raises(self):
        with self.assertRaises(ValueError):
            compare(_scalar_discrete(1.0, dt=0.1), _scalar_discrete(1.0, dt=0.2), 1e-8)

    def test_differing_shapes_raise(self):
        other = DiscreteLtiSystem(
            Ad=Matrix.identity(2), Bd=Matrix.zeros(2, 1), Cd=Matrix.zeros(1, 2), Md=Matrix([[1.0]]),
            Qd=Matrix.identity(2), Rd=Matrix([[0.2]]), dt=0.1,
        )
        with self.assertRaises(DimensionMismatchError):
            compare(_scalar_discrete(1.0), other, 1e-8)

    def test_render(self):
        passed = compare(_scalar_discrete(1.0), _scalar_discrete(1.0), 1e-8).render()
        failed = compare(_scalar_discrete(2.0), _scalar_discrete(1.0), 1e-8).render()
        self.assertIn("PASS", passed.splitlines()[0])
        self.assertIn("FAIL", failed.splitlines()[0])
        self.assertEqual(len(passed.strip().splitlines()), 7)


class TestRandomSystems(unittest.TestCase):
    def test_suite_is_stable_and_valid(self):
        for system in random_stable_suite(seed=9, count=30):
            self.assertLessEqual(np.max(np.linalg.eigvals(system.A.array).real), -1.0 + 1e-9)
            self.assertLessEqual(system.n, 6)
            self.assertLessEqual(system.m_u, 2)

    def test_suite_is_deterministic(self):
        first, second = random_stable_suite(seed=4, count=5), random_stable_suite(seed=4, count=5)
        for a, b in zip(first, second):
            self.assertEqual(a, b)

    def test_gershgorin_bound(self):
        self.assertEqual(gershgorin_abscissa_bound(np.array([[1.0, -2.0], [0.5, -3.0]])), 3.0)


if __name__ == '__main__':
    unittest.main()
