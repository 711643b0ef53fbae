import unittest
from abc import ABC
from typing import ClassVar, List

from lti_discretize.model import ContinuousLtiSystem, DiscreteLtiSystem, DiscretizationOptions
from lti_discretize.oracle import random_stable_suite
from lti_discretize.vanloan import discretize
from tests.helper.systems import RANDOM_SUITE_SEED

SUITE_SIZE = 100
SUITE_DT = 0.1


class AbstractAcceptanceTest(ABC, unittest.TestCase):
    """Shares one seeded random suite, discretized at SUITE_DT, across a test class."""

    systems: ClassVar[List[ContinuousLtiSystem]]
    discretized: ClassVar[List[DiscreteLtiSystem]]

    @classmethod
    def setUpClass(cls):
        cls.systems = random_stable_suite(RANDOM_SUITE_SEED, count=SUITE_SIZE)
        opts = DiscretizationOptions(dt=SUITE_DT)
        cls.discretized = [discretize(system, opts) for system in cls.systems]
