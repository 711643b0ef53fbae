"""
Seeded random stable systems for verification suites.

Distribution: n ~ U{1..max_n}, m_u ~ U{0..max_m_u}, m_w ~ U{1..n},
p ~ U{1..n}, m_v = p. Every entry of A, B, L, C, M and of the Q and R
square-root factors is i.i.d. uniform on [−1, 1]; Q = GGᵀ and R = HHᵀ.
A is then shifted to A − (1 + ρ)I, where ρ is the Gershgorin bound on
the spectral abscissa, so every eigenvalue has real part at most −1.
"""

from typing import List, Optional

import numpy as np

from lti_discretize.model import ContinuousLtiSystem


def gershgorin_abscissa_bound(a: np.ndarray) -> float:
    """max_i (a_ii + Σ_{j≠i} |a_ij|), an upper bound on the largest real part of the eigenvalues."""
    radii = np.sum(np.abs(a), axis=1) - np.abs(np.diag(a))
    return float(np.max(np.diag(a) + radii))


def random_stable_system(
        rng: np.random.Generator,
        n: int,
        m_u: int,
        m_w: Optional[int] = None,
        p: Optional[int] = None,
        m_v: Optional[int] = None,
) -> ContinuousLtiSystem:
    m_w = m_w if m_w is not None else n
    p = p if p is not None else n
    m_v = m_v if m_v is not None else p

    def uniform(rows: int, cols: int) -> np.ndarray:
        return rng.uniform(-1.0, 1.0, size=(rows, cols))

    a = uniform(n, n)
    a = a - (1.0 + gershgorin_abscissa_bound(a)) * np.eye(n)
    g = uniform(m_w, m_w)
    h = uniform(m_v, m_v)
    return ContinuousLtiSystem(
        A=a,
        B=uniform(n, m_u),
        L=uniform(n, m_w),
        C=uniform(p, n),
        M=uniform(p, m_v),
        Q=g @ g.T,
        R=h @ h.T,
    )


def random_stable_suite(seed: int, count: int = 100, max_n: int = 6, max_m_u: int = 2) -> List[ContinuousLtiSystem]:
    """``count`` systems drawn from one PCG64 stream seeded with ``seed``."""
    rng = np.random.default_rng(seed)
    systems = []
    for _ in range(count):
        n = int(rng.integers(1, max_n + 1))
        m_u = int(rng.integers(0, max_m_u + 1))
        m_w = int(rng.integers(1, n + 1))
        p = int(rng.integers(1, n + 1))
        systems.append(random_stable_system(rng, n, m_u, m_w=m_w, p=p))
    return systems
