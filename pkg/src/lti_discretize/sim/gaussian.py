"""
Deterministic standard normal generation.

Uniforms come from numpy's counter-based Philox bit generator keyed by
SeedSequence([seed, stream]). They are consumed in pairs (U1, U2) in
stream order; u = 2U1 − 1, v = 2U2 − 1, s = u² + v². Pairs with s = 0
or s ≥ 1 are skipped. Each accepted pair yields u·f then v·f with
f = sqrt(−2 ln s / s) (polar Box–Muller). The resulting sequence does not
depend on how the draws are batched.
"""

import numpy as np

# Pairs drawn per refill; about 78.5% of pairs are accepted.
_BATCH_PAIRS = 4096


class PolarGaussianSource:
    def __init__(self, seed: int, stream: int = 0):
        if seed < 0 or stream < 0:
            raise ValueError("seed and stream must be non-negative integers")
        self.seed = seed
        self.stream = stream
        self._generator = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, stream])))
        self._buffer = np.empty(0)

    def _refill(self, pairs: int):
        uniforms = self._generator.random((pairs, 2))
        u = 2.0 * uniforms[:, 0] - 1.0
        v = 2.0 * uniforms[:, 1] - 1.0
        s = u * u + v * v
        accepted = (s > 0.0) & (s < 1.0)
        u, v, s = u[accepted], v[accepted], s[accepted]
        factor = np.sqrt(-2.0 * np.log(s) / s)
        normals = np.column_stack((u * factor, v * factor)).ravel()
        self._buffer = np.concatenate((self._buffer, normals))

    def standard_normal(self, count: int) -> np.ndarray:
        """Next ``count`` i.i.d. N(0, 1) draws of this stream."""
        if count < 0:
            raise ValueError("count must be non-negative")
        while self._buffer.size < count:
            missing_pairs = (count - self._buffer.size + 1) // 2
            self._refill(max(_BATCH_PAIRS, int(missing_pairs * 1.3) + 8))
        draws, self._buffer = self._buffer[:count], self._buffer[count:]
        return draws
