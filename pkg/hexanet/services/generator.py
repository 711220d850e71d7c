import logging
from fractions import Fraction
from typing import Callable, Optional

import numpy as np

from ..core.config import settings
from ..core.exceptions import NonGeneric
from .minors import ExactMatrix, is_generic
from .scalars import Ring, Scalar

logger = logging.getLogger(__name__)


class MatrixGenerator:
    """Seeded random exact matrices with resampling until generic"""

    def __init__(self, seed: int = 42):
        self.seed = seed
        self.rng = np.random.default_rng(seed)

    def rational(self) -> Fraction:
        bound = settings.ENTRY_NUMERATOR_BOUND
        p = int(self.rng.integers(-bound, bound + 1))
        q = int(self.rng.integers(1, settings.ENTRY_DENOMINATOR_BOUND + 1))
        return Fraction(p, q)

    def nonzero_rational(self) -> Fraction:
        value = self.rational()
        while value == 0:
            value = self.rational()
        return value

    def scalar(self, ring: Ring) -> Scalar:
        if ring == Ring.RAT:
            return Scalar.rat(self.rational())
        if ring == Ring.GAUSS:
            return Scalar.gauss(self.rational(), self.rational())
        return Scalar.quat(self.rational(), self.rational(), self.rational(), self.rational())

    def matrix(self, n: int, ring: Ring = Ring.RAT) -> ExactMatrix:
        return ExactMatrix.from_rows([[self.scalar(ring) for _ in range(n)] for _ in range(n)], ring)

    def hermitian(self, n: int, ring: Ring = Ring.GAUSS) -> ExactMatrix:
        """M_ji = conj(M_ij) with a real diagonal; over RAT this is a symmetric matrix"""
        rows = [[Scalar.zero(ring)] * n for _ in range(n)]
        for r in range(n):
            rows[r][r] = Scalar.of(ring, self.rational())
            for c in range(r + 1, n):
                rows[r][c] = self.scalar(ring)
                rows[c][r] = rows[r][c].conjugate()
        return ExactMatrix.from_rows(rows, ring)

    def gram(self, n: int, ring: Ring = Ring.GAUSS) -> ExactMatrix:
        """B B* for a random B; positive definite whenever B is invertible"""
        b = self.matrix(n, ring)
        return b @ b.conjugate_transpose()

    def resample(
        self,
        factory: Callable[[], ExactMatrix],
        accept: Callable[[ExactMatrix], bool] = is_generic,
        budget: Optional[int] = None,
    ) -> ExactMatrix:
        budget = budget or settings.RESAMPLE_BUDGET
        for attempt in range(1, budget + 1):
            candidate = factory()
            if accept(candidate):
                if attempt > 1:
                    logger.debug(f"Accepted sample after {attempt} attempts")
                return candidate
        logger.error(f"No acceptable matrix within {budget} attempts (seed={self.seed})")
        raise NonGeneric(f"resampling budget of {budget} exhausted")

    def generic_matrix(self, n: int, ring: Ring = Ring.RAT) -> ExactMatrix:
        return self.resample(lambda: self.matrix(n, ring))

    def generic_hermitian(self, n: int, ring: Ring = Ring.GAUSS) -> ExactMatrix:
        return self.resample(lambda: self.hermitian(n, ring))

    def generic_gram(self, n: int, ring: Ring = Ring.GAUSS) -> ExactMatrix:
        return self.resample(lambda: self.gram(n, ring))

    def q_hermitian(self, n: int) -> ExactMatrix:
        return self.hermitian(n, Ring.QUAT)
