#!/usr/bin/env python3

"""
Symmetric tridiagonal operator, stored as its diagonal and single off-diagonal
"""

# External imports
from typing import Sequence, Tuple
import numpy as np

# Utils
from ..utils.errors import InvalidGridError
from ..utils.logging import get_logger

# Set logger
logger = get_logger()


class TridiagonalOperator:

    def __init__(self, diag: Sequence[float], offdiag: Sequence[float]):
        self.diag = np.asarray(diag, dtype=float)
        self.offdiag = np.asarray(offdiag, dtype=float)

        if len(self.diag) == 0:
            logger.error("A tridiagonal operator needs at least one diagonal entry")
            raise InvalidGridError("diag: empty")

        if len(self.offdiag) != len(self.diag) - 1:
            logger.error(f"Off-diagonal has {len(self.offdiag)} entries, expected {len(self.diag) - 1}")
            raise InvalidGridError(f"offdiag: length {len(self.offdiag)} does not match diag length {len(self.diag)}")

    def __len__(self) -> int:
        return len(self.diag)

    def gershgorin_bounds(self) -> Tuple[float, float]:
        """
        Every eigenvalue lies in [lower, upper]
        """
        radius = np.zeros_like(self.diag)
        radius[:-1] += np.abs(self.offdiag)
        radius[1:] += np.abs(self.offdiag)

        return float(np.min(self.diag - radius)), float(np.max(self.diag + radius))

    def to_dense(self) -> np.ndarray:
        return np.diag(self.diag) + np.diag(self.offdiag, 1) + np.diag(self.offdiag, -1)
