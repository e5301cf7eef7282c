#!/usr/bin/env python3

"""
One tracked level of the AIM spectrum
"""

# External imports
from typing import Dict, Optional
import mpmath
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Utils
from ..utils.globals import EigenStatus
from ..utils.precision import Real


class EigenResult:
    """
    * n             # level index, ascending in energy
    * energy        # the root at the last checkpoint it was seen at
    * k_converged   # first checkpoint from which the drift stayed below conv_tol, else the last checkpoint seen
    * residual      # |E(k) - E(k - k_stride)| at the last checkpoint seen
    * status        # Converged, MaxIterations or LostRoot
    * history       # checkpoint k -> root, for the convergence diagnostics
    """

    def __init__(self, n: int, energy: Real, k_converged: int, residual: Optional[Real], status: EigenStatus,
                 history: Optional[Dict[int, Real]] = None):
        self.n = n
        self.energy = energy
        self.k_converged = k_converged
        self.residual = residual
        self.status = status
        self.history = history if history is not None else {}

    def to_dict(self) -> OrderedDict:
        return OrderedDict({
            "n": self.n,
            "energy": mpmath.nstr(self.energy, 15),
            "k_converged": self.k_converged,
            "residual": mpmath.nstr(self.residual, 5) if self.residual is not None else None,
            "status": self.status.value
        })

    def __repr__(self) -> str:
        return (
            f"EigenResult(n={self.n}, energy={mpmath.nstr(self.energy, 15)}, k_converged={self.k_converged}, "
            f"residual={mpmath.nstr(self.residual, 3) if self.residual is not None else None}, "
            f"status={self.status.value})"
        )
