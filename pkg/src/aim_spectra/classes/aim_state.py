#!/usr/bin/env python3

"""
The four jets the recurrence carries from one iteration to the next

    lambda_k = lambda'_{k-1} + s_{k-1} + lambda_0 lambda_{k-1}
    s_k      = s'_{k-1} + s_0 lambda_{k-1}

Every iteration spends one derivative so all four jets lose one order per step.
"""

# External imports
from typing import NamedTuple
import mpmath

# Locals
from .jet import Jet
from ..utils.precision import Real


class AimState(NamedTuple):
    lam: Jet
    s: Jet
    lam_prev: Jet
    s_prev: Jet
    k: int

    @classmethod
    def initial(cls, lam0: Jet, s0: Jet) -> 'AimState':
        """
        k = 0 with lambda_{-1} = 1 and s_{-1} = 0, which makes the recurrence reproduce lambda_0, s_0 at k = 0
        """
        return cls(
            lam=lam0,
            s=s0,
            lam_prev=Jet.constant(1, lam0.x0, lam0.order),
            s_prev=Jet.constant(0, lam0.x0, lam0.order),
            k=0
        )

    @property
    def order(self) -> int:
        return self.lam.order

    @property
    def delta(self) -> Real:
        """
        The termination condition lambda_k s_{k-1} - lambda_{k-1} s_k at x0
        """
        return mpmath.fsub(self.lam.value * self.s_prev.value, self.lam_prev.value * self.s.value)
