#!/usr/bin/env python3

"""
The radial grid the finite difference oracle discretizes on

Dirichlet nodes sit at r_min and r_max, the n_points interior nodes are

    r_j = r_min + j h,   j = 1..n_points,   h = (r_max - r_min) / (n_points + 1)

so refined() (2 n_points + 1 interior nodes) halves h exactly and shares every node of the coarse grid.
"""

# External imports
from typing import Dict
import numpy as np
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Classes
from .potential_params import PotentialParams

# Utils
from ..utils.errors import InvalidGridError
from ..utils.globals import DEFAULT_R_MIN, DEFAULT_R_MAX, DEFAULT_N_POINTS
from ..utils.logging import get_logger

# Set logger
logger = get_logger()

MIN_GRID_POINTS = 100


class OracleGrid:
    """
    * r_min      # left Dirichlet node, 1e-3 / lambda by default, 0 only for potentials finite at the origin
    * r_max      # right Dirichlet node
    * n_points   # interior nodes
    """

    def __init__(self, r_min: float = DEFAULT_R_MIN, r_max: float = DEFAULT_R_MAX, n_points: int = DEFAULT_N_POINTS):
        self.r_min = float(r_min)
        self.r_max = float(r_max)
        self.n_points = int(n_points)

        self.check_grid()

    def check_grid(self):
        if self.r_min < 0:
            logger.error(f"r_min must be non-negative, got {self.r_min}")
            raise InvalidGridError(f"r_min: {self.r_min} is negative")

        if not self.r_min < self.r_max:
            logger.error(f"r_min must be below r_max, got r_min = {self.r_min}, r_max = {self.r_max}")
            raise InvalidGridError(f"r_max: {self.r_max} is not above r_min = {self.r_min}")

        if self.n_points < MIN_GRID_POINTS:
            logger.error(f"The grid needs at least {MIN_GRID_POINTS} points, got {self.n_points}")
            raise InvalidGridError(f"n_points: {self.n_points} is below {MIN_GRID_POINTS}")

    @classmethod
    def for_lambda(cls, lam: float, n_points: int = DEFAULT_N_POINTS) -> 'OracleGrid':
        """
        The default window (1e-3 / lambda, 30 / lambda)
        """
        return cls(r_min=DEFAULT_R_MIN / lam, r_max=DEFAULT_R_MAX / lam, n_points=n_points)

    @classmethod
    def for_params(cls, p: PotentialParams, n_points: int = DEFAULT_N_POINTS) -> 'OracleGrid':
        """
        The default window, with the left node moved to r = 0 when psi(0) = 0 is the exact boundary condition
        A cut at 1e-3 / lambda shifts levels with psi linear at the origin by O(1e-2)
        """
        grid = cls.for_lambda(float(p.lam), n_points=n_points)
        if p.is_finite_at_origin:
            return cls(r_min=0, r_max=grid.r_max, n_points=n_points)
        return grid

    @property
    def step(self) -> float:
        return (self.r_max - self.r_min) / (self.n_points + 1)

    @property
    def nodes(self) -> np.ndarray:
        return self.r_min + self.step * np.arange(1, self.n_points + 1)

    def refined(self) -> 'OracleGrid':
        return OracleGrid(r_min=self.r_min, r_max=self.r_max, n_points=2 * self.n_points + 1)

    def to_dict(self) -> OrderedDict:
        return OrderedDict({
            "r_min": self.r_min,
            "r_max": self.r_max,
            "n_points": self.n_points
        })

    @classmethod
    def from_dict(cls, grid_dict: Dict) -> 'OracleGrid':
        grid_dict = {key: value for key, value in grid_dict.items() if value is not None}
        return cls(**grid_dict)

    def __repr__(self) -> str:
        return f"OracleGrid(r_min={self.r_min}, r_max={self.r_max}, n_points={self.n_points})"
