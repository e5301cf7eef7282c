#!/usr/bin/env python3

"""
Finite difference reference eigensolver for the radial equation

    -hbar^2 / (2m) psi'' + [hbar^2 l(l+1) / (2m r^2) + V(r)] psi = E psi,   psi(r_min) = psi(r_max) = 0

Three point second differences give a symmetric tridiagonal operator, whose lowest eigenvalues are
found by Sturm count bisection in plain double precision. Nothing here touches the jet stack.
"""

# External imports
from typing import List, Optional
import warnings
import numpy as np

# Classes
from ..classes.oracle_grid import OracleGrid
from ..classes.potential_params import PotentialParams
from ..classes.tridiagonal_operator import TridiagonalOperator

# Utils
from .errors import GridTooCoarseWarning, InvalidGridError
from .globals import GRID_TOO_COARSE_TOL, ORACLE_EIGEN_TOL
from .logging import get_logger
from .potential_utils import v_of_r_array

# Set logger
logger = get_logger()

# Smallest pivot allowed in the LDL^T recurrence, relative to the largest operator entry
PIVOT_FLOOR_FACTOR = np.finfo(float).tiny / np.finfo(float).eps


def discretize(p: PotentialParams, grid: OracleGrid) -> TridiagonalOperator:
    """
    diag_j    = hbar^2 / (m h^2) + hbar^2 l(l+1) / (2 m r_j^2) + V(r_j)
    offdiag_j = -hbar^2 / (2 m h^2)
    :param p:
    :param grid:
    :return:
    """
    params = p.as_floats()
    kinetic_scale = params["hbar"] ** 2 / params["mass"]
    step = grid.step
    nodes = grid.nodes

    effective_potential = v_of_r_array(nodes, p)
    if p.ell > 0:
        effective_potential = effective_potential + kinetic_scale * p.ell * (p.ell + 1) / (2 * nodes ** 2)

    logger.debug(f"Discretized on {grid.n_points} interior nodes, h = {step:.3e}")

    return TridiagonalOperator(
        diag=kinetic_scale / step ** 2 + effective_potential,
        offdiag=np.full(grid.n_points - 1, -kinetic_scale / (2 * step ** 2))
    )


def sturm_count(op: TridiagonalOperator, shift: float) -> int:
    """
    Number of eigenvalues strictly below shift, from the negative pivots of the LDL^T factorisation of op - shift
    :param op:
    :param shift:
    :return:
    """
    diag = op.diag.tolist()
    offdiag_sq = (op.offdiag ** 2).tolist()
    pivot_floor = PIVOT_FLOOR_FACTOR * max(1.0, float(np.max(np.abs(op.diag))), abs(shift))

    pivot = diag[0] - shift
    if abs(pivot) < pivot_floor:
        pivot = -pivot_floor
    count = 1 if pivot < 0 else 0

    for index in range(1, len(diag)):
        pivot = diag[index] - shift - offdiag_sq[index - 1] / pivot
        if abs(pivot) < pivot_floor:
            pivot = -pivot_floor
        if pivot < 0:
            count += 1

    return count


def eigen_bisect(op: TridiagonalOperator, count: int, upper: Optional[float] = None,
                 tol: float = ORACLE_EIGEN_TOL) -> List[float]:
    """
    The lowest count eigenvalues, each bisected on the Sturm count to tol absolute
    :param op:
    :param count: count >= 1
    :param upper: optional upper bound on the wanted eigenvalues, tightens the Gershgorin bracket
    :param tol:
    :return: ascending
    """
    if count < 1:
        logger.error(f"count must be at least 1, got {count}")
        raise InvalidGridError(f"count: {count} is below 1")

    count = min(count, len(op))
    gershgorin_lower, gershgorin_upper = op.gershgorin_bounds()
    if upper is not None:
        gershgorin_upper = min(gershgorin_upper, upper)

    eigenvalues = []
    lower_start = gershgorin_lower
    for index in range(count):
        lower, upper_bound = lower_start, gershgorin_upper
        # Invariant: sturm_count(lower) <= index < sturm_count(upper_bound)
        while upper_bound - lower > tol:
            middle = (lower + upper_bound) / 2
            if middle <= lower or middle >= upper_bound:
                # Bracket is down to adjacent doubles
                break
            if sturm_count(op, middle) > index:
                upper_bound = middle
            else:
                lower = middle

        eigenvalue = (lower + upper_bound) / 2
        eigenvalues.append(eigenvalue)
        lower_start = lower
        logger.debug(f"Eigenvalue {index}: {eigenvalue:.12g}")

    return eigenvalues


def _negative_eigenvalues(op: TridiagonalOperator, count: Optional[int]) -> List[float]:
    negative_count = sturm_count(op, 0.0)
    if count is not None:
        negative_count = min(negative_count, count)
    if negative_count == 0:
        return []
    return eigen_bisect(op, negative_count, upper=0.0)


def oracle_spectrum(p: PotentialParams, grid: OracleGrid, count: Optional[int] = None,
                    richardson: bool = True) -> List[float]:
    """
    Negative eigenvalues of the discretized operator, lowest first

    With richardson the same problem is solved on the refined grid (h halved) and
    (4 E_fine - E_coarse) / 3 is returned. Levels whose two grid estimates differ by more than 1e-4
    raise a GridTooCoarseWarning.
    :param p:
    :param grid:
    :param count: cap on the number of levels, None for every bound level
    :param richardson:
    :return:
    """
    logger.info(f"Running the finite difference oracle on {grid}, ell = {p.ell}")

    coarse = _negative_eigenvalues(discretize(p, grid), count)
    if not richardson or len(coarse) == 0:
        return coarse

    fine = _negative_eigenvalues(discretize(p, grid.refined()), len(coarse))
    levels = min(len(coarse), len(fine))

    extrapolated = []
    for n in range(levels):
        if abs(fine[n] - coarse[n]) > GRID_TOO_COARSE_TOL:
            message = (f"Level {n}: the grids with {grid.n_points} and {2 * grid.n_points + 1} points "
                       f"disagree by {abs(fine[n] - coarse[n]):.3e}")
            logger.warning(message)
            warnings.warn(message, GridTooCoarseWarning)
        extrapolated.append((4 * fine[n] - coarse[n]) / 3)

    return [energy for energy in extrapolated if energy < 0]
