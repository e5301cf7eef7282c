#!/usr/bin/env python3

"""
Evaluate and characterise the four parameter potential

In r:  V(r) = [V0 + V1 tanh^2(lambda r) + V2 tanh^4(lambda r)] / sinh^2(lambda r)
In x:  x = 2 tanh^2(lambda r) - 1 maps (0, inf) onto (-1, 1) and
       V(x) = -phi(x) / omega(x) [V0 + V1 omega(x) / 2 + V2 omega(x)^2 / 4],  omega = x + 1,  phi = x - 1

The Poschl-Teller case V2 = 0, ell = 0 has the closed form spectrum in pt_exact_spectrum.
"""

# External imports
from typing import Callable, List, Optional, Tuple
import numpy as np
import mpmath

# Classes
from ..classes.potential_params import PotentialParams
from ..classes.potential_shape import PotentialShape

# Utils
from .errors import DomainError, UnsupportedParamsError
from .globals import (
    ShapeClassification, CLASSIFY_R_MIN, CLASSIFY_R_MAX, CLASSIFY_POINTS, CLASSIFY_REL_TOL
)
from .logging import get_logger
from .precision import Real, RealLike, working_precision

# Set logger
logger = get_logger()

# Refinement of extrema doesn't need the full AIM precision
CLASSIFY_PRECISION_DIGITS = 30
GOLDEN_RATIO_CONJUGATE = (np.sqrt(5.0) - 1) / 2


def v_of_r(r: RealLike, p: PotentialParams) -> Real:
    """
    V(r) at the current working precision
    :param r: r > 0
    :param p:
    :return:
    """
    r = mpmath.mpf(r)
    if not r > 0:
        logger.error(f"V(r) is only defined for r > 0, got r = {r}")
        raise DomainError(f"r = {r} is not positive")

    lam_r = p.lam * r
    tanh_sq = mpmath.tanh(lam_r) ** 2

    return (p.v0 + p.v1 * tanh_sq + p.v2 * tanh_sq ** 2) / mpmath.sinh(lam_r) ** 2


def v_of_r_array(r: np.ndarray, p: PotentialParams) -> np.ndarray:
    """
    Double precision V(r) over an array of positive radii, for scans and the finite difference oracle
    :param r:
    :param p:
    :return:
    """
    params = p.as_floats()
    lam_r = params["lam"] * np.asarray(r, dtype=float)
    tanh_sq = np.tanh(lam_r) ** 2

    return (params["v0"] + params["v1"] * tanh_sq + params["v2"] * tanh_sq ** 2) / np.sinh(lam_r) ** 2


def x_of_r(r: RealLike, lam: RealLike) -> Real:
    """
    x = 2 tanh^2(lambda r) - 1
    :param r:
    :param lam:
    :return:
    """
    r = mpmath.mpf(r)
    if not r > 0:
        logger.error(f"x(r) is only defined for r > 0, got r = {r}")
        raise DomainError(f"r = {r} is not positive")

    return 2 * mpmath.tanh(mpmath.mpf(lam) * r) ** 2 - 1


def r_of_x(x: RealLike, lam: RealLike) -> Real:
    """
    r = arctanh(sqrt((x + 1) / 2)) / lambda
    :param x:
    :param lam:
    :return:
    """
    x = mpmath.mpf(x)
    if not -1 < x < 1:
        logger.error(f"r(x) is only defined for -1 < x < 1, got x = {x}")
        raise DomainError(f"x = {x} is outside (-1, 1)")

    return mpmath.atanh(mpmath.sqrt((x + 1) / 2)) / mpmath.mpf(lam)


def v_of_x(x: RealLike, p: PotentialParams) -> Real:
    """
    V in the x coordinate, identically V(r(x))
    :param x:
    :param p:
    :return:
    """
    x = mpmath.mpf(x)
    if not -1 < x < 1:
        logger.error(f"V(x) is only defined for -1 < x < 1, got x = {x}")
        raise DomainError(f"x = {x} is outside (-1, 1)")

    omega = x + 1
    phi = x - 1

    return -phi / omega * (p.v0 + p.v1 * omega / 2 + p.v2 * omega ** 2 / 4)


def pt_sqrt_arguments(p: PotentialParams) -> Tuple[Real, Real]:
    """
    The two square root arguments of the Poschl-Teller spectrum in reduced units (hbar = mass = 1),
    1/4 + 2 V0 / lambda^2 and 1/4 - 2 V1 / lambda^2
    :param p:
    :return:
    """
    scale = p.mass / (p.hbar ** 2 * p.lam ** 2)
    return mpmath.mpf(1) / 4 + 2 * p.v0 * scale, mpmath.mpf(1) / 4 - 2 * p.v1 * scale


def pt_level_count(p: PotentialParams) -> int:
    """
    N + 1, the number of levels, where N is the largest integer <= (sqrt(b) - sqrt(a) - 1) / 2
    Returns 0 when N < 0
    :param p:
    :return:
    """
    wall_arg, well_arg = pt_sqrt_arguments(p)
    top_level = int(mpmath.floor((mpmath.sqrt(well_arg) - mpmath.sqrt(wall_arg) - 1) / 2))

    return max(top_level + 1, 0)


def pt_exact_spectrum(p: PotentialParams) -> List[Real]:
    """
    E_n = -(hbar^2 lambda^2 / 2 m) (2n + 1 + sqrt(1/4 + 2 V0 / lambda^2) - sqrt(1/4 - 2 V1 / lambda^2))^2, n = 0..N
    V0, V1 are taken in units of hbar^2 / m, so hbar = mass = 1 gives the closed form verbatim
    :param p: V2 = 0 and ell = 0
    :return: ascending energies, empty when there are no bound states
    """
    if p.v2 != 0:
        logger.error(f"The exact spectrum needs V2 = 0, got V2 = {p.v2}")
        raise UnsupportedParamsError(f"v2: {p.v2} is not zero")

    if p.ell != 0:
        logger.error(f"The exact spectrum needs ell = 0, got ell = {p.ell}")
        raise UnsupportedParamsError(f"ell: {p.ell} is not zero")

    wall_arg, well_arg = pt_sqrt_arguments(p)
    if wall_arg < 0 or well_arg < 0:
        logger.error(f"Square root arguments must be non-negative, got {wall_arg} and {well_arg}")
        raise UnsupportedParamsError("v0 / v1: negative square root argument in the exact spectrum")

    energy_scale = -(p.hbar ** 2) * p.lam ** 2 / (2 * p.mass)
    sqrt_wall, sqrt_well = mpmath.sqrt(wall_arg), mpmath.sqrt(well_arg)

    spectrum = [
        energy_scale * (2 * n + 1 + sqrt_wall - sqrt_well) ** 2
        for n in range(pt_level_count(p))
    ]

    logger.debug(f"Exact spectrum has {len(spectrum)} levels")

    return spectrum


def _bisect_sign_change(func: Callable[[Real], Real], lower: Real, upper: Real, rel_tol: float) -> Real:
    """
    Shrink [lower, upper] over a sign change of func until it is rel_tol wide relative to its midpoint
    """
    f_lower = func(lower)
    while upper - lower > rel_tol * abs(upper + lower) / 2:
        middle = (lower + upper) / 2
        f_middle = func(middle)
        if f_middle == 0:
            return middle
        if (f_middle < 0) == (f_lower < 0):
            lower, f_lower = middle, f_middle
        else:
            upper = middle

    return (lower + upper) / 2


def _golden_section_minimum(func: Callable[[Real], Real], lower: Real, upper: Real,
                            rel_tol: float) -> Tuple[Real, Real]:
    """
    Minimise a unimodal func over [lower, upper]
    :return: (argmin, min)
    """
    ratio = mpmath.mpf(GOLDEN_RATIO_CONJUGATE)
    inner_low = upper - ratio * (upper - lower)
    inner_high = lower + ratio * (upper - lower)
    f_low, f_high = func(inner_low), func(inner_high)

    while upper - lower > rel_tol * abs(upper + lower) / 2:
        if f_low < f_high:
            upper, inner_high, f_high = inner_high, inner_low, f_low
            inner_low = upper - ratio * (upper - lower)
            f_low = func(inner_low)
        else:
            lower, inner_low, f_low = inner_low, inner_high, f_high
            inner_high = lower + ratio * (upper - lower)
            f_high = func(inner_high)

    argmin = (lower + upper) / 2
    return argmin, func(argmin)


def classify_extrema(min_count: int, max_count: int) -> ShapeClassification:
    """
    One minimum and one maximum is TwoExtrema, a lone minimum is SingleMinimum, anything else
    (no extrema, a lone maximum) is InflectionOrMonotone
    """
    if min_count == 1 and max_count == 1:
        return ShapeClassification.TWO_EXTREMA
    if min_count == 1 and max_count == 0:
        return ShapeClassification.SINGLE_MINIMUM
    return ShapeClassification.INFLECTION_OR_MONOTONE


def classify_potential(p: PotentialParams) -> PotentialShape:
    """
    Locate the extrema of V(r) on a log spaced scan of (1e-4 / lambda, 30 / lambda) from sign changes of a
    central difference derivative, refine each extremum by bisection on dV/dr and the minimum value by golden
    section search.

    v_min is the lowest interior minimum, or, with no interior minimum, the lower scan edge value
    when that is negative (V0 = 0 potentials are finite at the origin). Otherwise v_min is None.
    :param p:
    :return:
    """
    lam = float(p.lam)
    r_grid = np.geomspace(CLASSIFY_R_MIN / lam, CLASSIFY_R_MAX / lam, CLASSIFY_POINTS)
    v_grid = v_of_r_array(r_grid, p)

    # Central differences at the interior points
    dv_grid = (v_grid[2:] - v_grid[:-2]) / (r_grid[2:] - r_grid[:-2])
    sign_changes = np.nonzero(np.sign(dv_grid[:-1]) * np.sign(dv_grid[1:]) < 0)[0]

    extrema: List[Tuple[float, float, str]] = []
    v_min: Optional[float] = None

    with working_precision(CLASSIFY_PRECISION_DIGITS):
        def potential(r: Real) -> Real:
            return v_of_r(r, p)

        def slope(r: Real) -> Real:
            return mpmath.diff(potential, r)

        for index in sign_changes:
            # dv_grid[i] sits at r_grid[i + 1]
            lower, upper = mpmath.mpf(r_grid[index + 1]), mpmath.mpf(r_grid[index + 2])
            kind = "min" if dv_grid[index] < 0 else "max"

            if kind == "min":
                r_extremum, v_extremum = _golden_section_minimum(
                    potential, mpmath.mpf(r_grid[index]), mpmath.mpf(r_grid[index + 3]), CLASSIFY_REL_TOL
                )
            else:
                r_extremum = _bisect_sign_change(slope, lower, upper, CLASSIFY_REL_TOL)
                v_extremum = potential(r_extremum)

            logger.debug(f"Found a local {kind} at r = {mpmath.nstr(r_extremum, 12)}, "
                         f"V = {mpmath.nstr(v_extremum, 12)}")
            extrema.append((float(r_extremum), float(v_extremum), kind))

    minima = [v for _, v, kind in extrema if kind == "min"]
    maxima = [v for _, v, kind in extrema if kind == "max"]

    classification = classify_extrema(len(minima), len(maxima))

    if len(minima) > 0:
        v_min = min(minima)
    if float(np.min(v_grid)) < 0 and (v_min is None or float(np.min(v_grid)) < v_min):
        v_min = float(np.min(v_grid))

    logger.info(f"Potential is {classification.value} with {len(extrema)} extrema, v_min = {v_min}")

    return PotentialShape(classification=classification, extrema=extrema, v_min=v_min)
