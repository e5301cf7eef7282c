#!/usr/bin/env python3

"""
Asymptotic iteration method for the four parameter potential

After x = 2 tanh^2(lambda r) - 1 the radial equation reads

    psi'' = lambda_0(x) psi' + s_0(x) psi

    lambda_0 = -chi / (2 phi omega)
    s_0      = -2m / (8 hbar^2 lambda^2 phi^2 omega^2 eta) *
               [4 phi eta V0 + 2 phi omega eta V1 + phi omega^2 eta V2 + 4 omega eta E - 2 lambda^2 l(l+1) (hbar^2/m) omega]

with omega = x + 1, phi = x - 1, chi = 3x + 1, eta = arctanh^2(sqrt((x + 1) / 2)).
The reduced form of s_0 is m (U(x) - E) / (hbar^2 lambda^2 phi^2 omega) where U carries the centrifugal term.

The energy is substituted numerically, every jet is a plain Taylor series about x0.
Eigenvalues are the roots in E of the termination condition

    delta_k(E) = lambda_k s_{k-1} - lambda_{k-1} s_k   at x0

found by scanning for sign changes, refining each bracket, and tracking roots across k until they stop drifting.
The scan runs to k_max, levels still drifting there keep iterating on their own up to k_limit.
"""

# External imports
from concurrent.futures import ProcessPoolExecutor
from operator import mul
from typing import Callable, Dict, List, Optional, Sequence, Tuple
import gmpy2
import mpmath
import pandas as pd

# Classes
from ..classes.aim_settings import AimSettings
from ..classes.aim_state import AimState
from ..classes.eigen_result import EigenResult
from ..classes.jet import Jet
from ..classes.potential_params import PotentialParams
from ..classes.potential_shape import PotentialShape

# Utils
from .errors import DomainError, NoRootsFoundError, OrderExhaustedError
from .globals import (
    EigenStatus, E_MIN_MARGIN, EXTEND_BRACKET_DRIFTS, EXTEND_BRACKET_GROWTH, EXTEND_BRACKET_MIN_CONV_TOLS,
    ROOT_MATCH_WINDOW_FACTOR, SERIES_ORDER_GUARD_TERMS, TRACK_REFINE_DIVISOR
)
from .jet_utils import jet_derivative
from .logging import get_logger
from .potential_utils import classify_potential
from .precision import Real, RealLike, from_mpfr, mpfr_precision, to_mpfr, working_precision

# Set logger
logger = get_logger()


class CoefficientBuilder:
    """
    The energy independent parts of lambda_0 and s_0 at x0, s_0(E) = s0_base + s0_slope * E
    Build once per potential, then call at_energy for every trial energy
    """

    def __init__(self, lam0: Jet, s0_base: Jet, s0_slope: Jet):
        self.lam0 = lam0
        self.s0_base = s0_base
        self.s0_slope = s0_slope

    @property
    def order(self) -> int:
        return self.lam0.order

    @classmethod
    def from_params(cls, p: PotentialParams, x0: RealLike, order: int,
                    reduced_form: bool = False) -> 'CoefficientBuilder':
        """
        :param p:
        :param x0: expansion point, -1 < x0 < 1
        :param order: jet truncation order
        :param reduced_form: use m (U - E) / (hbar^2 lambda^2 phi^2 omega) in place of the expanded bracket
        :return:
        """
        x0 = mpmath.mpf(x0)
        if not -1 < x0 < 1:
            logger.error(f"The expansion point must lie in (-1, 1), got x0 = {x0}")
            raise DomainError(f"x0 = {x0} is outside (-1, 1)")

        x = Jet.identity(x0, order)
        omega = x + 1
        phi = x - 1
        chi = 3 * x + 1

        lam0 = -chi / (2 * phi * omega)

        hbar_sq, mass, lam_sq = p.hbar ** 2, p.mass, p.lam ** 2
        centrifugal_strength = p.ell * (p.ell + 1)

        if reduced_form:
            denominator = hbar_sq * lam_sq * phi.square() * omega
            potential = -phi / omega * (p.v0 + p.v1 * omega / 2 + p.v2 * omega.square() / 4)
            if centrifugal_strength > 0:
                potential = potential + hbar_sq * centrifugal_strength * lam_sq / (2 * mass * eta_jet(x))
            s0_base = mass * potential / denominator
            s0_slope = -mass / denominator
        else:
            eta = eta_jet(x)
            prefactor = (-2 * mass / (8 * hbar_sq * lam_sq)) / (phi.square() * omega.square() * eta)
            bracket = (
                4 * p.v0 * phi * eta
                + 2 * p.v1 * phi * omega * eta
                + p.v2 * phi * omega.square() * eta
                - 2 * lam_sq * centrifugal_strength * (hbar_sq / mass) * omega
            )
            s0_base = prefactor * bracket
            s0_slope = prefactor * (4 * omega * eta)

        return cls(lam0=lam0, s0_base=s0_base, s0_slope=s0_slope)

    def truncate(self, order: int) -> 'CoefficientBuilder':
        return CoefficientBuilder(
            lam0=self.lam0.truncate(order),
            s0_base=self.s0_base.truncate(order),
            s0_slope=self.s0_slope.truncate(order)
        )

    def at_energy(self, energy: RealLike) -> Tuple[Jet, Jet]:
        return self.lam0, self.s0_base + self.s0_slope * mpmath.mpf(energy)


def eta_jet(x: Jet) -> Jet:
    """
    eta(x) = arctanh^2(sqrt(2x + 2) / 2) = (lambda r)^2
    :param x: the identity jet at x0
    :return:
    """
    return ((x + 1) / 2).sqrt().arctanh().square()


def build_coefficients(p: PotentialParams, settings: AimSettings, energy: RealLike,
                       order: Optional[int] = None, reduced_form: bool = False) -> Tuple[Jet, Jet]:
    """
    lambda_0 and s_0 as jets at settings.x0, with the energy substituted
    :param p:
    :param settings:
    :param energy:
    :param order: defaults to settings.series_order
    :param reduced_form:
    :return: (lam0, s0)
    """
    with working_precision(settings.precision_digits):
        builder = CoefficientBuilder.from_params(
            p, settings.x0, order if order is not None else settings.series_order, reduced_form=reduced_form
        )
        return builder.at_energy(energy)


def aim_iterate(state: AimState, lam0: Jet, s0: Jet) -> AimState:
    """
    One step of the recurrence
        lambda_k = lambda'_{k-1} + s_{k-1} + lambda_0 lambda_{k-1}
        s_k      = s'_{k-1} + s_0 lambda_{k-1}
    :param state: holds lambda_{k-1}, s_{k-1}
    :param lam0:
    :param s0:
    :return: state holding lambda_k, s_k, order one lower
    """
    lam_derivative = jet_derivative(state.lam)
    s_derivative = jet_derivative(state.s)

    order = lam_derivative.order
    lam_prev = state.lam.truncate(order)
    s_prev = state.s.truncate(order)

    return AimState(
        lam=lam_derivative + s_prev + lam0.truncate(order) * lam_prev,
        s=s_derivative + s0.truncate(order) * lam_prev,
        lam_prev=lam_prev,
        s_prev=s_prev,
        k=state.k + 1
    )


def delta_profile(builder: CoefficientBuilder, energy: RealLike, checkpoints: Sequence[int]) -> Dict[int, Real]:
    """
    Run the recurrence once up to the last checkpoint K and record delta_k at every checkpoint

    The same recurrence as aim_iterate on plain lists of gmpy2 mpfr coefficients at the current working
    precision. The constant terms at K only need coefficients up to order K - k at step k, so the lists
    start at K + 1 terms and lose one per step.
    :param builder: order at least K
    :param energy:
    :param checkpoints:
    :return:
    """
    last_k = max(checkpoints)
    if last_k > builder.order:
        logger.error(f"k = {last_k} needs jets of order {last_k}, the coefficients only go to order {builder.order}")
        raise OrderExhaustedError

    terms = last_k + 1
    checkpoint_set = set(checkpoints)
    deltas: Dict[int, Real] = {}

    with mpfr_precision():
        energy = to_mpfr(energy)
        lam0 = [to_mpfr(coeff) for coeff in builder.lam0.coeffs[:terms]]
        s0 = [
            to_mpfr(base) + to_mpfr(slope) * energy
            for base, slope in zip(builder.s0_base.coeffs[:terms], builder.s0_slope.coeffs[:terms])
        ]

        lam, s = lam0, s0
        for k in range(1, last_k + 1):
            lam_next = [
                (j + 1) * lam[j + 1] + s[j] + gmpy2.fsum(map(mul, lam0[:j + 1], lam[j::-1]))
                for j in range(len(lam) - 1)
            ]
            s_next = [
                (j + 1) * s[j + 1] + gmpy2.fsum(map(mul, s0[:j + 1], lam[j::-1]))
                for j in range(len(s) - 1)
            ]
            if k in checkpoint_set:
                deltas[k] = from_mpfr(lam_next[0] * s[0] - lam[0] * s_next[0])
            lam, s = lam_next, s_next

    return deltas


def delta_k(p: PotentialParams, settings: AimSettings, energy: RealLike, k: int) -> Real:
    """
    The termination condition after k iterations, at x0, stepped through aim_iterate on jets
    Jets are built to order min(series_order, k + guard terms), asking for k beyond series_order raises
    OrderExhaustedError from the recurrence
    :param p:
    :param settings:
    :param energy:
    :param k: k >= 1
    :return:
    """
    with working_precision(settings.digits_at(k)):
        order = min(settings.series_order, k + SERIES_ORDER_GUARD_TERMS)
        lam0, s0 = CoefficientBuilder.from_params(p, settings.x0, order).at_energy(energy)
        state = AimState.initial(lam0, s0)
        while state.k < k:
            state = aim_iterate(state, lam0, s0)
        return state.delta


def _delta_profile_task(task: Tuple[CoefficientBuilder, Real, List[int], int]) -> Dict[int, Real]:
    builder, energy, checkpoints, precision_digits = task
    with working_precision(precision_digits):
        return delta_profile(builder, energy, checkpoints)


def scan_delta_profiles(builder: CoefficientBuilder, energies: Sequence[Real], checkpoints: List[int],
                        settings: AimSettings) -> List[Dict[int, Real]]:
    """
    delta_k at every checkpoint for every scan energy, at the precision the last checkpoint needs
    Each energy is independent so with workers > 1 the map is spread over a process pool
    :param builder:
    :param energies:
    :param checkpoints:
    :param settings:
    :return:
    """
    digits = settings.digits_at(max(checkpoints))

    if settings.workers == 1:
        return [_delta_profile_task((builder, energy, checkpoints, digits)) for energy in energies]

    tasks = [(builder, energy, checkpoints, digits) for energy in energies]
    chunksize = max(1, len(tasks) // (4 * settings.workers))
    with ProcessPoolExecutor(max_workers=settings.workers) as executor:
        return list(executor.map(_delta_profile_task, tasks, chunksize=chunksize))


def find_brackets(energies: Sequence[Real], deltas: Sequence[Real]) -> List[Tuple[Real, Real, Real, Real]]:
    """
    Consecutive scan energies over which delta changes sign
    :return: list of (lower, upper, delta(lower), delta(upper))
    """
    brackets = []
    for index in range(len(energies) - 1):
        d_lower, d_upper = deltas[index], deltas[index + 1]
        if d_lower == 0:
            # Root sits on the grid, bracket it with the next interval
            brackets.append((energies[index], energies[index + 1], d_lower, d_upper))
        elif mpmath.sign(d_lower) * mpmath.sign(d_upper) < 0:
            brackets.append((energies[index], energies[index + 1], d_lower, d_upper))
    return brackets


def refine_root(func: Callable[[Real], Real], lower: Real, upper: Real, f_lower: Real, f_upper: Real,
                tol: Real) -> Real:
    """
    Illinois regula falsi on a sign change bracket
    delta_k is oscillatory in E at large k, a bisection step is forced whenever three steps in a row
    failed to halve the bracket, the bracket is always kept
    :param func:
    :param lower:
    :param upper:
    :param f_lower: func(lower), already known from the scan
    :param f_upper: func(upper)
    :param tol: final bracket width
    :return: the midpoint of the final bracket
    """
    if f_lower == 0:
        return lower
    if f_upper == 0:
        return upper

    last_side = 0
    stalled_steps = 0

    while upper - lower > tol:
        width = upper - lower
        trial = upper - f_upper * width / (f_upper - f_lower)
        if stalled_steps >= 3 or not lower < trial < upper:
            trial = (lower + upper) / 2
            stalled_steps = 0

        f_trial = func(trial)
        if f_trial == 0:
            return trial

        if mpmath.sign(f_trial) == mpmath.sign(f_lower):
            lower, f_lower = trial, f_trial
            # Same end moved twice, halve the weight of the one left behind
            if last_side < 0:
                f_upper = f_upper / 2
            last_side = -1
        else:
            upper, f_upper = trial, f_trial
            if last_side > 0:
                f_lower = f_lower / 2
            last_side = 1

        stalled_steps = stalled_steps + 1 if upper - lower > width / 2 else 0

    return (lower + upper) / 2


def match_roots(previous: Sequence[Real], current: Sequence[Real],
                window_factor: RealLike = ROOT_MATCH_WINDOW_FACTOR) -> Dict[int, int]:
    """
    Pair each previous root with its nearest current root within window_factor times the local
    spacing of the previous roots, closest pairs first, each root used at most once
    :param previous: ascending
    :param current: ascending
    :param window_factor:
    :return: previous index -> current index
    """
    windows: List[Optional[Real]] = []
    for index, energy in enumerate(previous):
        gaps = [
            abs(energy - previous[neighbour])
            for neighbour in (index - 1, index + 1)
            if 0 <= neighbour < len(previous)
        ]
        windows.append(mpmath.mpf(window_factor) * min(gaps) if len(gaps) > 0 else None)

    candidates = sorted(
        (abs(energy - root), prev_index, cur_index)
        for prev_index, energy in enumerate(previous)
        for cur_index, root in enumerate(current)
        if windows[prev_index] is None or abs(energy - root) <= windows[prev_index]
    )

    matches: Dict[int, int] = {}
    used_current = set()
    for _, prev_index, cur_index in candidates:
        if prev_index in matches or cur_index in used_current:
            continue
        matches[prev_index] = cur_index
        used_current.add(cur_index)

    return matches


class RootTrack:
    """
    One root followed across checkpoints
    """

    def __init__(self, k: int, energy: Real):
        self.history: Dict[int, Real] = {k: energy}
        self.drifts: Dict[int, Real] = {}

    @property
    def last_k(self) -> int:
        return max(self.history)

    @property
    def energy(self) -> Real:
        return self.history[self.last_k]

    @property
    def residual(self) -> Optional[Real]:
        return self.drifts.get(self.last_k, None)

    def append(self, k: int, energy: Real):
        self.drifts[k] = abs(energy - self.energy)
        self.history[k] = energy

    def polish(self, energy: Real):
        """
        Swap in a tighter root at the last checkpoint
        """
        k = self.last_k
        self.history[k] = energy
        earlier = [previous_k for previous_k in self.history if previous_k < k]
        if len(earlier) > 0:
            self.drifts[k] = abs(energy - self.history[max(earlier)])

    def first_converged_k(self, conv_tol: Real) -> int:
        """
        Earliest checkpoint from which every drift stays below conv_tol, else the last checkpoint
        """
        converged_k = self.last_k
        for k in sorted(self.drifts, reverse=True):
            if not self.drifts[k] < conv_tol:
                break
            converged_k = k
        return converged_k


def resolve_energy_window(p: PotentialParams, settings: AimSettings,
                          shape: Optional[PotentialShape] = None) -> Tuple[Real, Real]:
    """
    e_min defaults to 1.05 v_min, bound states have to sit above the bottom of the well
    :param p:
    :param settings:
    :param shape: classify_potential(p), computed here when not given
    :return:
    """
    if settings.e_min is not None:
        return settings.e_min, settings.e_max

    if shape is None:
        shape = classify_potential(p)
    if shape.v_min is None or not shape.v_min < settings.e_max:
        logger.error(f"The potential never drops below e_max = {settings.e_max}, there are no bound states to find")
        raise NoRootsFoundError("potential is nowhere below the energy window ceiling")

    return mpmath.mpf(E_MIN_MARGIN) * mpmath.mpf(shape.v_min), settings.e_max


def find_spectrum(p: PotentialParams, settings: AimSettings) -> List[EigenResult]:
    """
    For k = k_stride, 2 k_stride, ..., k_max scan delta_k over the energy window, refine every sign change,
    match the roots to those of the previous checkpoint and declare a level converged once its drift between
    checkpoints is below conv_tol. Intermediate checkpoints are refined to conv_tol / 10, k_max to root_tol.

    Levels still drifting at k_max keep iterating one stride at a time in a local bracket around their last
    root until the drift drops below conv_tol or k reaches k_limit.

    Roots still tracked at the end are returned as Converged or MaxIterations, roots lost on the way as
    LostRoot, roots whose final drift exceeds track_tol or that sit at or below v_min are thrown away as spurious.
    :param p:
    :param settings:
    :return: ascending in energy, n = 0, 1, ...
    """
    with working_precision(settings.digits_at(settings.k_limit)):
        shape = classify_potential(p)
        e_min, e_max = resolve_energy_window(p, settings, shape)
        builder = CoefficientBuilder.from_params(p, settings.x0, settings.series_order)

    checkpoints = settings.checkpoints

    with working_precision(settings.digits_at(settings.k_max)):
        logger.info(f"Scanning delta_k over [{mpmath.nstr(e_min, 8)}, {mpmath.nstr(e_max, 8)}] at "
                    f"{settings.scan_points} energies, checkpoints k = {checkpoints[0]}..{checkpoints[-1]}, "
                    f"x0 = {mpmath.nstr(settings.x0, 8)}, ell = {p.ell}")

        energies = mpmath.linspace(mpmath.mpf(e_min), mpmath.mpf(e_max), settings.scan_points)
        profiles = scan_delta_profiles(builder, energies, checkpoints, settings)

        active: List[RootTrack] = []
        lost: List[RootTrack] = []
        any_sign_change = False

        for k in checkpoints:
            brackets = find_brackets(energies, [profile[k] for profile in profiles])
            any_sign_change = any_sign_change or len(brackets) > 0

            tol = settings.root_tol if k == checkpoints[-1] else settings.conv_tol / TRACK_REFINE_DIVISOR

            def delta_at_k(energy: Real) -> Real:
                return delta_profile(builder, energy, [k])[k]

            roots = [
                refine_root(delta_at_k, lower, upper, d_lower, d_upper, tol)
                for lower, upper, d_lower, d_upper in brackets
            ]
            logger.debug(f"k = {k}: {len(roots)} roots")

            matches = match_roots([track.energy for track in active], roots)

            next_active: List[RootTrack] = []
            for track_index, track in enumerate(active):
                if track_index in matches:
                    track.append(k, roots[matches[track_index]])
                    next_active.append(track)
                elif k == checkpoints[-1]:
                    lost.append(track)
                else:
                    logger.debug(f"k = {k}: dropped the root last seen at {mpmath.nstr(track.energy, 12)}")

            matched_roots = set(matches.values())
            next_active.extend(
                RootTrack(k, root) for index, root in enumerate(roots) if index not in matched_roots
            )
            active = sorted(next_active, key=lambda track: track.energy)

    if not any_sign_change:
        logger.error("delta_k changed sign nowhere in the energy window at any checkpoint")
        raise NoRootsFoundError("no sign change of the termination condition in the energy window")

    active, extension_lost = extend_tracks(builder, active, settings)
    lost.extend(extension_lost)

    results = _finalise_tracks(active, lost, settings, shape.v_min)

    if len(results) == 0:
        logger.error("No root survived tracking across the checkpoints")
        raise NoRootsFoundError("every root of the termination condition drifted, none are bound states")

    for result in results:
        logger.info(f"n = {result.n}: E = {mpmath.nstr(result.energy, 13)} ({result.status.value} at "
                    f"k = {max(result.history)}, residual "
                    f"{mpmath.nstr(result.residual, 3) if result.residual is not None else None})")

    return results


def _needs_extension(track: RootTrack, settings: AimSettings) -> bool:
    return track.residual is not None and settings.conv_tol <= track.residual <= settings.track_tol


def _bracket_near(func: Callable[[Real], Real], centre: Real, width: Real,
                  max_width: Real) -> Optional[Tuple[Real, Real, Real, Real]]:
    """
    Widen centre +- width by EXTEND_BRACKET_GROWTH until func changes sign over it, giving up past max_width
    :return: (lower, upper, func(lower), func(upper)) or None
    """
    width = min(width, max_width)
    while True:
        lower, upper = centre - width, centre + width
        f_lower, f_upper = func(lower), func(upper)
        if mpmath.sign(f_lower) * mpmath.sign(f_upper) <= 0:
            return lower, upper, f_lower, f_upper
        if width >= max_width:
            return None
        width = min(width * EXTEND_BRACKET_GROWTH, max_width)


def _extend_track_task(task: Tuple[CoefficientBuilder, RootTrack, AimSettings, Real]) -> Tuple[RootTrack, bool]:
    """
    Follow one level past k_max
    :param task: (builder, track, settings, max_width), max_width is half the gap to the nearest other level
    :return: the track and whether it is still held at its last checkpoint
    """
    builder, track, settings, max_width = task
    refine_tol = settings.conv_tol / TRACK_REFINE_DIVISOR

    k = track.last_k
    while not track.residual < settings.conv_tol and k < settings.k_limit:
        k = min(k + settings.k_stride, settings.k_limit)

        with working_precision(settings.digits_at(k)):
            def delta_at_k(energy: Real) -> Real:
                return delta_profile(builder, energy, [k])[k]

            width = max(EXTEND_BRACKET_DRIFTS * track.residual, EXTEND_BRACKET_MIN_CONV_TOLS * settings.conv_tol)
            bracket = _bracket_near(delta_at_k, track.energy, width, max_width)
            if bracket is None:
                logger.debug(f"k = {k}: no sign change within {mpmath.nstr(max_width, 3)} of "
                             f"{mpmath.nstr(track.energy, 12)}")
                return track, False

            track.append(k, refine_root(delta_at_k, *bracket, refine_tol))
            logger.debug(f"k = {k}: E = {mpmath.nstr(track.energy, 13)}, drift {mpmath.nstr(track.residual, 3)}")

    # The root is within refine_tol / 2 of the last value, tighten it to root_tol
    with working_precision(settings.digits_at(k)):
        def delta_at_last_k(energy: Real) -> Real:
            return delta_profile(builder, energy, [k])[k]

        lower, upper = track.energy - refine_tol, track.energy + refine_tol
        f_lower, f_upper = delta_at_last_k(lower), delta_at_last_k(upper)
        if mpmath.sign(f_lower) * mpmath.sign(f_upper) <= 0:
            track.polish(refine_root(delta_at_last_k, lower, upper, f_lower, f_upper, settings.root_tol))

    return track, True


def extend_tracks(builder: CoefficientBuilder, active: List[RootTrack],
                  settings: AimSettings) -> Tuple[List[RootTrack], List[RootTrack]]:
    """
    Iterate the levels still drifting at k_max further, one stride at a time, each in its own local bracket
    Levels are independent so with workers > 1 they are spread over a process pool
    :param builder: order at least k_limit
    :param active: ascending, tracked up to k_max
    :param settings:
    :return: (still held, lost past k_max)
    """
    to_extend = [index for index, track in enumerate(active) if _needs_extension(track, settings)]
    if len(to_extend) == 0 or settings.k_limit == settings.k_max:
        return active, []

    logger.info(f"Iterating {len(to_extend)} levels past k_max = {settings.k_max}, up to k = {settings.k_limit}")

    tasks = []
    for index in to_extend:
        gaps = [
            abs(active[index].energy - active[neighbour].energy)
            for neighbour in (index - 1, index + 1)
            if 0 <= neighbour < len(active)
        ]
        max_width = min(gaps) / 2 if len(gaps) > 0 else settings.track_tol
        tasks.append((builder, active[index], settings, max_width))

    if settings.workers == 1 or len(tasks) == 1:
        outcomes = [_extend_track_task(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=min(settings.workers, len(tasks))) as executor:
            outcomes = list(executor.map(_extend_track_task, tasks))

    extended = dict(zip(to_extend, outcomes))
    held: List[RootTrack] = []
    lost: List[RootTrack] = []
    for index, track in enumerate(active):
        if index not in extended:
            held.append(track)
            continue
        extended_track, is_held = extended[index]
        (held if is_held else lost).append(extended_track)

    return held, lost


def _finalise_tracks(active: List[RootTrack], lost: List[RootTrack], settings: AimSettings,
                     v_min: Optional[float]) -> List[EigenResult]:
    classified: List[Tuple[RootTrack, EigenStatus]] = []

    for track in active:
        # Appeared only at the last checkpoint, no drift to judge it by
        if track.residual is None:
            continue
        if track.residual < settings.conv_tol:
            classified.append((track, EigenStatus.CONVERGED))
        elif track.residual <= settings.track_tol:
            classified.append((track, EigenStatus.MAX_ITERATIONS))

    for track in lost:
        if track.residual is not None and track.residual <= settings.track_tol:
            logger.warning(f"Lost the root last seen at E = {mpmath.nstr(track.energy, 12)} (k = {track.last_k})")
            classified.append((track, EigenStatus.LOST_ROOT))

    # Bound states sit strictly inside (v_min, 0), a potential nowhere negative has none
    floor = mpmath.mpf(v_min) if v_min is not None else mpmath.mpf(0)
    for track, _ in classified:
        if not track.energy > floor:
            logger.debug(f"Dropped the root at E = {mpmath.nstr(track.energy, 12)}, not above v_min = {v_min}")
    classified = [(track, status) for track, status in classified if floor < track.energy < 0]

    classified.sort(key=lambda item: item[0].energy)

    return [
        EigenResult(
            n=n,
            energy=track.energy,
            k_converged=track.first_converged_k(settings.conv_tol),
            residual=track.residual,
            status=status,
            history=dict(track.history)
        )
        for n, (track, status) in enumerate(classified)
    ]


def scan_x0(p: PotentialParams, settings: AimSettings, x0_values: Sequence[RealLike],
            level: int = 0) -> List[Tuple[Real, Optional[EigenResult]]]:
    """
    Run the search at each candidate expansion point and keep the requested level,
    to see which choices of x0 give stable results
    :param p:
    :param settings:
    :param x0_values: each in (-1, 1)
    :param level:
    :return: (x0, result or None when the level wasn't found)
    """
    scanned = []
    for x0 in x0_values:
        x0 = mpmath.mpf(x0)
        if not -1 < x0 < 1:
            logger.error(f"The expansion point must lie in (-1, 1), got x0 = {x0}")
            raise DomainError(f"x0 = {x0} is outside (-1, 1)")

        try:
            spectrum = find_spectrum(p, settings.replace(x0=str(x0)))
        except NoRootsFoundError:
            logger.warning(f"x0 = {mpmath.nstr(x0, 8)}: no roots found")
            spectrum = []

        scanned.append((x0, spectrum[level] if level < len(spectrum) else None))

    return scanned


def convergence_history(results: List[EigenResult]) -> pd.DataFrame:
    """
    Long table of every tracked root at every checkpoint
    :param results:
    :return: columns k, n, energy, drift
    """
    rows = []
    for result in results:
        previous_energy = None
        for k in sorted(result.history):
            energy = result.history[k]
            rows.append({
                "k": k,
                "n": result.n,
                "energy": float(energy),
                "drift": float(abs(energy - previous_energy)) if previous_energy is not None else None
            })
            previous_energy = energy

    return pd.DataFrame(rows, columns=["k", "n", "energy", "drift"])
