#!/usr/bin/env python3

"""
Knobs for the asymptotic iteration search

* x0                 # expansion point in (-1, 1), 0 by default
* k_max              # last iteration of the full energy scan
* k_limit            # unconverged levels keep iterating up to here, 2 k_max by default
* k_stride           # convergence is checked every k_stride iterations
* precision_digits   # working precision, env AIM_SPECTRA_PRECISION_DIGITS overrides the built-in default,
                     # raised per checkpoint to what the depth needs
* series_order       # jet truncation order P, k_limit + 4 by default
* e_min, e_max       # energy scan window, e_min defaults to 1.05 v_min when left as None
* scan_points        # energies sampled per scan
* root_tol           # root bracket width at the last checkpoint of a level
* conv_tol           # drift between successive checkpoints below which a level is converged
* track_tol          # drift above which a root at the final checkpoint is thrown away as spurious
* workers            # processes used for the energy scan, 1 runs in process
"""

# External imports
from typing import Dict, List, Optional, Union
import mpmath
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Utils
from ..utils.errors import InvalidSettingsError, ConfigError
from ..utils.globals import (
    DEFAULT_X0, DEFAULT_K_MAX, DEFAULT_K_STRIDE, DEFAULT_SCAN_POINTS, DEFAULT_E_MAX,
    DEFAULT_ROOT_TOL, DEFAULT_CONV_TOL, DEFAULT_TRACK_TOL, K_LIMIT_FACTOR, SERIES_ORDER_GUARD_TERMS
)
from ..utils.logging import get_logger
from ..utils.precision import Real, check_precision_digits, digits_for_depth, get_default_precision_digits

# Set logger
logger = get_logger()

Number = Union[str, int, float, mpmath.mpf]


class AimSettings:

    def __init__(self,
                 x0: Number = DEFAULT_X0,
                 k_max: int = DEFAULT_K_MAX,
                 k_limit: Optional[int] = None,
                 precision_digits: Optional[int] = None,
                 e_min: Optional[Number] = None,
                 e_max: Number = DEFAULT_E_MAX,
                 scan_points: int = DEFAULT_SCAN_POINTS,
                 root_tol: Number = DEFAULT_ROOT_TOL,
                 conv_tol: Number = DEFAULT_CONV_TOL,
                 k_stride: int = DEFAULT_K_STRIDE,
                 series_order: Optional[int] = None,
                 track_tol: Number = DEFAULT_TRACK_TOL,
                 workers: int = 1):
        self._x0 = x0
        self.k_max = int(k_max)
        self.k_limit = int(k_limit) if k_limit is not None else K_LIMIT_FACTOR * self.k_max
        self.precision_digits = int(precision_digits) if precision_digits is not None \
            else get_default_precision_digits()
        self._e_min = e_min
        self._e_max = e_max
        self.scan_points = int(scan_points)
        self._root_tol = root_tol
        self._conv_tol = conv_tol
        self.k_stride = int(k_stride)
        self.series_order = int(series_order) if series_order is not None \
            else self.k_limit + SERIES_ORDER_GUARD_TERMS
        self._track_tol = track_tol
        self.workers = int(workers)

        self.check_settings()

    def check_settings(self):
        """
        -1 < x0 < 1, e_min < e_max < 0, k_max >= 2 k_stride, scan_points >= 10,
        k_max <= k_limit <= series_order - 2
        :return:
        """
        if not -1 < self.x0 < 1:
            self._fail("x0", f"{self._x0} is outside (-1, 1)")

        if not self.e_max < 0:
            self._fail("e_max", f"{self._e_max} is not negative")

        if self._e_min is not None and not self.e_min < self.e_max:
            self._fail("e_min", f"{self._e_min} is not below e_max = {self._e_max}")

        if self.k_stride < 1:
            self._fail("k_stride", f"{self.k_stride} is not positive")

        if self.k_max < 2 * self.k_stride:
            self._fail("k_max", f"{self.k_max} is below 2 * k_stride = {2 * self.k_stride}")

        if self.k_limit < self.k_max:
            self._fail("k_limit", f"{self.k_limit} is below k_max = {self.k_max}")

        if self.k_limit > self.series_order - 2:
            self._fail("series_order", f"{self.series_order} leaves too few terms for k_limit = {self.k_limit}")

        if self.scan_points < 10:
            self._fail("scan_points", f"{self.scan_points} is below 10")

        for name in ["root_tol", "conv_tol", "track_tol"]:
            if not getattr(self, name) > 0:
                self._fail(name, f"{getattr(self, '_' + name)} is not positive")

        if self.workers < 1:
            self._fail("workers", f"{self.workers} is not positive")

        try:
            check_precision_digits(self.precision_digits)
        except ConfigError as precision_error:
            self._fail("precision_digits", str(precision_error))

        if self.precision_digits < digits_for_depth(self.k_max):
            logger.warning(f"precision_digits = {self.precision_digits} is low for k_max = {self.k_max}, "
                           f"checkpoints past k = {self.last_k_at_requested_precision} run at raised precision")

    @staticmethod
    def _fail(field: str, message: str):
        logger.error(f"Invalid setting {field}: {message}")
        raise InvalidSettingsError(f"{field}: {message}")

    @property
    def x0(self) -> Real:
        return mpmath.mpf(self._x0)

    @property
    def e_min(self) -> Optional[Real]:
        return mpmath.mpf(self._e_min) if self._e_min is not None else None

    @property
    def e_max(self) -> Real:
        return mpmath.mpf(self._e_max)

    @property
    def root_tol(self) -> Real:
        return mpmath.mpf(self._root_tol)

    @property
    def conv_tol(self) -> Real:
        return mpmath.mpf(self._conv_tol)

    @property
    def track_tol(self) -> Real:
        return mpmath.mpf(self._track_tol)

    def digits_at(self, k: int) -> int:
        """
        Working precision for checkpoint k, never below precision_digits
        """
        return max(self.precision_digits, digits_for_depth(k))

    @property
    def last_k_at_requested_precision(self) -> int:
        k = 0
        while digits_for_depth(k + 1) <= self.precision_digits:
            k += 1
        return k

    @property
    def checkpoints(self) -> List[int]:
        """
        k_stride, 2 k_stride, ... and always k_max itself
        """
        checkpoints = list(range(self.k_stride, self.k_max + 1, self.k_stride))
        if checkpoints[-1] != self.k_max:
            checkpoints.append(self.k_max)
        return checkpoints

    def replace(self, **kwargs) -> 'AimSettings':
        """
        A copy with some fields swapped, re-validated
        """
        settings_dict = self.to_dict()
        # A new depth needs its own default limit and series order
        if "k_max" in kwargs and "k_limit" not in kwargs:
            settings_dict["k_limit"] = None
        if ("k_max" in kwargs or "k_limit" in kwargs) and "series_order" not in kwargs:
            settings_dict["series_order"] = None
        settings_dict.update(kwargs)
        return AimSettings.from_dict(settings_dict)

    def to_dict(self) -> OrderedDict:
        return OrderedDict({
            "x0": self._x0,
            "k_max": self.k_max,
            "k_limit": self.k_limit,
            "precision_digits": self.precision_digits,
            "e_min": self._e_min,
            "e_max": self._e_max,
            "scan_points": self.scan_points,
            "root_tol": self._root_tol,
            "conv_tol": self._conv_tol,
            "k_stride": self.k_stride,
            "series_order": self.series_order,
            "track_tol": self._track_tol,
            "workers": self.workers
        })

    @classmethod
    def from_dict(cls, settings_dict: Dict) -> 'AimSettings':
        settings_dict = {key: value for key, value in settings_dict.items() if value is not None}
        return cls(**settings_dict)

