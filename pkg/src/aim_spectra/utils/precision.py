#!/usr/bin/env python3

"""
Configurable precision reals

A Real is an mpmath.mpf. Precision is never set globally, every computation enters
working_precision(digits) for its own duration so callers can't leak precision into one another

The recurrence kernel runs on gmpy2 mpfr values, to_mpfr / from_mpfr move reals across exactly and
mpfr_precision matches the gmpy2 context to the mpmath one
"""

# External imports
import math
import os
from contextlib import contextmanager
from fractions import Fraction
from typing import Iterator, Union
import gmpy2
import mpmath
from mpmath.libmp import dps_to_prec

# Local imports
from .errors import ConfigError
from .globals import (
    DEFAULT_PRECISION_DIGITS, DIGITS_LOST_PER_ITERATION, MIN_PRECISION_BITS, MIN_TRUSTED_DIGITS,
    PRECISION_DIGITS_ENV_VAR
)
from .logging import get_logger

# Set logger
logger = get_logger()

Real = mpmath.mpf
RealLike = Union[mpmath.mpf, int, float, str]


def get_default_precision_digits() -> int:
    """
    The default working precision in decimal digits, AIM_SPECTRA_PRECISION_DIGITS overrides the built-in value
    :return:
    """
    env_value = os.environ.get(PRECISION_DIGITS_ENV_VAR, None)

    if env_value is None or env_value.strip() == "":
        return DEFAULT_PRECISION_DIGITS

    try:
        digits = int(env_value)
    except ValueError as int_error:
        logger.error(f"Environment variable {PRECISION_DIGITS_ENV_VAR} must be an integer, got \"{env_value}\"")
        raise ConfigError(f"precision_digits: {PRECISION_DIGITS_ENV_VAR}=\"{env_value}\" is not an integer") \
            from int_error

    check_precision_digits(digits)

    return digits


def check_precision_digits(digits: int):
    """
    Precision must be at least 64 bits
    :param digits:
    :return:
    """
    if dps_to_prec(digits) < MIN_PRECISION_BITS:
        logger.error(f"Precision of {digits} digits is below {MIN_PRECISION_BITS} bits")
        raise ConfigError(f"precision_digits: {digits} digits is below the {MIN_PRECISION_BITS} bit minimum")


@contextmanager
def working_precision(digits: int) -> Iterator[int]:
    """
    Run the enclosed block at the given number of decimal digits
    :param digits:
    :return:
    """
    check_precision_digits(digits)
    with mpmath.mp.workdps(digits):
        yield digits


def digits_for_depth(k: int) -> int:
    """
    Decimal digits that leave MIN_TRUSTED_DIGITS after k iterations of the recurrence
    :param k:
    :return:
    """
    return math.ceil(Fraction(DIGITS_LOST_PER_ITERATION) * k) + MIN_TRUSTED_DIGITS


@contextmanager
def mpfr_precision() -> Iterator[int]:
    """
    A gmpy2 context at the current mpmath working precision, for the inner loops that run on mpfr values
    :return:
    """
    with gmpy2.context(precision=mpmath.mp.prec):
        yield mpmath.mp.prec


def to_mpfr(value: Real) -> gmpy2.mpfr:
    """
    Rounds to the gmpy2 context precision, exact when that is at least the mpmath precision
    :param value:
    :return:
    """
    sign, mantissa, exponent, _ = mpmath.mpf(value)._mpf_
    converted = gmpy2.mul_2exp(gmpy2.mpfr(mantissa), int(exponent))
    return -converted if sign else converted


def from_mpfr(value: gmpy2.mpfr) -> Real:
    mantissa, exponent = value.as_mantissa_exp()
    return mpmath.mpf((int(mantissa), int(exponent)))
