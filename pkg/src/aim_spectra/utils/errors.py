#!/usr/bin/env python3

"""
All these things that could go wrong
"""


# Jets
class OrderMismatchError(ArithmeticError):
    """
    Two jets in a binary operation do not share the same truncation order
    """
    pass


class ExpansionPointMismatchError(ArithmeticError):
    """
    Two jets in a binary operation are not expanded about the same point
    """
    pass


class DivisionByZeroConstantTermError(ZeroDivisionError):
    """
    The divisor jet has a zero constant term so has no series inverse
    """
    pass


class OrderExhaustedError(ArithmeticError):
    """
    A jet of order zero was differentiated, the series order is too small for the requested iteration count
    """
    pass


class DomainError(ArithmeticError):
    """
    A value lies outside the domain of a function or coordinate transform
    """
    pass


# Potential
class InvalidParamsError(ValueError):
    """
    The potential parameters do not satisfy their invariants
    """
    pass


class UnsupportedParamsError(ArithmeticError):
    """
    The exact Poschl-Teller spectrum was requested for parameters it does not apply to
    """
    pass


# AIM
class InvalidSettingsError(ValueError):
    """
    The AIM settings do not satisfy their invariants
    """
    pass


class NoRootsFoundError(Exception):
    """
    The termination condition changed sign nowhere in the energy window, at any iteration
    """
    pass


# Oracle
class InvalidGridError(ValueError):
    """
    The finite difference grid does not satisfy its invariants
    """
    pass


class GridTooCoarseWarning(UserWarning):
    """
    Two grid estimates of the same level disagree by more than the coarse grid tolerance
    """
    pass


# CLI
class ConfigError(Exception):
    """
    A run configuration value is missing, unknown or invalid
    """
    pass


class CheckArgumentError(ConfigError):
    """
    A command line argument could not be used
    """
    pass
