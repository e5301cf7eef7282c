#!/usr/bin/env python3

"""
Functional entry points over the Jet class, dispatched by operation name

These are what the AIM recurrence and the coordinate change call
"""

# External imports
from typing import Union

# Classes
from ..classes.jet import Jet

# Utils
from .errors import OrderMismatchError
from .globals import JetOp, JetTranscendental
from .logging import get_logger

# Set logger
logger = get_logger()


def jet_arith(a: Jet, b: Jet, op: Union[JetOp, str]) -> Jet:
    """
    Binary jet arithmetic, both jets must share x0 and order
    :param a:
    :param b:
    :param op: add, sub, mul or div
    :return:
    """
    op = JetOp(op)

    if a.order != b.order:
        logger.error(f"Cannot {op.value} jets of order {a.order} and {b.order}")
        raise OrderMismatchError

    if op == JetOp.ADD:
        return a + b
    if op == JetOp.SUB:
        return a - b
    if op == JetOp.MUL:
        return a * b
    return a / b


def jet_transcendental(a: Jet, op: Union[JetTranscendental, str]) -> Jet:
    """
    Compose a jet with sqrt, arctanh or square
    :param a:
    :param op:
    :return:
    """
    op = JetTranscendental(op)

    if op == JetTranscendental.SQRT:
        return a.sqrt()
    if op == JetTranscendental.ARCTANH:
        return a.arctanh()
    return a.square()


def jet_derivative(a: Jet) -> Jet:
    """
    The jet of a' at the same x0, one order shorter
    :param a:
    :return:
    """
    return a.derivative()
