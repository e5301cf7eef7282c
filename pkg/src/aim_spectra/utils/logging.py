#!/usr/bin/env python3

"""
Collect logger through verboselogs package

verboselogs.install() is called on import so every logger handed out by get_logger
also carries the verbose / notice / success levels
"""

# External imports
import inspect
import verboselogs
import logging

# Globals
LOGGER_STYLE = "%(asctime)s - %(levelname)-8s - %(module)-25s - %(funcName)-40s : LineNo. %(lineno)-4d - %(message)s"

verboselogs.install()


def get_caller_function():
    """
    Get the function that was used to call the previous
    Some loggers report <module>
    :return:
    """
    # Get the inspect stack trace
    inspect_stack = inspect.stack()

    # Since we're already in a function, we need the third attribute
    # i.e function of interest -> function that called this one -> this function
    frame_info = inspect_stack[2]

    # Required attribute is' function
    return getattr(frame_info, "function", None)


def set_basic_logger():
    """
    Attach a stderr handler to the root logger, stdout is kept free for csv / markdown output
    :return:
    """
    # Get a basic logger
    root_logger = logging.getLogger()

    # Main may be called many times in the one process (tests), only ever add the one handler
    for handler in root_logger.handlers:
        if getattr(handler, "name", None) == "aim-spectra":
            return root_logger

    # Get a stderr handler
    console = logging.StreamHandler()
    console.set_name("aim-spectra")

    # Set level
    console.setLevel(logging.DEBUG)

    # Set format
    console.setFormatter(logging.Formatter(LOGGER_STYLE))

    root_logger.addHandler(console)

    return root_logger


def get_logger():
    """
    Return logger object
    :return:
    """
    function_that_called_this_one = get_caller_function()
    return logging.getLogger(function_that_called_this_one)
