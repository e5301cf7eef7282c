#!/usr/bin/env python

"""aim-spectra ::: bound state energies of the four parameter hyperbolic potential by the asymptotic iteration method

    V(r) = [V0 + V1 tanh^2(lambda r) + V2 tanh^4(lambda r)] / sinh^2(lambda r)

Usage:
    aim-spectra [options] <command> [options] [<args>...]

Options:
    --debug                             Set the log level to debug

Command:

    help                                Print help and exit
    version                             Print version and exit

    ######################
    Solver Commands
    ######################
    spectrum                            Bound state energies by the asymptotic iteration method
    exact-pt                            Closed form spectrum of the V2 = 0, ell = 0 (Poschl-Teller) case
    oracle                              Finite difference reference energies
    compare                             All of the above, joined by level index

    ######################
    Report Commands
    ######################
    reproduce                           Recompute one (--table) or all (--all) of the published tables as CSV

    ######################
    Query Commands
    ######################
    classify                            Configuration and extrema of the potential
    x0-scan                             Dependence of a level on the expansion point

Environment:
    AIM_SPECTRA_PRECISION_DIGITS        Default working precision in decimal digits (100)

Exit codes:
    0  success
    1  configuration error
    2  no roots found
    3  numeric failure
"""

# External imports
from docopt import docopt
import sys

# Local Utils
from .__version__ import version
from .errors import ConfigError, NoRootsFoundError
from .globals import EXIT_CONFIG_ERROR, EXIT_NO_ROOTS_FOUND, EXIT_NUMERIC_FAILURE
from .logging import set_basic_logger

# Set logger
logger = set_basic_logger()


def _dispatch():
    # This variable comprises both the subcommand AND the args
    global_args: dict = docopt(__doc__, sys.argv[1:], version=version, options_first=True)

    # Handle all global args we've set
    if global_args["--debug"]:
        logger.info("Setting logging level to 'DEBUG'")
        logger.setLevel(level="DEBUG")
    else:
        logger.setLevel(level="INFO")

    command_argv = [global_args["<command>"]] + global_args["<args>"]

    cmd = global_args['<command>']

    # Yes, this is just a massive if-else statement
    if cmd == "help":
        # We have a separate help function for each subcommand
        print(__doc__)
        sys.exit(0)
    elif cmd == "version":
        print(version)
        sys.exit(0)

    # Solver commands
    elif cmd == "spectrum":
        from ..subcommands.solvers.spectrum import Spectrum as command_to_call
    elif cmd == "exact-pt":
        from ..subcommands.solvers.exact_pt import ExactPT as command_to_call
    elif cmd == "oracle":
        from ..subcommands.solvers.oracle import Oracle as command_to_call
    elif cmd == "compare":
        from ..subcommands.solvers.compare import Compare as command_to_call

    # Report commands
    elif cmd == "reproduce":
        from ..subcommands.reporters.reproduce import Reproduce as command_to_call

    # Query commands
    elif cmd == "classify":
        from ..subcommands.query.classify import Classify as command_to_call
    elif cmd == "x0-scan":
        from ..subcommands.query.x0_scan import X0Scan as command_to_call

    # NotImplemented Error
    else:
        print(__doc__)
        print(f"Could not find cmd \"{cmd}\". Please refer to usage above")
        sys.exit(EXIT_CONFIG_ERROR)

    # Initialise command
    command_obj = command_to_call(command_argv)

    # Call back command
    command_obj()


def main():
    # If only aim-spectra is written, append help s.t help documentation shows
    if len(sys.argv) == 1:
        sys.argv.append('help')

    try:
        _dispatch()
    except KeyboardInterrupt:
        pass
    except ConfigError as config_error:
        logger.error(f"Configuration error, {config_error}")
        sys.exit(EXIT_CONFIG_ERROR)
    except NoRootsFoundError as no_roots_error:
        logger.error(f"No bound states found, {no_roots_error}")
        sys.exit(EXIT_NO_ROOTS_FOUND)
    except ArithmeticError as numeric_error:
        # Covers the jet, domain and unsupported parameter errors
        logger.error(f"Numeric failure, {type(numeric_error).__name__}: {numeric_error}")
        sys.exit(EXIT_NUMERIC_FAILURE)
