#!/usr/bin/env python3

"""
Closed form Poschl-Teller spectrum
"""

# External imports
from typing import List

# Subcommands
from . import Solve

# Utils
from ...utils.globals import RunMode


class ExactPT(Solve):
    """Usage:
    aim-spectra [options] exact-pt help
    aim-spectra [options] exact-pt

Description:
    Print the exact energies of the V2 = 0, ell = 0 (Poschl-Teller) case,
        E_n = -(hbar^2 lambda^2 / 2m) (2n + 1 + sqrt(1/4 + 2 V0 / lambda^2) - sqrt(1/4 - 2 V1 / lambda^2))^2
    for every n up to the last bound level. v2 and ell must be zero.

Options:
    --config=<config.yaml>              Optional, flat yaml of config keys
    --v0=<v0>                           Strength of the 1/sinh^2 wall
    --v1=<v1>                           Strength of the tanh^2 / sinh^2 term
    --v2=<v2>                           Must be 0
    --lambda=<lambda>                   Optional, inverse range, default 1
    --hbar=<hbar>                       Optional, default 1
    --mass=<mass>                       Optional, default 1
    --precision-digits=<digits>         Optional, working precision in decimal digits, default 100
    --output-path=<output_path>         Optional, write the CSV here rather than stdout

Example:
    aim-spectra exact-pt --v0=1 --v1=-50 --v2=0
    """

    def __init__(self, command_argv: List[str]):
        super(ExactPT, self).__init__(command_argv, mode=RunMode.EXACT_PT)
