#!/usr/bin/env python3

"""
Which configuration is the potential in, and where are its extrema
"""

# External imports
import sys
from pathlib import Path
from typing import List, Optional

# Classes
from ...classes.command import Command
from ...classes.potential_params import PotentialParams

# Utils
from ...utils.logging import get_logger
from ...utils.potential_utils import classify_potential
from ...utils.report_utils import build_run_config, shape_to_frame

# Set logger
logger = get_logger()


class Classify(Command):
    """Usage:
    aim-spectra [options] classify help
    aim-spectra [options] classify

Description:
    Locate the extrema of V(r) on a log spaced scan of (1e-4 / lambda, 30 / lambda) and print them as a
    markdown table along with the configuration
        TwoExtrema             a minimum and a maximum, bound states and / or resonances
        SingleMinimum          a well, bound states only
        InflectionOrMonotone   no extrema, no bound states
    and the potential minimum the AIM energy window is seeded from.

Options:
    --config=<config.yaml>              Optional, flat yaml of config keys, only the potential keys are read
    --v0=<v0>                           Strength of the 1/sinh^2 wall
    --v1=<v1>                           Strength of the tanh^2 / sinh^2 term
    --v2=<v2>                           Strength of the tanh^4 / sinh^2 term
    --lambda=<lambda>                   Optional, inverse range, default 1

Example:
    aim-spectra classify --v0=2 --v1=-80 --v2=120
    """

    def __init__(self, command_argv: List[str]):
        # Collect args from doc strings
        super().__init__(command_argv)

        # Initialise values
        self.params: Optional[PotentialParams] = None

        # Check help
        self.check_length(command_argv)

        # Check if help has been called
        if self.args["help"]:
            self._help()

        self.check_args()

    def __call__(self):
        shape = classify_potential(self.params)

        print(f"Configuration: {shape.classification.value}")
        print(f"Potential minimum: {shape.v_min if shape.v_min is not None else 'none below zero'}")
        print()

        if len(shape.extrema) == 0:
            return

        shape_to_frame(shape).to_markdown(sys.stdout, index=False)

        # Create new line character
        print()

    def check_args(self):
        config_path_arg = self.args.get("--config", None)
        config = build_run_config(
            Path(config_path_arg) if config_path_arg is not None else None,
            self.get_config_overrides()
        )
        self.params = config.params
