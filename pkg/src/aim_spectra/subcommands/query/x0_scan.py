#!/usr/bin/env python3

"""
How much does a level depend on the expansion point
"""

# External imports
from pathlib import Path
from typing import List, Optional

# Classes
from ...classes.command import Command
from ...classes.run_config import RunConfig

# Utils
from ...utils.aim_utils import scan_x0
from ...utils.errors import CheckArgumentError, ConfigError
from ...utils.logging import get_logger
from ...utils.report_utils import build_run_config, write_frame, x0_scan_to_frame

# Set logger
logger = get_logger()


class X0Scan(Command):
    """Usage:
    aim-spectra [options] x0-scan help
    aim-spectra [options] x0-scan (--x0-values=<x0_values>) [--level=<level>]

Description:
    Repeat the AIM search at every expansion point in --x0-values and report the requested level's energy,
    final drift and status at each, one CSV row per x0. Points where the level is not found have empty fields.

Options:
    --x0-values=<x0_values>             Comma separated expansion points, each in (-1, 1)
    --level=<level>                     Optional, level index n, default 0
    --config=<config.yaml>              Optional, flat yaml of config keys
    --v0=<v0>                           Strength of the 1/sinh^2 wall
    --v1=<v1>                           Strength of the tanh^2 / sinh^2 term
    --v2=<v2>                           Strength of the tanh^4 / sinh^2 term
    --lambda=<lambda>                   Optional, inverse range, default 1
    --ell=<ell>                         Optional, angular momentum, default 0
    --k-max=<k_max>                     Optional, last iteration of the full energy scan, default 120
    --k-limit=<k_limit>                 Optional, levels still drifting at k-max iterate up to here, default 2 k-max
    --k-stride=<k_stride>               Optional, check convergence every k-stride iterations, default 10
    --precision-digits=<digits>         Optional, working precision in decimal digits, default 100
    --e-min=<e_min>                     Optional, bottom of the energy window, default 1.05 x the potential minimum
    --e-max=<e_max>                     Optional, top of the energy window, default -1e-6
    --scan-points=<scan_points>         Optional, energies per scan, default 400
    --workers=<workers>                 Optional, processes for the energy scan and the deeper levels, default 1
    --output-path=<output_path>         Optional, write the CSV here rather than stdout

Example:
    aim-spectra x0-scan --v0=1 --v1=-50 --v2=2 --x0-values="-0.5,-0.25,0,0.25,0.5"
    """

    def __init__(self, command_argv: List[str]):
        # Collect args from doc strings
        super().__init__(command_argv)

        # Initialise values
        self.config: Optional[RunConfig] = None
        self.x0_values: List[str] = []
        self.level: int = 0

        # Check help
        self.check_length(command_argv)

        # Check if help has been called
        if self.args["help"]:
            self._help()

        # Confirm 'required' arguments are present and valid
        try:
            self.check_args()
        except CheckArgumentError:
            self._help(fail=True)

    def __call__(self):
        scanned = scan_x0(self.config.params, self.config.settings, self.x0_values, level=self.level)
        write_frame(x0_scan_to_frame(scanned), self.config.output_path)

    def check_args(self):
        x0_values_arg = self.args.get("--x0-values", None)
        if x0_values_arg is None:
            logger.error("Please set --x0-values")
            raise CheckArgumentError

        self.x0_values = [value.strip() for value in x0_values_arg.split(",") if value.strip() != ""]
        if len(self.x0_values) == 0:
            logger.error("--x0-values holds no values")
            raise ConfigError("x0_values: empty")

        for value in self.x0_values:
            try:
                _ = float(value)
            except ValueError as float_error:
                logger.error(f"--x0-values must be numbers, got \"{value}\"")
                raise ConfigError(f"x0_values: \"{value}\" is not a number") from float_error

        level_arg = self.args.get("--level", None)
        if level_arg is not None:
            try:
                self.level = int(level_arg)
            except ValueError as int_error:
                logger.error(f"--level must be an integer, got \"{level_arg}\"")
                raise ConfigError(f"level: \"{level_arg}\" is not an integer") from int_error

        overrides = {
            key: value for key, value in self.get_config_overrides().items()
            if key not in ["x0_values", "level"]
        }

        config_path_arg = self.args.get("--config", None)
        self.config = build_run_config(Path(config_path_arg) if config_path_arg is not None else None, overrides)
