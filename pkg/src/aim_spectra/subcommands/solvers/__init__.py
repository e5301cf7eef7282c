#!/usr/bin/env python3

"""
Parent solve command

Every solver reads the same flat config (file, then command line options on top), builds a RunConfig
in its own mode, runs it and writes the results CSV.
"""

# External imports
from pathlib import Path
from typing import List, Optional

# Classes
from ...classes.command import Command
from ...classes.run_config import RunConfig

# Utils
from ...utils.globals import RunMode
from ...utils.logging import get_logger
from ...utils.report_utils import build_run_config, run, write_csv

# Set logger
logger = get_logger()


class Solve(Command):
    """
    The solve command is a parent class, subclasses only differ in their usage and run mode
    """

    def __init__(self, command_argv: List[str], mode: RunMode):
        # Collect args from doc strings
        super(Solve, self).__init__(command_argv)

        # Initialise values
        self.mode = mode
        self.config_path: Optional[Path] = None
        self.config: Optional[RunConfig] = None

        # Check help
        self.check_length(command_argv)

        # Check if help has been called
        if self.args["help"]:
            self._help()

        # Confirm arguments are present and valid, a ConfigError exits 1 from main
        self.check_args()

    def __call__(self):
        """
        Run and write out
        :return:
        """
        rows = run(self.config)
        write_csv(rows, self.config.output_path)

    def check_args(self):
        """
        Layer the command line over the config file, in this command's mode
        :return:
        """
        config_path_arg = self.args.get("--config", None)
        if config_path_arg is not None:
            self.config_path = Path(config_path_arg)

        overrides = self.get_config_overrides()
        overrides["mode"] = self.mode.value

        self.config = build_run_config(self.config_path, overrides)
