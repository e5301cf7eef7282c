#!/usr/bin/env python3

# External imports
import sys
from typing import Dict, List
from docopt import docopt

# Utils
from ..utils.logging import get_logger

# Set logger
logger = get_logger()

# Docopt flags that are not config keys
NON_CONFIG_OPTIONS = ["--help", "--config", "--history", "--no-richardson"]


class Command:
    """
    Template object for subcommands
    """

    def __init__(self, command_argv: List[str]):
        # Initialise any req vars
        self.args = self.get_args(command_argv)

    def get_args(self, command_argv: List[str]) -> Dict:
        """
        :return:
        """
        # Get arguments from commandline
        return docopt(self.__doc__, argv=command_argv, options_first=False)

    def _help(self, fail=False):
        """
        Returns self help doc
        :return:
        """
        print(self.__doc__)
        # If fail will exit 1, else exit 0.
        sys.exit(int(fail))

    def check_length(self, command_argv: List[str]):
        """
        If arg has just one length, append help
        :return:
        """
        if len(command_argv) == 1:
            logger.debug("Got only one arg, appending 'help'")
            self.args["help"] = True

    def get_config_overrides(self) -> Dict:
        """
        Options map onto config keys by name, --k-max=<k_max> sets k_max
        Unset options come through as None and so never override the config file
        :return:
        """
        overrides = {
            option.lstrip("-").replace("-", "_"): value
            for option, value in self.args.items()
            if option.startswith("--") and option not in NON_CONFIG_OPTIONS
        }

        if self.args.get("--no-richardson", False):
            overrides["richardson"] = False

        return overrides

    def check_args(self):
        """
        Defined in the subfunction
        :return:
        """
        raise NotImplementedError
