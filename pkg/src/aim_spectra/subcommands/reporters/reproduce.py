#!/usr/bin/env python3

"""
Recompute the published tables
"""

# External imports
from pathlib import Path
from typing import Dict, List, Optional

# Classes
from ...classes.aim_settings import AimSettings
from ...classes.command import Command
from ...classes.oracle_grid import OracleGrid

# Utils
from ...utils.errors import ConfigError, InvalidGridError, InvalidSettingsError
from ...utils.globals import TableId
from ...utils.logging import get_logger
from ...utils.report_utils import reproduce_table, write_csv, table_output_path

# Set logger
logger = get_logger()

SETTINGS_OPTIONS = ["--k-max", "--k-limit", "--k-stride", "--precision-digits", "--scan-points", "--workers"]


class Reproduce(Command):
    """Usage:
    aim-spectra [options] reproduce help
    aim-spectra [options] reproduce (--table=<table_id>) [--output-path=<output_path>] [--no-oracle]
    aim-spectra [options] reproduce (--all) (--output-dir=<output_dir>) [--no-oracle]

Description:
    Recompute one of the four published tables, one CSV row per published (n, ell) cell with the published
    value as e_reference:
        1   V0 = 1, V1 = -50, V2 = 2,    ell = 0        reference: TRA
        2   V0 = 1, V1 = -50, V2 = 0,    ell = 0        reference: exact, e_exact is filled in too
        3   V0 = 2, V1 = -80, V2 = 120,  ell = 0..3     reference: CSM
        4   V0 = 0, V1 = -70, V2 = 20,   ell = 0..3     reference: AIM
    abs_diff is taken against e_aim, or against e_oracle when AIM found nothing for the level.

    With --all every table is written to <output_dir>/table_<id>.csv

Options:
    --table=<table_id>                  One of 1, 2, 3, 4
    --all                               Reproduce every table
    --output-path=<output_path>         Optional, write the CSV here rather than stdout
    --output-dir=<output_dir>           Directory for --all
    --no-oracle                         Optional, skip the finite difference oracle
    --k-max=<k_max>                     Optional, last iteration of the full energy scan, default 120
    --k-limit=<k_limit>                 Optional, levels still drifting at k-max iterate up to here, default 2 k-max
    --k-stride=<k_stride>               Optional, check convergence every k-stride iterations, default 10
    --precision-digits=<digits>         Optional, working precision in decimal digits, default 100
    --scan-points=<scan_points>         Optional, energies per scan, default 400
    --workers=<workers>                 Optional, processes for the energy scan and the deeper levels, default 1
    --n-points=<n_points>               Optional, oracle interior grid points, default 20000

Example:
    aim-spectra reproduce --table=2
    aim-spectra reproduce --table=4 --workers=8 --output-path table_4.csv
    aim-spectra reproduce --all --output-dir results/
    """

    def __init__(self, command_argv: List[str]):
        # Collect args from doc strings
        super().__init__(command_argv)

        # Initialise values
        self.table_ids: List[TableId] = []
        self.output_path: Optional[Path] = None
        self.output_dir: Optional[Path] = None
        self.settings: Optional[AimSettings] = None
        self.n_points: Optional[int] = None
        self.with_oracle: bool = True

        # Check help
        self.check_length(command_argv)

        # Check if help has been called
        if self.args["help"]:
            self._help()

        # Confirm arguments are present and valid, a ConfigError exits 1 from main
        self.check_args()

    def __call__(self):
        for table_id in self.table_ids:
            rows = reproduce_table(
                table_id, settings=self.settings, with_oracle=self.with_oracle, n_points=self.n_points
            )

            if self.output_dir is not None:
                write_csv(rows, table_output_path(self.output_dir, table_id))
            else:
                write_csv(rows, self.output_path)

    def check_args(self):
        """
        Table id, output location and the AIM settings overrides
        :return:
        """
        if self.args.get("--all", False):
            self.table_ids = list(TableId)
            self.output_dir = Path(self.args.get("--output-dir"))
            if not self.output_dir.is_dir():
                logger.error(f"--output-dir \"{self.output_dir}\" is not a directory")
                raise ConfigError(f"output_dir: \"{self.output_dir}\" is not a directory")
        else:
            table_arg = self.args.get("--table", None)
            try:
                self.table_ids = [TableId(str(table_arg))]
            except ValueError as table_error:
                logger.error(f"--table must be one of {', '.join(table.value for table in TableId)}, "
                             f"got \"{table_arg}\"")
                raise ConfigError(f"table: \"{table_arg}\" is not a published table") from table_error

            if self.args.get("--output-path", None) is not None:
                self.output_path = Path(self.args.get("--output-path"))

        self.with_oracle = not self.args.get("--no-oracle", False)

        settings_dict: Dict = {
            option.lstrip("-").replace("-", "_"): self.args.get(option)
            for option in SETTINGS_OPTIONS
        }

        try:
            self.settings = AimSettings.from_dict({
                key: int(value) for key, value in settings_dict.items() if value is not None
            })
            if self.args.get("--n-points", None) is not None:
                self.n_points = int(self.args.get("--n-points"))
                # Validate now rather than half way through a table
                _ = OracleGrid(n_points=self.n_points)
        except (InvalidSettingsError, InvalidGridError) as invalid_error:
            raise ConfigError(str(invalid_error)) from invalid_error
        except ValueError as int_error:
            logger.error(f"Settings options must be integers: {int_error}")
            raise ConfigError(f"settings: {int_error}") from int_error
