#!/usr/bin/env python3

"""
Everything a single run needs: the potential, the AIM settings, the oracle grid, what to compute and where to write

Config files and command line flags share one flat namespace of keys, from_dict sorts them
into their objects and turns every invariant violation into a ConfigError naming the field.
"""

# External imports
from pathlib import Path
from typing import Dict, Optional
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Classes
from .aim_settings import AimSettings
from .oracle_grid import OracleGrid
from .potential_params import PotentialParams

# Utils
from ..utils.errors import ConfigError, InvalidGridError, InvalidParamsError, InvalidSettingsError
from ..utils.globals import RunMode
from ..utils.logging import get_logger

# Set logger
logger = get_logger()

PARAMS_KEYS = ["v0", "v1", "v2", "lambda", "ell", "hbar", "mass"]
SETTINGS_KEYS = [
    "x0", "k_max", "k_limit", "precision_digits", "series_order", "e_min", "e_max", "scan_points",
    "root_tol", "conv_tol", "k_stride", "track_tol", "workers"
]
GRID_KEYS = ["r_min", "r_max", "n_points"]
RUN_KEYS = ["mode", "output_path", "count", "richardson"]

CONFIG_KEYS = PARAMS_KEYS + SETTINGS_KEYS + GRID_KEYS + RUN_KEYS
INTEGER_KEYS = [
    "ell", "k_max", "k_limit", "precision_digits", "series_order", "scan_points", "k_stride", "workers",
    "n_points", "count"
]


class RunConfig:
    """
    * params        # PotentialParams
    * settings      # AimSettings
    * grid          # OracleGrid
    * mode          # RunMode
    * output_path   # None writes to stdout
    * count         # cap on the number of oracle levels, None for all
    * richardson    # two grid extrapolation in the oracle
    """

    def __init__(self, params: PotentialParams, settings: AimSettings, grid: OracleGrid,
                 mode: RunMode = RunMode.AIM, output_path: Optional[Path] = None,
                 count: Optional[int] = None, richardson: bool = True):
        self.params = params
        self.settings = settings
        self.grid = grid
        self.mode = mode
        self.output_path = output_path
        self.count = count
        self.richardson = richardson

        self.check_config()

    def check_config(self):
        if self.mode == RunMode.EXACT_PT:
            if self.params.v2 != 0:
                logger.error(f"Mode {self.mode.value} needs v2 = 0, got v2 = {self.params.v2}")
                raise ConfigError(f"v2: mode {self.mode.value} needs v2 = 0")
            if self.params.ell != 0:
                logger.error(f"Mode {self.mode.value} needs ell = 0, got ell = {self.params.ell}")
                raise ConfigError(f"ell: mode {self.mode.value} needs ell = 0")

        if self.count is not None and self.count < 1:
            logger.error(f"count must be at least 1, got {self.count}")
            raise ConfigError(f"count: {self.count} is below 1")

    def to_dict(self) -> OrderedDict:
        config_dict = OrderedDict()
        config_dict.update(self.params.to_dict())
        config_dict.update(self.settings.to_dict())
        config_dict.update(self.grid.to_dict())
        config_dict.update({
            "mode": self.mode.value,
            "output_path": str(self.output_path) if self.output_path is not None else None,
            "count": self.count,
            "richardson": self.richardson
        })
        return config_dict

    @classmethod
    def from_dict(cls, config_dict: Dict) -> 'RunConfig':
        """
        Build from the flat key space, None values are treated as absent
        :param config_dict:
        :return:
        """
        unknown_keys = [key for key in config_dict.keys() if key not in CONFIG_KEYS]
        if len(unknown_keys) > 0:
            logger.error(f"Unknown config keys: {', '.join(map(str, unknown_keys))}")
            raise ConfigError(f"{unknown_keys[0]}: unknown config key")

        config_dict = {key: value for key, value in config_dict.items() if value is not None}

        # Command line values arrive as strings
        for key in INTEGER_KEYS:
            if isinstance(config_dict.get(key, None), str):
                try:
                    config_dict[key] = int(config_dict[key])
                except ValueError as int_error:
                    logger.error(f"{key} must be an integer, got \"{config_dict[key]}\"")
                    raise ConfigError(f"{key}: \"{config_dict[key]}\" is not an integer") from int_error

        try:
            mode = RunMode(config_dict.get("mode", RunMode.AIM.value))
        except ValueError as mode_error:
            logger.error(f"mode must be one of {', '.join(mode.value for mode in RunMode)}")
            raise ConfigError(f"mode: \"{config_dict.get('mode')}\" is not a run mode") from mode_error

        try:
            params = PotentialParams.from_dict({key: config_dict[key] for key in PARAMS_KEYS if key in config_dict})
            settings = AimSettings.from_dict({key: config_dict[key] for key in SETTINGS_KEYS if key in config_dict})

            default_grid = OracleGrid.for_params(params, **(
                {"n_points": config_dict["n_points"]} if "n_points" in config_dict else {}
            ))
            grid = OracleGrid(
                r_min=config_dict.get("r_min", default_grid.r_min),
                r_max=config_dict.get("r_max", default_grid.r_max),
                n_points=default_grid.n_points
            )
        except (InvalidParamsError, InvalidSettingsError, InvalidGridError) as invalid_error:
            raise ConfigError(str(invalid_error)) from invalid_error
        except (TypeError, ValueError) as value_error:
            logger.error(f"Could not read a config value: {value_error}")
            raise ConfigError(f"config: {value_error}") from value_error

        return cls(
            params=params,
            settings=settings,
            grid=grid,
            mode=mode,
            output_path=Path(config_dict["output_path"]) if "output_path" in config_dict else None,
            count=int(config_dict["count"]) if "count" in config_dict else None,
            richardson=_to_bool(config_dict.get("richardson", True))
        )


def _to_bool(value) -> bool:
    if isinstance(value, bool):
        return value
    if str(value).lower() in ["true", "yes", "1"]:
        return True
    if str(value).lower() in ["false", "no", "0"]:
        return False
    logger.error(f"richardson must be true or false, got \"{value}\"")
    raise ConfigError(f"richardson: \"{value}\" is not a boolean")
