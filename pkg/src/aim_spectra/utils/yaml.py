#!/usr/bin/env python3

"""
Improves consistency when reading / writing the run configuration yamls
"""

# External imports
from pathlib import Path
from typing import Dict
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError

# Local imports
from .errors import ConfigError
from .logging import get_logger

# Set logger
logger = get_logger()


def read_yaml(yaml_file: Path) -> Dict:
    """
    Read a flat key-value config file, an empty file is an empty config
    :param yaml_file:
    :return:
    """
    yaml = YAML(typ="safe")

    if not Path(yaml_file).is_file():
        logger.error(f"Could not find config file \"{yaml_file}\"")
        raise ConfigError(f"config: file \"{yaml_file}\" does not exist")

    try:
        with open(yaml_file, "r") as yaml_h:
            yaml_obj = yaml.load(yaml_h)
    except YAMLError as yaml_error:
        logger.error(f"Could not parse \"{yaml_file}\"")
        raise ConfigError(f"config: could not parse \"{yaml_file}\": {yaml_error}") from yaml_error

    if yaml_obj is None:
        return {}

    if not isinstance(yaml_obj, dict):
        logger.error(f"Expected a mapping at the top level of \"{yaml_file}\"")
        raise ConfigError(f"config: \"{yaml_file}\" is not a key-value mapping")

    return dict(yaml_obj)

