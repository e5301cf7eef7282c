#!/usr/bin/env python3

"""
One (n, ell) row of a results table, matching the CSV columns

    n, ell, e_aim, e_exact, e_oracle, e_reference, abs_diff

Energies are printed with 12 significant digits, an absent energy is an empty field.
"""

# External imports
from typing import Dict, Optional, Union
import mpmath
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Utils
from ..utils.errors import ConfigError
from ..utils.globals import CSV_COLUMNS, ENERGY_SIGNIFICANT_DIGITS
from ..utils.logging import get_logger

# Set logger
logger = get_logger()

Energy = Optional[Union[float, mpmath.mpf]]

ENERGY_COLUMNS = ["e_aim", "e_exact", "e_oracle", "e_reference"]

# Which pair of columns abs_diff is taken over, first available wins
ABS_DIFF_PRIORITY = [
    ("e_aim", "e_reference"),
    ("e_oracle", "e_reference"),
    ("e_aim", "e_exact"),
    ("e_aim", "e_oracle"),
    ("e_oracle", "e_exact"),
]


def format_energy(value: Energy) -> str:
    if value is None:
        return ""
    return f"{float(value):.{ENERGY_SIGNIFICANT_DIGITS}g}"


def parse_energy(value: Optional[str]) -> Optional[float]:
    if value is None or str(value).strip() == "":
        return None
    return float(value)


class ComparisonRow:
    """
    * n, ell
    * e_aim, e_exact, e_oracle   # freshly computed, any may be absent
    * e_reference                # published value for the level, if any
    * abs_diff                   # given explicitly or taken over the first available pair of ABS_DIFF_PRIORITY
    """

    def __init__(self, n: int, ell: int, e_aim: Energy = None, e_exact: Energy = None, e_oracle: Energy = None,
                 e_reference: Energy = None, abs_diff: Energy = None):
        self.n = int(n)
        self.ell = int(ell)
        self.e_aim = e_aim
        self.e_exact = e_exact
        self.e_oracle = e_oracle
        self.e_reference = e_reference

        if all(getattr(self, column) is None for column in ENERGY_COLUMNS):
            logger.error(f"Row n = {n}, ell = {ell} has no energy in any column")
            raise ConfigError(f"row: n = {n}, ell = {ell} has no energies")

        self.abs_diff = abs_diff if abs_diff is not None else self._get_abs_diff()

    def _get_abs_diff(self) -> Energy:
        for left, right in ABS_DIFF_PRIORITY:
            left_value, right_value = getattr(self, left), getattr(self, right)
            if left_value is not None and right_value is not None:
                return abs(mpmath.mpf(left_value) - mpmath.mpf(right_value))
        return None

    def to_record(self) -> Dict[str, str]:
        """
        The CSV fields, as strings
        """
        return {
            "n": str(self.n),
            "ell": str(self.ell),
            "e_aim": format_energy(self.e_aim),
            "e_exact": format_energy(self.e_exact),
            "e_oracle": format_energy(self.e_oracle),
            "e_reference": format_energy(self.e_reference),
            "abs_diff": format_energy(self.abs_diff)
        }

    @classmethod
    def from_record(cls, record: Dict[str, str]) -> 'ComparisonRow':
        missing_columns = [column for column in CSV_COLUMNS if column not in record]
        if len(missing_columns) > 0:
            logger.error(f"Record is missing the columns {', '.join(missing_columns)}")
            raise ConfigError(f"csv: missing columns {', '.join(missing_columns)}")

        return cls(
            n=int(record["n"]),
            ell=int(record["ell"]),
            e_aim=parse_energy(record["e_aim"]),
            e_exact=parse_energy(record["e_exact"]),
            e_oracle=parse_energy(record["e_oracle"]),
            e_reference=parse_energy(record["e_reference"]),
            abs_diff=parse_energy(record["abs_diff"])
        )

    def to_dict(self) -> OrderedDict:
        return OrderedDict(self.to_record())

    def __eq__(self, other) -> bool:
        return isinstance(other, ComparisonRow) and self.to_record() == other.to_record()

    def __repr__(self) -> str:
        fields = ", ".join(f"{key}={value}" for key, value in self.to_record().items() if value != "")
        return f"ComparisonRow({fields})"
