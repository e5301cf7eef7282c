#!/usr/bin/env python3

"""
Run computations from a RunConfig, reproduce the published tables and read / write the results CSV
"""

# External imports
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple
import mpmath
import pandas as pd

# Classes
from ..classes.aim_settings import AimSettings
from ..classes.comparison_row import ComparisonRow
from ..classes.eigen_result import EigenResult
from ..classes.oracle_grid import OracleGrid
from ..classes.potential_params import PotentialParams
from ..classes.potential_shape import PotentialShape
from ..classes.run_config import RunConfig

# Utils
from .aim_utils import find_spectrum, match_roots
from .errors import ConfigError, NoRootsFoundError
from .globals import CSV_COLUMNS, JOIN_WINDOW_FACTOR, RunMode, TableId
from .logging import get_logger
from .oracle_utils import oracle_spectrum
from .potential_utils import pt_exact_spectrum
from .precision import working_precision
from .references import get_reference_table
from .yaml import read_yaml

# Set logger
logger = get_logger()

Energies = List[Optional[mpmath.mpf]]


def build_run_config(config_path: Optional[Path] = None, overrides: Optional[Dict] = None) -> RunConfig:
    """
    Layer the config file over the defaults and the command line over the config file
    The precision environment variable sits between the defaults and the file, AimSettings picks it up
    :param config_path:
    :param overrides: flat keys, None values are ignored
    :return:
    """
    config_dict = {}
    if config_path is not None:
        logger.debug(f"Reading config from \"{config_path}\"")
        config_dict.update(read_yaml(config_path))

    if overrides is not None:
        config_dict.update({key: value for key, value in overrides.items() if value is not None})

    return RunConfig.from_dict(config_dict)


def _aim_energies(p: PotentialParams, settings: AimSettings, required: bool) -> List[EigenResult]:
    try:
        return find_spectrum(p, settings)
    except NoRootsFoundError:
        if required:
            raise
        logger.warning(f"AIM found no roots for ell = {p.ell}, leaving the AIM column empty")
        return []


def _join_by_level(ell: int, columns: Dict[str, Sequence]) -> List[ComparisonRow]:
    """
    One row per level index, n running over the longest column
    :param ell:
    :param columns: CSV energy column name -> energies ascending in n, None where a level has no value
    :return:
    """
    level_count = max([len(energies) for energies in columns.values()] + [0])

    rows = []
    for n in range(level_count):
        energies = {
            column: energies[n] if n < len(energies) else None
            for column, energies in columns.items()
        }
        if all(energy is None for energy in energies.values()):
            continue
        rows.append(ComparisonRow(n=n, ell=ell, **energies))

    return rows


def match_to_levels(levels: Sequence, aim: Sequence[mpmath.mpf], ell: int) -> Energies:
    """
    Give each level the AIM root nearest to it within JOIN_WINDOW_FACTOR times the local level spacing
    AIM roots carry no level index of their own, unmatched roots are logged and left out
    :param levels: ascending, the level energies to line up against
    :param aim: ascending
    :param ell:
    :return: one AIM energy per level, None where no root matched
    """
    matches = match_roots([mpmath.mpf(level) for level in levels], aim, window_factor=JOIN_WINDOW_FACTOR)

    matched_roots = set(matches.values())
    for index, energy in enumerate(aim):
        if index not in matched_roots:
            logger.warning(f"ell = {ell}: the AIM root at E = {mpmath.nstr(energy, 12)} matches no level, left out")

    return [aim[matches[n]] if n in matches else None for n in range(len(levels))]


def run(config: RunConfig) -> List[ComparisonRow]:
    """
    Dispatch on the run mode
    * Aim       # find_spectrum, NoRootsFoundError propagates
    * ExactPT   # the closed form Poschl-Teller spectrum
    * Oracle    # the finite difference eigenvalues
    * Compare   # all that apply, exact and oracle joined by level index, AIM matched to the nearest
                #   exact level, or oracle level when there is no exact spectrum
    :param config:
    :return:
    """
    p, settings = config.params, config.settings
    logger.info(f"Running mode {config.mode.value} for {p}")

    columns: Dict[str, Sequence] = {}

    with working_precision(settings.precision_digits):
        if config.mode == RunMode.EXACT_PT or (
                config.mode == RunMode.COMPARE and p.is_poschl_teller and p.ell == 0):
            columns["e_exact"] = pt_exact_spectrum(p)

        if config.mode in [RunMode.ORACLE, RunMode.COMPARE]:
            columns["e_oracle"] = oracle_spectrum(p, config.grid, count=config.count, richardson=config.richardson)

        if config.mode in [RunMode.AIM, RunMode.COMPARE]:
            aim = [
                result.energy
                for result in _aim_energies(p, settings, required=config.mode == RunMode.AIM)
            ]
            levels = next((columns[column] for column in ["e_exact", "e_oracle"] if len(columns.get(column, [])) > 0),
                          None)
            columns["e_aim"] = match_to_levels(levels, aim, p.ell) if levels is not None else aim

        return _join_by_level(p.ell, columns)


def reproduce_table(table_id: TableId, settings: Optional[AimSettings] = None,
                    grid: Optional[OracleGrid] = None, with_oracle: bool = True,
                    n_points: Optional[int] = None) -> List[ComparisonRow]:
    """
    Recompute a published table, one row per published (n, ell) cell, with the published reference column
    as e_reference.
    :param table_id:
    :param settings: AIM settings, defaults when None
    :param grid: oracle grid, OracleGrid.for_params for each ell when None
    :param with_oracle:
    :param n_points: interior points of the per ell default grid
    :return:
    """
    table = get_reference_table(table_id)
    settings = settings if settings is not None else AimSettings()

    logger.info(f"Reproducing table {table_id.value} ({table.cell_count} cells, reference column "
                f"{table.reference_column})")

    rows = []
    with working_precision(settings.precision_digits):
        for ell in table.ells:
            p = PotentialParams.from_dict(dict(table.params, ell=ell))
            references = [mpmath.mpf(value) for value in table.reference[ell]]
            level_count = len(references)

            aim = match_to_levels(
                references, [result.energy for result in _aim_energies(p, settings, required=False)], ell
            )

            exact: Energies = pt_exact_spectrum(p) if p.is_poschl_teller and p.ell == 0 else []

            oracle: List[float] = []
            if with_oracle:
                if grid is not None:
                    oracle_grid = grid
                elif n_points is not None:
                    oracle_grid = OracleGrid.for_params(p, n_points=n_points)
                else:
                    oracle_grid = OracleGrid.for_params(p)
                oracle = oracle_spectrum(p, oracle_grid, count=level_count)

            for n in range(level_count):
                row = ComparisonRow(
                    n=n,
                    ell=ell,
                    e_aim=aim[n] if n < len(aim) else None,
                    e_exact=exact[n] if n < len(exact) else None,
                    e_oracle=oracle[n] if n < len(oracle) else None,
                    e_reference=references[n]
                )
                if row.e_aim is None and row.e_oracle is None:
                    logger.warning(f"Table {table_id.value}: no computed energy for n = {n}, ell = {ell}")
                rows.append(row)

    return rows


def rows_to_frame(rows: List[ComparisonRow]) -> pd.DataFrame:
    return pd.DataFrame([row.to_record() for row in rows], columns=CSV_COLUMNS)


def write_csv(rows: List[ComparisonRow], output_path: Optional[Path] = None):
    """
    UTF-8, LF line endings, stdout when output_path is None
    :param rows:
    :param output_path:
    :return:
    """
    frame = rows_to_frame(rows)

    if output_path is None:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
        return

    output_path = Path(output_path)
    if not output_path.parent.is_dir():
        logger.error(f"Cannot write to \"{output_path}\", parent directory does not exist")
        raise ConfigError(f"output_path: parent directory of \"{output_path}\" does not exist")

    with open(output_path, "w", encoding="utf-8", newline="") as csv_h:
        frame.to_csv(csv_h, index=False, lineterminator="\n")

    logger.info(f"Wrote {len(rows)} rows to \"{output_path}\"")


def read_csv(csv_path: Path) -> List[ComparisonRow]:
    if not Path(csv_path).is_file():
        logger.error(f"Could not find \"{csv_path}\"")
        raise ConfigError(f"csv: \"{csv_path}\" does not exist")

    frame = pd.read_csv(csv_path, dtype=str, keep_default_na=False)

    return [ComparisonRow.from_record(record) for record in frame.to_dict(orient="records")]


def write_frame(frame: pd.DataFrame, output_path: Optional[Path] = None):
    """
    Diagnostics tables go out as CSV too, floats at full repr
    """
    if output_path is None:
        frame.to_csv(sys.stdout, index=False, lineterminator="\n")
        return

    with open(output_path, "w", encoding="utf-8", newline="") as csv_h:
        frame.to_csv(csv_h, index=False, lineterminator="\n")

    logger.info(f"Wrote {len(frame)} rows to \"{output_path}\"")


def shape_to_frame(shape: PotentialShape) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"classification": shape.classification.value, "kind": kind, "r": r, "v": v}
            for r, v, kind in shape.extrema
        ],
        columns=["classification", "kind", "r", "v"]
    )


def x0_scan_to_frame(scanned: List[Tuple[mpmath.mpf, Optional[EigenResult]]]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "x0": float(x0),
                "energy": float(result.energy) if result is not None else None,
                "residual": float(result.residual) if result is not None and result.residual is not None else None,
                "status": result.status.value if result is not None else None
            }
            for x0, result in scanned
        ],
        columns=["x0", "energy", "residual", "status"]
    )


def table_output_path(output_dir: Path, table_id: TableId) -> Path:
    return Path(output_dir) / f"table_{table_id.value}.csv"

