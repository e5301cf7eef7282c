"""
Run configuration, comparison rows, the results CSV and table reproduction
"""

from pathlib import Path

import mpmath
import pytest

from aim_spectra.classes.aim_settings import AimSettings
from aim_spectra.classes.comparison_row import ComparisonRow, format_energy
from aim_spectra.classes.eigen_result import EigenResult
from aim_spectra.classes.oracle_grid import OracleGrid
from aim_spectra.classes.run_config import RunConfig
from aim_spectra.utils.aim_utils import RootTrack
from aim_spectra.utils.errors import ConfigError
from aim_spectra.utils.globals import CSV_COLUMNS, EigenStatus, RunMode, TableId
from aim_spectra.utils.potential_utils import classify_potential
from aim_spectra.utils.references import REFERENCE_TABLES, TABLE_2_EXACT, get_reference_table
from aim_spectra.utils import report_utils
from aim_spectra.utils.report_utils import (
    build_run_config, match_to_levels, read_csv, reproduce_table, rows_to_frame, run, shape_to_frame,
    table_output_path, write_csv, x0_scan_to_frame
)

TABLE_2_CONFIG = {"v0": 1, "v1": -50, "v2": 0}

ignore_coarse_grid = pytest.mark.filterwarnings("ignore::aim_spectra.utils.errors.GridTooCoarseWarning")


@pytest.fixture
def config_file(tmp_path) -> Path:
    config_path = tmp_path / "table_2.yaml"
    config_path.write_text("v0: 1\nv1: -50\nv2: 0\nprecision_digits: 50\nk_max: 40\n")
    return config_path


@pytest.fixture
def sample_rows():
    return [
        ComparisonRow(n=0, ell=0, e_aim=mpmath.mpf("-28.21876951"), e_exact=mpmath.mpf("-28.21876953"),
                      e_oracle=-28.218769, e_reference=mpmath.mpf("-28.21876953")),
        ComparisonRow(n=1, ell=0, e_exact=mpmath.mpf("-15.19378513"), e_reference=mpmath.mpf("-15.19378513")),
        ComparisonRow(n=2, ell=1, e_oracle=-6.1688),
    ]


# ── Run configuration ─────────────────────────────────────────────────────────

@pytest.mark.parametrize("config_dict", [
    dict(TABLE_2_CONFIG, colour="blue"),
    dict(TABLE_2_CONFIG, mode="Everything"),
    dict(TABLE_2_CONFIG, ell="one"),
    dict(TABLE_2_CONFIG, ell=-1),
    dict(TABLE_2_CONFIG, x0="1.5"),
    dict(TABLE_2_CONFIG, n_points=10),
    dict(TABLE_2_CONFIG, count=0),
    dict(TABLE_2_CONFIG, richardson="maybe"),
    dict(TABLE_2_CONFIG, v2=2, mode="ExactPT"),
    dict(TABLE_2_CONFIG, ell=1, mode="ExactPT"),
    {"v0": 1, "v2": 0},
])
def test_invalid_config(config_dict):
    with pytest.raises(ConfigError):
        RunConfig.from_dict(config_dict)


def test_config_coerces_command_line_strings():
    config = RunConfig.from_dict({
        "v0": "2", "v1": "-80", "v2": "120", "lambda": "2", "ell": "3", "k_max": "30", "count": "2",
        "richardson": "false", "mode": "Oracle"
    })

    assert config.params.ell == 3
    assert config.settings.k_max == 30
    assert config.count == 2
    assert config.richardson is False
    assert config.mode == RunMode.ORACLE
    assert config.grid.r_max == pytest.approx(15)


def test_config_reads_k_limit():
    config = RunConfig.from_dict(dict(TABLE_2_CONFIG, k_max="30", k_limit="90"))

    assert config.settings.k_limit == 90
    assert config.settings.series_order == 94
    assert RunConfig.from_dict(dict(TABLE_2_CONFIG, k_max="30")).settings.k_limit == 60


def test_config_default_grid():
    assert RunConfig.from_dict(TABLE_2_CONFIG).grid.r_min == pytest.approx(1e-3)
    assert RunConfig.from_dict(dict(TABLE_2_CONFIG, **{"lambda": 2})).grid.r_min == pytest.approx(5e-4)
    assert RunConfig.from_dict({"v0": 0, "v1": -70, "v2": 20}).grid.r_min == 0.0
    assert RunConfig.from_dict(dict(TABLE_2_CONFIG, r_min="0.01")).grid.r_min == pytest.approx(0.01)


def test_config_round_trip(tmp_path):
    config = RunConfig.from_dict(dict(TABLE_2_CONFIG, output_path=str(tmp_path / "out.csv"), precision_digits=40))
    rebuilt = RunConfig.from_dict(dict(config.to_dict()))

    assert rebuilt.to_dict() == config.to_dict()


def test_config_precedence(config_file, monkeypatch):
    monkeypatch.setenv("AIM_SPECTRA_PRECISION_DIGITS", "60")

    assert build_run_config(overrides=TABLE_2_CONFIG).settings.precision_digits == 60
    assert build_run_config(config_file).settings.precision_digits == 50
    assert build_run_config(config_file, {"precision_digits": "40", "v1": None}).settings.precision_digits == 40
    assert build_run_config(config_file, {"precision_digits": "40", "v1": None}).params.v1 == -50


def test_invalid_precision_environment(monkeypatch):
    monkeypatch.setenv("AIM_SPECTRA_PRECISION_DIGITS", "lots")
    with pytest.raises(ConfigError):
        build_run_config(overrides=TABLE_2_CONFIG)


def test_missing_config_file(tmp_path):
    with pytest.raises(ConfigError):
        build_run_config(tmp_path / "nothing.yaml")


def test_config_file_must_be_a_mapping(tmp_path):
    config_path = tmp_path / "list.yaml"
    config_path.write_text("- v0\n- v1\n")
    with pytest.raises(ConfigError):
        build_run_config(config_path)


# ── Comparison rows ───────────────────────────────────────────────────────────

def _abs_diff(**energies):
    abs_diff = ComparisonRow(n=0, ell=0, **energies).abs_diff
    return float(abs_diff) if abs_diff is not None else None


def test_abs_diff_priority():
    assert _abs_diff(e_aim=-1.5, e_exact=-1.2, e_oracle=-1.1, e_reference=-1.0) == pytest.approx(0.5)
    assert _abs_diff(e_exact=-1.2, e_oracle=-1.1, e_reference=-1.0) == pytest.approx(0.1)
    assert _abs_diff(e_aim=-1.5, e_exact=-1.2, e_oracle=-1.1) == pytest.approx(0.3)
    assert _abs_diff(e_aim=-1.5, e_oracle=-1.1) == pytest.approx(0.4)
    assert _abs_diff(e_exact=-1.2, e_oracle=-1.1) == pytest.approx(0.1)
    assert _abs_diff(e_exact=-1.2) is None


def test_row_needs_an_energy():
    with pytest.raises(ConfigError):
        ComparisonRow(0, 0)


def test_record_formatting(sample_rows):
    record = sample_rows[1].to_record()

    assert record == {
        "n": "1", "ell": "0", "e_aim": "", "e_exact": "-15.19378513", "e_oracle": "",
        "e_reference": "-15.19378513", "abs_diff": ""
    }
    assert format_energy(mpmath.mpf("-28.2187695312345678")) == "-28.2187695312"


def test_record_needs_every_column():
    with pytest.raises(ConfigError):
        ComparisonRow.from_record({"n": "0", "ell": "0", "e_aim": "-1"})


# ── CSV ───────────────────────────────────────────────────────────────────────

def test_csv_layout(sample_rows, tmp_path):
    csv_path = tmp_path / "rows.csv"
    write_csv(sample_rows, csv_path)
    csv_bytes = csv_path.read_bytes()

    assert csv_bytes.startswith(b"n,ell,e_aim,e_exact,e_oracle,e_reference,abs_diff\n")
    assert b"\r\n" not in csv_bytes
    assert csv_bytes.decode("utf-8").splitlines()[2] == "1,0,,-15.19378513,,-15.19378513,"
    assert read_csv(csv_path) == sample_rows


def test_csv_is_deterministic(sample_rows, tmp_path):
    write_csv(sample_rows, tmp_path / "first.csv")
    write_csv(sample_rows, tmp_path / "second.csv")

    assert (tmp_path / "first.csv").read_bytes() == (tmp_path / "second.csv").read_bytes()


def test_csv_to_stdout(sample_rows, capsys):
    write_csv(sample_rows)

    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(CSV_COLUMNS)
    assert len(lines) == 4


def test_csv_parent_must_exist(sample_rows, tmp_path):
    with pytest.raises(ConfigError):
        write_csv(sample_rows, tmp_path / "missing" / "rows.csv")


def test_rows_to_frame(sample_rows):
    frame = rows_to_frame(sample_rows)

    assert list(frame.columns) == CSV_COLUMNS
    assert frame["e_aim"].tolist() == ["-28.21876951", "", ""]


# ── Diagnostics frames ────────────────────────────────────────────────────────

def test_shape_frame(table_3_params):
    frame = shape_to_frame(classify_potential(table_3_params))

    assert frame["kind"].tolist() == ["min", "max"]
    assert set(frame["classification"]) == {"TwoExtrema"}


def test_x0_scan_frame():
    track = RootTrack(10, mpmath.mpf("-5"))
    result = EigenResult(n=0, energy=mpmath.mpf("-5"), k_converged=10, residual=mpmath.mpf("1e-9"),
                         status=EigenStatus.CONVERGED, history=track.history)

    frame = x0_scan_to_frame([(mpmath.mpf("0"), result), (mpmath.mpf("0.5"), None)])

    assert frame["status"].tolist() == ["Converged", None]
    assert frame["energy"].iloc[0] == pytest.approx(-5)


def test_table_output_path(tmp_path):
    assert table_output_path(tmp_path, TableId.T3) == tmp_path / "table_3.csv"


# ── References ────────────────────────────────────────────────────────────────

def test_reference_tables():
    assert get_reference_table(TableId.T4).cell_count == 18
    assert get_reference_table(TableId.T3).reference[2] == ["-11.585302647445"]
    assert get_reference_table(TableId.T2).reference is TABLE_2_EXACT
    assert get_reference_table(TableId.T3).ells == [0, 1, 2, 3]


@pytest.mark.parametrize("table_id", list(TableId))
def test_reference_values_ascend(table_id):
    for column in REFERENCE_TABLES[table_id].columns.values():
        for energies in column.values():
            values = [float(energy) for energy in energies]
            assert values == sorted(values)
            assert all(value < 0 for value in values)


# ── Running ───────────────────────────────────────────────────────────────────

def test_run_exact(precision_50):
    rows = run(RunConfig.from_dict(dict(TABLE_2_CONFIG, mode="ExactPT", precision_digits=50)))

    assert [row.n for row in rows] == [0, 1, 2, 3]
    for row, published in zip(rows, TABLE_2_EXACT[0]):
        assert row.e_aim is None and row.e_oracle is None
        assert abs(row.e_exact - mpmath.mpf(published)) < 5e-8


@ignore_coarse_grid
def test_run_oracle():
    rows = run(RunConfig.from_dict(dict(TABLE_2_CONFIG, mode="Oracle", n_points=2000, count=2)))

    assert len(rows) == 2
    assert rows[0].e_oracle == pytest.approx(float(TABLE_2_EXACT[0][0]), abs=1e-3)


@ignore_coarse_grid
def test_run_compare_joins_by_level():
    rows = run(RunConfig.from_dict(dict(
        TABLE_2_CONFIG, mode="Compare", n_points=2000, k_max=20, precision_digits=30, scan_points=20
    )))

    # AIM roots are matched onto the exact levels, extra roots never add rows
    assert [row.n for row in rows] == [0, 1, 2, 3]
    for row in rows:
        assert row.e_exact is not None
        assert row.e_oracle == pytest.approx(float(row.e_exact), abs=1e-2)
        assert row.abs_diff is not None


@ignore_coarse_grid
def test_reproduce_table_2_quickly():
    rows = reproduce_table(
        TableId.T2,
        settings=AimSettings(k_max=20, precision_digits=30, scan_points=20),
        grid=OracleGrid(n_points=2000)
    )

    assert [(row.n, row.ell) for row in rows] == [(0, 0), (1, 0), (2, 0), (3, 0)]
    for row, published in zip(rows, TABLE_2_EXACT[0]):
        assert format_energy(row.e_reference) == format_energy(mpmath.mpf(published))
        assert abs(row.e_exact - row.e_reference) < 5e-8
        assert row.e_oracle == pytest.approx(float(published), abs=1e-2)


def test_reproduce_without_oracle():
    rows = reproduce_table(
        TableId.T2, settings=AimSettings(k_max=20, precision_digits=30, scan_points=20), with_oracle=False
    )

    assert all(row.e_oracle is None for row in rows)
    assert all(row.e_exact is not None for row in rows)


# ── Level matching ────────────────────────────────────────────────────────────

def test_match_to_levels_skips_spurious_roots(precision_50, caplog):
    levels = [mpmath.mpf(value) for value in ["-28", "-15", "-6"]]
    aim = [mpmath.mpf(value) for value in ["-40", "-28.0001", "-14.9999", "-6.0001"]]

    assert match_to_levels(levels, aim, ell=0) == aim[1:]
    assert any("-40" in record.getMessage() and record.levelname == "WARNING" for record in caplog.records)


def test_match_to_levels_leaves_gaps(precision_50):
    levels = [mpmath.mpf(value) for value in ["-28", "-15", "-6"]]
    aim = [mpmath.mpf(value) for value in ["-28.0001", "-6.0001"]]

    assert match_to_levels(levels, aim, ell=0) == [aim[0], None, aim[1]]


def test_reproduce_matches_aim_by_energy(monkeypatch):
    # A spurious root under the ground state must not push the AIM column down a row
    def fake_spectrum(p, settings):
        energies = ["-40"] + [value for value in TABLE_2_EXACT[0] if value != TABLE_2_EXACT[0][2]]
        return [
            EigenResult(n=n, energy=mpmath.mpf(energy), k_converged=20, residual=mpmath.mpf("1e-12"),
                        status=EigenStatus.CONVERGED)
            for n, energy in enumerate(energies)
        ]

    monkeypatch.setattr(report_utils, "find_spectrum", fake_spectrum)
    rows = reproduce_table(TableId.T2, settings=AimSettings(k_max=20, precision_digits=30), with_oracle=False)

    assert [row.n for row in rows] == [0, 1, 2, 3]
    assert rows[2].e_aim is None
    for n in [0, 1, 3]:
        assert abs(rows[n].e_aim - rows[n].e_reference) < 1e-6
