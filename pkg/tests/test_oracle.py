"""
Finite difference oracle: grid, operator, Sturm counts, bisection and the two grid spectrum
"""

import numpy as np
import pytest

from aim_spectra.classes.oracle_grid import OracleGrid
from aim_spectra.classes.potential_params import PotentialParams
from aim_spectra.classes.tridiagonal_operator import TridiagonalOperator
from aim_spectra.utils.errors import InvalidGridError
from aim_spectra.utils.oracle_utils import discretize, eigen_bisect, oracle_spectrum, sturm_count
from aim_spectra.utils.potential_utils import pt_exact_spectrum, v_of_r_array
from aim_spectra.utils.precision import working_precision
from aim_spectra.utils.references import TABLE_1_TRA

ignore_coarse_grid = pytest.mark.filterwarnings("ignore::aim_spectra.utils.errors.GridTooCoarseWarning")


def _box_ground_state(n_points: int, length: float = 1.0) -> float:
    grid = OracleGrid(r_min=0, r_max=length, n_points=n_points)
    return eigen_bisect(discretize(PotentialParams(v0=0, v1=0, v2=0), grid), 1)[0]


# ── Grid ──────────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("kwargs", [
    {"r_min": -1},
    {"r_min": 5, "r_max": 5},
    {"r_min": 6, "r_max": 5},
    {"n_points": 99},
])
def test_invalid_grid(kwargs):
    with pytest.raises(InvalidGridError):
        OracleGrid(**kwargs)


def test_refined_grid_halves_the_step():
    grid = OracleGrid(r_min=0, r_max=10, n_points=199)
    fine = grid.refined()

    assert fine.n_points == 399
    assert fine.step == pytest.approx(grid.step / 2)
    np.testing.assert_allclose(fine.nodes[1::2], grid.nodes, rtol=0, atol=1e-12)


def test_default_window_scales_with_lambda():
    grid = OracleGrid.for_lambda(2.0, n_points=500)
    assert (grid.r_min, grid.r_max, grid.n_points) == (0.0005, 15.0, 500)
    assert OracleGrid.from_dict(dict(grid.to_dict())).to_dict() == grid.to_dict()


def test_default_grid_stops_short_of_the_origin():
    assert OracleGrid().r_min == pytest.approx(1e-3)


def test_grid_for_params(table_2_params, table_4_params):
    # psi(0) = 0 exactly only when V is finite at the origin
    assert OracleGrid.for_params(table_4_params).r_min == 0.0
    assert OracleGrid.for_params(table_4_params.with_ell(1)).r_min == pytest.approx(1e-3)
    assert OracleGrid.for_params(table_2_params).r_min == pytest.approx(1e-3)
    assert OracleGrid.for_params(table_2_params, n_points=500).n_points == 500
    assert OracleGrid.for_params(table_4_params).r_max == OracleGrid.for_params(table_2_params).r_max


# ── Operator ──────────────────────────────────────────────────────────────────

def test_operator_shape_checks():
    with pytest.raises(InvalidGridError):
        TridiagonalOperator([], [])
    with pytest.raises(InvalidGridError):
        TridiagonalOperator([1, 2, 3], [1])


def test_discretize_entries(table_3_params):
    p = table_3_params.with_ell(2)
    grid = OracleGrid(r_min=0, r_max=10, n_points=100)
    op = discretize(p, grid)
    h, nodes = grid.step, grid.nodes

    assert len(op) == 100
    np.testing.assert_allclose(op.offdiag, -1 / (2 * h ** 2))
    np.testing.assert_allclose(
        op.diag - 1 / h ** 2, v_of_r_array(nodes, p) + 3 / nodes ** 2, rtol=1e-12, atol=1e-9
    )


def test_gershgorin_bounds():
    op = TridiagonalOperator([2, 2], [-1])
    assert op.gershgorin_bounds() == (1.0, 3.0)


# ── Sturm counts and bisection ────────────────────────────────────────────────

def test_two_by_two():
    op = TridiagonalOperator([2, 2], [-1])

    assert [sturm_count(op, shift) for shift in [0.5, 2.0, 3.5]] == [0, 1, 2]
    np.testing.assert_allclose(eigen_bisect(op, 2), [1, 3], atol=1e-9)


def test_one_by_one():
    op = TridiagonalOperator([5], [])

    assert sturm_count(op, 4.9) == 0
    assert sturm_count(op, 5.1) == 1
    assert eigen_bisect(op, 1) == pytest.approx([5])


def test_sturm_count_matches_dense_eigenvalues(rng):
    op = TridiagonalOperator(rng.uniform(-5, 5, 60), rng.uniform(-2, 2, 59))
    eigenvalues = np.linalg.eigvalsh(op.to_dense())

    for shift in rng.uniform(-8, 8, 40):
        assert sturm_count(op, shift) == int(np.sum(eigenvalues < shift))


def test_bisection_matches_dense_eigenvalues(rng):
    op = TridiagonalOperator(rng.uniform(-5, 5, 40), rng.uniform(-2, 2, 39))

    np.testing.assert_allclose(eigen_bisect(op, 10), np.linalg.eigvalsh(op.to_dense())[:10], atol=1e-9)


def test_bisection_count_is_clamped(rng):
    op = TridiagonalOperator(rng.uniform(-5, 5, 5), rng.uniform(-2, 2, 4))
    assert len(eigen_bisect(op, 12)) == 5
    with pytest.raises(InvalidGridError):
        eigen_bisect(op, 0)


# ── Known spectra ─────────────────────────────────────────────────────────────

def test_particle_in_a_box():
    assert _box_ground_state(200) == pytest.approx(np.pi ** 2 / 2, rel=1e-3)


def test_particle_in_a_box_converges_quadratically():
    exact = np.pi ** 2 / 2
    coarse_error = _box_ground_state(200) - exact
    fine_error = _box_ground_state(401) - exact

    assert coarse_error / fine_error == pytest.approx(4, abs=0.5)


def test_no_bound_states(unbound_params):
    assert oracle_spectrum(unbound_params, OracleGrid(0, 30, 500)) == []


@ignore_coarse_grid
def test_count_caps_the_levels(table_2_params):
    assert len(oracle_spectrum(table_2_params, OracleGrid(0, 30, 2000), count=2)) == 2


@ignore_coarse_grid
def test_poschl_teller_on_a_modest_grid(table_2_params):
    with working_precision(30):
        exact = [float(energy) for energy in pt_exact_spectrum(table_2_params)]

    np.testing.assert_allclose(oracle_spectrum(table_2_params, OracleGrid(0, 30, 8000)), exact, atol=1e-4)


def test_coarse_grid_warns(table_2_params):
    with pytest.warns(UserWarning):
        oracle_spectrum(table_2_params, OracleGrid(0, 30, 300), count=1)


@pytest.mark.slow
@ignore_coarse_grid
def test_poschl_teller_on_the_default_grid(table_2_params):
    with working_precision(30):
        exact = [float(energy) for energy in pt_exact_spectrum(table_2_params)]

    np.testing.assert_allclose(oracle_spectrum(table_2_params, OracleGrid()), exact, atol=1e-5)


@pytest.mark.slow
@ignore_coarse_grid
def test_inner_cutoff_is_benign(table_2_params):
    near = oracle_spectrum(table_2_params, OracleGrid(r_min=1e-3, r_max=30))
    nearer = oracle_spectrum(table_2_params, OracleGrid(r_min=5e-4, r_max=30))

    np.testing.assert_allclose(near, nearer, atol=1e-6)


@pytest.mark.slow
@ignore_coarse_grid
def test_table_1_levels(table_1_params):
    spectrum = oracle_spectrum(table_1_params, OracleGrid())

    assert len(spectrum) == 4
    np.testing.assert_allclose(spectrum[:3], [float(value) for value in TABLE_1_TRA[0][:3]], atol=1e-4)
    assert spectrum[3] == pytest.approx(-1.0, abs=1e-2)
