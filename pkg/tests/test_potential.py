"""
Potential evaluation, coordinate change, the Poschl-Teller closed form and shape classification
"""

import mpmath
import numpy as np
import pytest

from aim_spectra.classes.potential_params import PotentialParams
from aim_spectra.utils.errors import DomainError, InvalidParamsError, UnsupportedParamsError
from aim_spectra.utils.globals import ShapeClassification
from aim_spectra.utils.potential_utils import (
    classify_extrema, classify_potential, pt_exact_spectrum, pt_level_count, r_of_x, v_of_r, v_of_r_array, v_of_x,
    x_of_r
)
from aim_spectra.utils.references import TABLE_2_EXACT


# ── Parameters ────────────────────────────────────────────────────────────────

@pytest.mark.parametrize("kwargs", [
    {"lam": 0},
    {"lam": -1},
    {"ell": -1},
    {"ell": 1.5},
    {"mass": 0},
    {"hbar": -1},
])
def test_invalid_params(kwargs):
    with pytest.raises(InvalidParamsError):
        PotentialParams(v0=1, v1=-50, v2=0, **kwargs)


def test_negative_v0_is_accepted():
    assert PotentialParams(v0=-0.1, v1=-50, v2=0).v0 < 0


def test_params_dict_round_trip(table_3_params):
    params = table_3_params.with_ell(2)
    assert PotentialParams.from_dict(dict(params.to_dict())) == params
    assert params.ell == 2


def test_params_from_dict_needs_strengths():
    with pytest.raises(InvalidParamsError):
        PotentialParams.from_dict({"v0": 1, "v2": 0})


# ── Evaluation ────────────────────────────────────────────────────────────────

def test_v_of_r_value(precision_50, table_1_params):
    tanh_sq = mpmath.tanh(1) ** 2
    expected = (1 - 50 * tanh_sq + 2 * tanh_sq ** 2) / mpmath.sinh(1) ** 2

    assert abs(v_of_r(1, table_1_params) - expected) < mpmath.mpf(10) ** -45


@pytest.mark.parametrize("lam", ["1", "0.5", "2"])
def test_v_of_r_decays_exponentially(precision_50, lam):
    p = PotentialParams(v0=2, v1=-80, v2=120, lam=lam)
    r = 30 / p.lam
    limit = 4 * (p.v0 + p.v1 + p.v2)

    assert abs(mpmath.exp(2 * p.lam * r) * v_of_r(r, p) - limit) <= 1e-8 * abs(limit)


@pytest.mark.parametrize("lam", ["1", "0.5", "2"])
def test_v_of_r_singular_limit(precision_50, lam):
    p = PotentialParams(v0=2, v1=-80, v2=120, lam=lam)
    r = mpmath.mpf("1e-8") / p.lam
    limit = p.v0 / p.lam ** 2

    assert abs(r ** 2 * v_of_r(r, p) - limit) <= 1e-6 * abs(limit)


def test_v_of_r_array_matches_mpmath(precision_50, table_3_params):
    radii = np.geomspace(1e-3, 20, 50)
    array_values = v_of_r_array(radii, table_3_params)

    for r, value in zip(radii, array_values):
        assert value == pytest.approx(float(v_of_r(r, table_3_params)), rel=1e-12, abs=1e-9)


def test_transform_identity(precision_100, rng, table_3_params):
    for r in rng.uniform(0.01, 10, 100):
        direct = v_of_r(r, table_3_params)
        transformed = v_of_x(x_of_r(r, table_3_params.lam), table_3_params)

        assert abs(transformed - direct) <= mpmath.mpf(10) ** -30 * abs(direct)


def test_coordinate_round_trip(precision_50):
    for r in ["0.01", "0.5", "1", "3"]:
        assert abs(r_of_x(x_of_r(r, 2), 2) - mpmath.mpf(r)) < mpmath.mpf(10) ** -40


def test_coordinate_limits(precision_50):
    assert abs(x_of_r("1e-10", 1) + 1) < mpmath.mpf(10) ** -18
    assert abs(x_of_r(40, 1) - 1) < mpmath.mpf(10) ** -30
    assert x_of_r(1, 1) == pytest.approx(2 * np.tanh(1.0) ** 2 - 1)


def test_domain_errors(precision_50, table_1_params):
    with pytest.raises(DomainError):
        v_of_r(0, table_1_params)
    with pytest.raises(DomainError):
        x_of_r(-1, 1)
    with pytest.raises(DomainError):
        r_of_x(1, 1)
    with pytest.raises(DomainError):
        v_of_x(-1, table_1_params)


# ── Exact spectrum ────────────────────────────────────────────────────────────

def test_exact_spectrum_matches_published(precision_50, table_2_params):
    spectrum = pt_exact_spectrum(table_2_params)

    assert pt_level_count(table_2_params) == 4
    assert len(spectrum) == 4
    for energy, published in zip(spectrum, TABLE_2_EXACT[0]):
        assert abs(energy - mpmath.mpf(published)) <= 5e-8


def test_exact_spectrum_is_ascending(precision_50, table_2_params):
    spectrum = pt_exact_spectrum(table_2_params)
    assert all(lower < upper for lower, upper in zip(spectrum, spectrum[1:]))
    assert all(energy < 0 for energy in spectrum)


def test_exact_spectrum_scales_with_lambda(precision_50, table_2_params):
    # Same V / lambda^2 so every energy scales with lambda^2
    scaled = PotentialParams(v0=4, v1=-200, v2=0, lam=2)

    for energy, scaled_energy in zip(pt_exact_spectrum(table_2_params), pt_exact_spectrum(scaled)):
        assert abs(scaled_energy - 4 * energy) < mpmath.mpf(10) ** -40


def test_exact_spectrum_empty(precision_50, unbound_params):
    assert pt_level_count(unbound_params) == 0
    assert pt_exact_spectrum(unbound_params) == []


def test_exact_spectrum_unsupported(precision_50, table_1_params, table_2_params):
    with pytest.raises(UnsupportedParamsError):
        pt_exact_spectrum(table_1_params)
    with pytest.raises(UnsupportedParamsError):
        pt_exact_spectrum(table_2_params.with_ell(1))
    with pytest.raises(UnsupportedParamsError):
        pt_exact_spectrum(PotentialParams(v0=-1, v1=-50, v2=0))


# ── Classification ────────────────────────────────────────────────────────────

def test_classify_single_minimum(table_1_params):
    shape = classify_potential(table_1_params)

    radii = np.geomspace(1e-3, 30, 400000)
    scanned_min = float(np.min(v_of_r_array(radii, table_1_params)))

    assert shape.classification == ShapeClassification.SINGLE_MINIMUM
    assert len(shape.minima) == 1
    assert shape.v_min <= scanned_min + 1e-9
    assert shape.v_min == pytest.approx(scanned_min, abs=1e-6)


def test_classify_two_extrema(table_3_params):
    shape = classify_potential(table_3_params)

    assert shape.classification == ShapeClassification.TWO_EXTREMA
    (r_min, v_min, _), = shape.minima
    (r_max, v_max, _), = shape.maxima
    assert r_min < r_max
    assert v_min < 0 < v_max
    assert shape.v_min == pytest.approx(v_min)


def test_classify_monotone_repulsive():
    shape = classify_potential(PotentialParams(v0=1, v1=0, v2=0))

    assert shape.classification == ShapeClassification.INFLECTION_OR_MONOTONE
    assert shape.extrema == []
    assert shape.v_min is None


def test_classify_finite_at_origin(table_4_params):
    # V0 = 0 leaves V(0) = V1, and V rises monotonically from there
    shape = classify_potential(table_4_params)

    assert shape.classification == ShapeClassification.INFLECTION_OR_MONOTONE
    assert shape.v_min == pytest.approx(-70, abs=1e-4)


def test_classify_lone_maximum(precision_50):
    # V0 < 0 falls to -inf at the origin, V1 > 0 adds a single hump before the exponential tail
    p = PotentialParams(v0=-1, v1=10, v2=0)
    shape = classify_potential(p)

    assert shape.classification == ShapeClassification.INFLECTION_OR_MONOTONE
    assert shape.minima == []
    (r_max, v_max, _), = shape.maxima
    # sinh^2(r) = 1 / (sqrt(10) - 1) at the top of the hump
    assert r_max == pytest.approx(float(mpmath.asinh(mpmath.sqrt(1 / (mpmath.sqrt(10) - 1)))), rel=1e-4)
    assert v_max > 0


@pytest.mark.parametrize(
    "min_count, max_count, expected",
    [
        (1, 1, ShapeClassification.TWO_EXTREMA),
        (1, 0, ShapeClassification.SINGLE_MINIMUM),
        (0, 1, ShapeClassification.INFLECTION_OR_MONOTONE),
        (0, 0, ShapeClassification.INFLECTION_OR_MONOTONE),
        (2, 1, ShapeClassification.INFLECTION_OR_MONOTONE),
    ]
)
def test_classify_extrema(min_count, max_count, expected):
    assert classify_extrema(min_count, max_count) == expected


def test_classify_has_no_bound_region(unbound_params):
    assert classify_potential(unbound_params).v_min is None


def test_shape_to_dict(table_3_params):
    shape_dict = classify_potential(table_3_params).to_dict()

    assert shape_dict["classification"] == "TwoExtrema"
    assert [extremum["kind"] for extremum in shape_dict["extrema"]] == ["min", "max"]
