"""
Shared fixtures: the published parameter sets, a fixed seed generator, precision contexts and light AIM settings
"""

import numpy as np
import pytest

from aim_spectra.classes.aim_settings import AimSettings
from aim_spectra.classes.potential_params import PotentialParams
from aim_spectra.utils.globals import PRECISION_DIGITS_ENV_VAR
from aim_spectra.utils.precision import working_precision


# ── Environment ───────────────────────────────────────────────────────────────

@pytest.fixture(autouse=True)
def clean_precision_env(monkeypatch):
    # A developer's shell setting must not change what the suite computes
    monkeypatch.delenv(PRECISION_DIGITS_ENV_VAR, raising=False)


# ── Parameter sets ────────────────────────────────────────────────────────────

@pytest.fixture
def table_1_params() -> PotentialParams:
    return PotentialParams(v0=1, v1=-50, v2=2)


@pytest.fixture
def table_2_params() -> PotentialParams:
    return PotentialParams(v0=1, v1=-50, v2=0)


@pytest.fixture
def table_3_params() -> PotentialParams:
    return PotentialParams(v0=2, v1=-80, v2=120)


@pytest.fixture
def table_4_params() -> PotentialParams:
    return PotentialParams(v0=0, v1=-70, v2=20)


@pytest.fixture
def unbound_params() -> PotentialParams:
    # V = 1 / (sinh^2 cosh^2) > 0 everywhere, nothing is bound
    return PotentialParams(v0=1, v1=-1, v2=0)


# ── Numerics ──────────────────────────────────────────────────────────────────

@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240611)


@pytest.fixture
def precision_50():
    with working_precision(50):
        yield 50


@pytest.fixture
def precision_100():
    with working_precision(100):
        yield 100


@pytest.fixture
def quick_settings() -> AimSettings:
    return AimSettings(k_max=20, k_stride=10, precision_digits=30, scan_points=20)
