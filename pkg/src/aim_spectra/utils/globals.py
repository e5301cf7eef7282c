#!/usr/bin/env python3

"""
List of globals
"""

# External imports
from enum import Enum

# Environment
PRECISION_DIGITS_ENV_VAR = "AIM_SPECTRA_PRECISION_DIGITS"

# Precision
DEFAULT_PRECISION_DIGITS = 100
MIN_PRECISION_BITS = 64
SERIES_ORDER_GUARD_TERMS = 4
# The recurrence loses digits roughly linearly in k
DIGITS_LOST_PER_ITERATION = "0.45"
MIN_TRUSTED_DIGITS = 10

# AIM defaults
DEFAULT_X0 = 0
DEFAULT_K_MAX = 120
# Unconverged levels keep iterating up to K_LIMIT_FACTOR * k_max
K_LIMIT_FACTOR = 2
DEFAULT_K_STRIDE = 10
DEFAULT_SCAN_POINTS = 400
DEFAULT_E_MAX = "-1e-6"
DEFAULT_ROOT_TOL = "1e-12"
DEFAULT_CONV_TOL = "1e-8"
DEFAULT_TRACK_TOL = "0.05"
E_MIN_MARGIN = "1.05"
ROOT_MATCH_WINDOW_FACTOR = 3
JOIN_WINDOW_FACTOR = "0.5"
# Intermediate checkpoints are refined to conv_tol / TRACK_REFINE_DIVISOR, the last one to root_tol
TRACK_REFINE_DIVISOR = 10
EXTEND_BRACKET_DRIFTS = 4
EXTEND_BRACKET_MIN_CONV_TOLS = 10
EXTEND_BRACKET_GROWTH = 4

# Potential classification scan, in units of 1/lambda
CLASSIFY_R_MIN = 1e-4
CLASSIFY_R_MAX = 30.0
CLASSIFY_POINTS = 4000
CLASSIFY_REL_TOL = 1e-12

# Oracle defaults, in units of 1/lambda
DEFAULT_R_MIN = 1e-3
DEFAULT_R_MAX = 30.0
DEFAULT_N_POINTS = 20000
ORACLE_EIGEN_TOL = 1e-10
GRID_TOO_COARSE_TOL = 1e-4

# Output
ENERGY_SIGNIFICANT_DIGITS = 12
CSV_COLUMNS = ["n", "ell", "e_aim", "e_exact", "e_oracle", "e_reference", "abs_diff"]


class ShapeClassification(Enum):
    TWO_EXTREMA = "TwoExtrema"
    INFLECTION_OR_MONOTONE = "InflectionOrMonotone"
    SINGLE_MINIMUM = "SingleMinimum"


class EigenStatus(Enum):
    CONVERGED = "Converged"
    MAX_ITERATIONS = "MaxIterations"
    LOST_ROOT = "LostRoot"


class RunMode(Enum):
    AIM = "Aim"
    EXACT_PT = "ExactPT"
    ORACLE = "Oracle"
    COMPARE = "Compare"


class JetOp(Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"
    DIV = "div"


class JetTranscendental(Enum):
    SQRT = "sqrt"
    ARCTANH = "arctanh"
    SQUARE = "square"


class TableId(Enum):
    T1 = "1"
    T2 = "2"
    T3 = "3"
    T4 = "4"


# Exit codes
EXIT_SUCCESS = 0
EXIT_CONFIG_ERROR = 1
EXIT_NO_ROOTS_FOUND = 2
EXIT_NUMERIC_FAILURE = 3
