#!/usr/bin/env python3

"""
Finite difference reference spectrum
"""

# External imports
from typing import List

# Subcommands
from . import Solve

# Utils
from ...utils.globals import RunMode


class Oracle(Solve):
    """Usage:
    aim-spectra [options] oracle help
    aim-spectra [options] oracle [--no-richardson]

Description:
    Discretize the radial equation with three point differences on (r-min, r-max), psi = 0 at both ends,
    and bisect the negative eigenvalues of the tridiagonal operator on its Sturm count.
    By default the problem is solved again with the step halved and the two are Richardson extrapolated.

Options:
    --config=<config.yaml>              Optional, flat yaml of config keys
    --v0=<v0>                           Strength of the 1/sinh^2 wall
    --v1=<v1>                           Strength of the tanh^2 / sinh^2 term
    --v2=<v2>                           Strength of the tanh^4 / sinh^2 term
    --lambda=<lambda>                   Optional, inverse range, default 1
    --ell=<ell>                         Optional, angular momentum, default 0
    --hbar=<hbar>                       Optional, default 1
    --mass=<mass>                       Optional, default 1
    --r-min=<r_min>                     Optional, left boundary, default 0
    --r-max=<r_max>                     Optional, right boundary, default 30 / lambda
    --n-points=<n_points>               Optional, interior grid points, default 20000
    --count=<count>                     Optional, report at most this many levels
    --no-richardson                     Optional, skip the refined grid and report the raw eigenvalues
    --output-path=<output_path>         Optional, write the CSV here rather than stdout

Example:
    aim-spectra oracle --v0=2 --v1=-80 --v2=120 --ell=1
    aim-spectra oracle --v0=0 --v1=-70 --v2=20 --n-points=40000 --no-richardson
    """

    def __init__(self, command_argv: List[str]):
        super(Oracle, self).__init__(command_argv, mode=RunMode.ORACLE)
