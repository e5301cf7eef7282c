#!/usr/bin/env python3

"""
AIM, exact and oracle energies side by side
"""

# External imports
from typing import List

# Subcommands
from . import Solve

# Utils
from ...utils.globals import RunMode


class Compare(Solve):
    """Usage:
    aim-spectra [options] compare help
    aim-spectra [options] compare [--no-richardson]

Description:
    Run the AIM search, the finite difference oracle and, when v2 = 0 and ell = 0, the exact Poschl-Teller
    spectrum, then join them by level index. abs_diff is |e_aim - e_exact| when both exist, else |e_aim - e_oracle|.
    An empty AIM spectrum is logged and leaves the e_aim column empty.

Options:
    --config=<config.yaml>              Optional, flat yaml of config keys
    --v0=<v0>                           Strength of the 1/sinh^2 wall
    --v1=<v1>                           Strength of the tanh^2 / sinh^2 term
    --v2=<v2>                           Strength of the tanh^4 / sinh^2 term
    --lambda=<lambda>                   Optional, inverse range, default 1
    --ell=<ell>                         Optional, angular momentum, default 0
    --hbar=<hbar>                       Optional, default 1
    --mass=<mass>                       Optional, default 1
    --x0=<x0>                           Optional, expansion point in (-1, 1), default 0
    --k-max=<k_max>                     Optional, last iteration of the full energy scan, default 120
    --k-limit=<k_limit>                 Optional, levels still drifting at k-max iterate up to here, default 2 k-max
    --k-stride=<k_stride>               Optional, check convergence every k-stride iterations, default 10
    --series-order=<series_order>       Optional, jet order, default k-limit + 4
    --precision-digits=<digits>         Optional, working precision in decimal digits, default 100
    --e-min=<e_min>                     Optional, bottom of the energy window, default 1.05 x the potential minimum
    --e-max=<e_max>                     Optional, top of the energy window, default -1e-6
    --scan-points=<scan_points>         Optional, energies per scan, default 400
    --root-tol=<root_tol>               Optional, final root bracket width, default 1e-12
    --conv-tol=<conv_tol>               Optional, drift at which a level is converged, default 1e-8
    --track-tol=<track_tol>             Optional, drift above which a root is spurious, default 0.05
    --workers=<workers>                 Optional, processes for the energy scan and the deeper levels, default 1
    --r-min=<r_min>                     Optional, oracle left boundary, default 0
    --r-max=<r_max>                     Optional, oracle right boundary, default 30 / lambda
    --n-points=<n_points>               Optional, oracle interior grid points, default 20000
    --count=<count>                     Optional, report at most this many oracle levels
    --no-richardson                     Optional, skip the oracle's refined grid
    --output-path=<output_path>         Optional, write the CSV here rather than stdout

Example:
    aim-spectra compare --v0=1 --v1=-50 --v2=0
    aim-spectra compare --config table_3.yaml --ell=1 --workers=4
    """

    def __init__(self, command_argv: List[str]):
        super(Compare, self).__init__(command_argv, mode=RunMode.COMPARE)
