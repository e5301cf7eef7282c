#!/usr/bin/env python3

"""
Bound state energies by the asymptotic iteration method
"""

# External imports
from typing import List

# Subcommands
from . import Solve

# Utils
from ...utils.aim_utils import find_spectrum, convergence_history
from ...utils.globals import RunMode
from ...utils.logging import get_logger
from ...utils.report_utils import write_frame

# Set logger
logger = get_logger()


class Spectrum(Solve):
    """Usage:
    aim-spectra [options] spectrum help
    aim-spectra [options] spectrum [--history]

Description:
    Find the bound state energies of
        V(r) = [V0 + V1 tanh^2(lambda r) + V2 tanh^4(lambda r)] / sinh^2(lambda r)
    by scanning the AIM termination condition over the energy window, refining every sign change and
    tracking the roots every k-stride iterations up to k-max. Levels still drifting at k-max keep iterating
    in a local bracket up to k-limit.

    Options override the values in --config. The precision defaults to AIM_SPECTRA_PRECISION_DIGITS when set.

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
    --output-path=<output_path>         Optional, write the CSV here rather than stdout
    --history                           Optional, write the root history at every checkpoint instead

Example:
    aim-spectra spectrum --v0=1 --v1=-50 --v2=2
    aim-spectra spectrum --config table_1.yaml --k-max=160 --output-path table_1.csv
    aim-spectra spectrum --v0=2 --v1=-80 --v2=120 --ell=3 --history
    """

    def __init__(self, command_argv: List[str]):
        super(Spectrum, self).__init__(command_argv, mode=RunMode.AIM)

        self.history: bool = self.args.get("--history", False)

    def __call__(self):
        if not self.history:
            super(Spectrum, self).__call__()
            return

        results = find_spectrum(self.config.params, self.config.settings)
        write_frame(convergence_history(results), self.config.output_path)
