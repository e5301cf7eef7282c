#!/usr/bin/env python3

"""
The physical inputs of the four parameter hyperbolic potential

    V(r) = [V0 + V1 tanh^2(lambda r) + V2 tanh^4(lambda r)] / sinh^2(lambda r)

plus the angular momentum ell and the units hbar, mass.

Values are kept as given (str / int / float / mpf) and only become Reals when read,
so they pick up whatever working precision the caller is in.
"""

# External imports
from typing import Dict, Union
import mpmath
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Utils
from ..utils.errors import InvalidParamsError
from ..utils.logging import get_logger
from ..utils.precision import Real

# Set logger
logger = get_logger()

Number = Union[str, int, float, mpmath.mpf]


class PotentialParams:
    """
    A potential has the following attributes
    * v0, v1, v2     # energy scales
    * lam            # the inverse length lambda, lambda > 0
    * ell            # angular momentum, ell >= 0
    * hbar, mass     # both default to 1
    """

    def __init__(self, v0: Number, v1: Number, v2: Number, lam: Number = 1, ell: int = 0,
                 hbar: Number = 1, mass: Number = 1):
        self._v0 = v0
        self._v1 = v1
        self._v2 = v2
        self._lam = lam
        self._hbar = hbar
        self._mass = mass

        if isinstance(ell, bool) or int(ell) != ell:
            logger.error(f"ell must be a non-negative integer, got \"{ell}\"")
            raise InvalidParamsError(f"ell: {ell} is not an integer")
        self.ell = int(ell)

        self.check_params()

    def check_params(self):
        """
        Check lambda > 0, ell >= 0, hbar > 0, mass > 0
        V0 < 0 is tolerated with a warning, V0 = 0 is in use by the published tables even though V0 > 0 is quoted
        :return:
        """
        if not self.lam > 0:
            logger.error(f"lambda must be positive, got {self._lam}")
            raise InvalidParamsError(f"lambda: {self._lam} is not positive")

        if self.ell < 0:
            logger.error(f"ell must be non-negative, got {self.ell}")
            raise InvalidParamsError(f"ell: {self.ell} is negative")

        if not self.hbar > 0:
            logger.error(f"hbar must be positive, got {self._hbar}")
            raise InvalidParamsError(f"hbar: {self._hbar} is not positive")

        if not self.mass > 0:
            logger.error(f"mass must be positive, got {self._mass}")
            raise InvalidParamsError(f"mass: {self._mass} is not positive")

        if self.v0 < 0:
            logger.warning(f"V0 = {self._v0} is negative, the 1/r^2 wall is attractive and results may not be trusted")

    @property
    def v0(self) -> Real:
        return mpmath.mpf(self._v0)

    @property
    def v1(self) -> Real:
        return mpmath.mpf(self._v1)

    @property
    def v2(self) -> Real:
        return mpmath.mpf(self._v2)

    @property
    def lam(self) -> Real:
        return mpmath.mpf(self._lam)

    @property
    def hbar(self) -> Real:
        return mpmath.mpf(self._hbar)

    @property
    def mass(self) -> Real:
        return mpmath.mpf(self._mass)

    @property
    def is_poschl_teller(self) -> bool:
        return self.v2 == 0

    @property
    def is_finite_at_origin(self) -> bool:
        """
        No 1/r^2 wall and no centrifugal term, psi is linear at the origin
        """
        return self.v0 == 0 and self.ell == 0

    def with_ell(self, ell: int) -> 'PotentialParams':
        return PotentialParams(self._v0, self._v1, self._v2, self._lam, ell, self._hbar, self._mass)

    def as_floats(self) -> Dict[str, float]:
        return {
            "v0": float(self.v0), "v1": float(self.v1), "v2": float(self.v2), "lam": float(self.lam),
            "hbar": float(self.hbar), "mass": float(self.mass)
        }

    def to_dict(self) -> OrderedDict:
        return OrderedDict({
            "v0": self._v0,
            "v1": self._v1,
            "v2": self._v2,
            "lambda": self._lam,
            "ell": self.ell,
            "hbar": self._hbar,
            "mass": self._mass
        })

    @classmethod
    def from_dict(cls, params_dict: Dict) -> 'PotentialParams':
        """
        Keys match the config file, i.e 'lambda' rather than 'lam'
        :param params_dict:
        :return:
        """
        for key in ["v0", "v1", "v2"]:
            if params_dict.get(key, None) is None:
                logger.error(f"\"{key}\" attribute not found, cannot create potential parameters")
                raise InvalidParamsError(f"{key}: missing")

        return cls(
            v0=params_dict.get("v0"),
            v1=params_dict.get("v1"),
            v2=params_dict.get("v2"),
            lam=params_dict.get("lambda", 1),
            ell=params_dict.get("ell", 0),
            hbar=params_dict.get("hbar", 1),
            mass=params_dict.get("mass", 1)
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, PotentialParams) and dict(self.to_dict()) == dict(other.to_dict())

    def __repr__(self) -> str:
        return (
            f"PotentialParams(v0={self._v0}, v1={self._v1}, v2={self._v2}, lambda={self._lam}, "
            f"ell={self.ell}, hbar={self._hbar}, mass={self._mass})"
        )
