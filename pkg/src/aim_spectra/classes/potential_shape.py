#!/usr/bin/env python3

"""
Which of the three physical configurations a potential falls in

* TwoExtrema            # a local minimum and a local maximum, resonances and / or bound states
* InflectionOrMonotone  # no extrema, neither bound states nor resonances
* SingleMinimum         # one minimum, bound states only
"""

# External imports
from typing import List, Optional, Tuple
from ruamel.yaml.comments import CommentedMap as OrderedDict

# Utils
from ..utils.globals import ShapeClassification


class PotentialShape:
    """
    * classification   # ShapeClassification
    * extrema          # list of (r, V(r), kind) with kind 'min' or 'max', ordered by r
    * v_min            # lowest value of V over the scan window if it is a minimum worth seeding a scan from
    """

    def __init__(self, classification: ShapeClassification,
                 extrema: List[Tuple[float, float, str]], v_min: Optional[float]):
        self.classification = classification
        self.extrema = extrema
        self.v_min = v_min

    @property
    def minima(self) -> List[Tuple[float, float, str]]:
        return [extremum for extremum in self.extrema if extremum[2] == "min"]

    @property
    def maxima(self) -> List[Tuple[float, float, str]]:
        return [extremum for extremum in self.extrema if extremum[2] == "max"]

    def to_dict(self) -> OrderedDict:
        return OrderedDict({
            "classification": self.classification.value,
            "extrema": [
                OrderedDict({"r": r, "v": v, "kind": kind})
                for r, v, kind in self.extrema
            ],
            "v_min": self.v_min
        })
