"""Morse differentials, simplicial boundaries and integer homology."""

from morse_flowlines.homology.chains import (
    ChainBasis,
    DifferentialMatrix,
    morse_differential,
    simplicial_boundary,
    verify_d_squared,
)
from morse_flowlines.homology.groups import (
    HomologyResult,
    homology,
    morse_homology,
    simplicial_homology_oracle,
)
from morse_flowlines.homology.snf import smith_normal_form

__all__ = [
    "ChainBasis",
    "DifferentialMatrix",
    "HomologyResult",
    "homology",
    "morse_differential",
    "morse_homology",
    "simplicial_boundary",
    "simplicial_homology_oracle",
    "smith_normal_form",
    "verify_d_squared",
]
