"""Non-Hermitian Morse problem from Riccati superpotentials.

Closed-form wavefunctions built from complex-parameter Whittaker and
Laguerre-like functions, the SUSY factorization/intertwining layer that
generates them, and independent numerical oracles that verify every
closed form by ODE residual, integration cross-check, Wronskian
constancy and intertwining constancy.
"""

from .errors import (
    EvaluationError,
    IntegerB,
    NonConvergence,
    NonNormalizable,
    ParameterPole,
    PoleError,
)
from .morse import BoundStateConvention, MorseParameters, ParameterMap
from .riccati import MorseRiccati, RiccatiSign, RiccatiSolution
from .specfun import WhittakerIndices
from .susy import ExtensionParams, Ladder, RealCaseParams, Sector
from .verify import Grid1D, ResidualReport

__all__ = [
    "BoundStateConvention",
    "EvaluationError",
    "ExtensionParams",
    "Grid1D",
    "IntegerB",
    "Ladder",
    "MorseParameters",
    "MorseRiccati",
    "NonConvergence",
    "NonNormalizable",
    "ParameterMap",
    "ParameterPole",
    "PoleError",
    "RealCaseParams",
    "ResidualReport",
    "RiccatiSign",
    "RiccatiSolution",
    "Sector",
    "WhittakerIndices",
]
