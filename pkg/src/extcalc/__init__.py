"""Ext groups between classical functors over finite fields."""
from .core import (
    Family,
    GeneratorSpec,
    GradedDims,
    HopfPresentation,
    Kind,
    TriDegree,
    graded_convolve,
    power_dims,
    presentation_coefficient,
)
from .errors import InvalidParams, UnsupportedPair

__version__ = "0.1.0"
