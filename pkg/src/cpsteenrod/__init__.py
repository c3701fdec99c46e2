"""Exact degree arithmetic and graded-dimension counting for the C_p-equivariant dual Steenrod algebra."""

from .blocks import DsaFactor, DsaModel, SpectrumExpr
from .grading import RODegree
from .lenses import Lens, evaluate
from .series import GradedDimSeries

__all__ = ["DsaFactor", "DsaModel", "GradedDimSeries", "Lens", "RODegree", "SpectrumExpr", "evaluate"]
__version__ = "0.1.0"
