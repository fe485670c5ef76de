"""Geographic plans, Eulerian partitions of double graphs and map building."""

from .errors import (
    BudgetExceeded,
    FormatError,
    GeoplanError,
    InternalInconsistency,
    MultipleSurfacesError,
    UsageError,
)
from .multigraph import DegreeSequence, Multigraph, degree_sequence, is_connected, is_eulerian
from .plan import Bimatrix, Plan, SequencePair, SurfaceClass, dual, is_geographic, parse_plan

__all__ = [
    "Bimatrix",
    "BudgetExceeded",
    "DegreeSequence",
    "FormatError",
    "GeoplanError",
    "InternalInconsistency",
    "Multigraph",
    "MultipleSurfacesError",
    "Plan",
    "SequencePair",
    "SurfaceClass",
    "UsageError",
    "degree_sequence",
    "dual",
    "is_connected",
    "is_eulerian",
    "is_geographic",
    "parse_plan",
]
