"""Exact counting and maximization of 3-term arithmetic progressions in metric spaces."""
from .counting import Ap3Report, circle_pairs, count, count_ap3, count_ap3_grouped
from .errors import Ap3Error, BudgetExceeded, InvalidInput, InvalidParameters, NotAMetric, ParseError
from .metric import (Circle, CompleteBipartite, EquatorPoles, Euclidean, FiniteGraph, Lattice, Line,
                     PointSet, RadialPlane, RegularTree, Space, distance, is_ap3)

__all__ = [
    "Ap3Error", "Ap3Report", "BudgetExceeded", "Circle", "CompleteBipartite", "EquatorPoles",
    "Euclidean", "FiniteGraph", "InvalidInput", "InvalidParameters", "Lattice", "Line", "NotAMetric",
    "ParseError", "PointSet", "RadialPlane", "RegularTree", "Space", "circle_pairs", "count",
    "count_ap3", "count_ap3_grouped", "distance", "is_ap3",
]
