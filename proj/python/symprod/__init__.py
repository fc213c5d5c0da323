"""Exact orbifold cohomology rings of symmetric products."""

from fractions import Fraction
from importlib import resources
from pathlib import Path

from . import _core
from ._core import (
    Algebra,
    ExpressionError,
    NotASurface,
    SymprodError,
    ValidationError,
    gottsche_polynomial,
    graph_defects,
    invariant_dimensions,
    multiply,
    orbifold_poincare,
    table_json,
)

__all__ = [
    "Algebra",
    "ExpressionError",
    "NotASurface",
    "SymprodError",
    "ValidationError",
    "bundled_algebra",
    "gottsche_polynomial",
    "graph_defects",
    "invariant_dimensions",
    "multiply",
    "orbifold_poincare",
    "table_json",
    "three_point",
]


def three_point(algebra, n, a, b, c):
    """Three-point value of three single sector terms, as a Fraction."""
    return Fraction(_core.three_point(algebra, n, a, b, c))


def bundled_algebra(name, twist=False):
    """Load one of the algebra files installed with the package."""
    path = Path(str(resources.files(__package__))) / "data" / "algebras" / f"{name}.json"
    return Algebra.load(str(path), twist)
