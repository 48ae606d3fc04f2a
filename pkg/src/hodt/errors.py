"""Exception types shared across the package."""
from .predicates import DegenerateInputError
from .delaunay import BoundaryEdgeError, NonConvexQuadError, TriangulationError

__all__ = [
    "DegenerateInputError",
    "TriangulationError",
    "BoundaryEdgeError",
    "NonConvexQuadError",
    "CapExceededError",
    "NonConvergenceError",
    "ConstructionError",
]


class CapExceededError(RuntimeError):
    """An enumeration would exceed its configured size cap."""


class NonConvergenceError(RuntimeError):
    """Numerical quadrature missed its tolerance budget."""

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConstructionError(RuntimeError):
    """An order-k retriangulation that must exist was not found."""
