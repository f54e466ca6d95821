"""Timelike helicoidal surfaces of Minkowski 4-space, their isometric
rotational partners, and numerical verification of the correspondence."""

from . import bour, cli, minkowski, numerics, surfaces, verify
from .errors import (BranchDomainError, ConstraintError, ConvergenceError,
                     DegenerateFrameError, DomainError, ParseError,
                     StiffnessError)

__version__ = "0.1.0"

__all__ = [
    "bour", "cli", "minkowski", "numerics", "surfaces", "verify",
    "BranchDomainError", "ConstraintError", "ConvergenceError",
    "DegenerateFrameError", "DomainError", "ParseError", "StiffnessError",
    "__version__",
]
