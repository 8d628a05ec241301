"""Cl(3,0) geometric algebra and a verification harness for mu = +/-I hidden-variable models."""

__version__ = "0.1.0"

from .errors import DomainError, MixedRepresentationError, ParallelVectorsError
from .ga_core import (
    E1,
    E2,
    E3,
    E12,
    E23,
    E31,
    I,
    ONE,
    Multivector,
    Pseudoscalar,
    Vector3,
    cross,
    dot,
    geometric_product,
    grade_project,
    hodge_dual,
    reflect_axis,
    reverse,
    unit_vector,
    wedge,
)

__all__ = [
    "DomainError",
    "MixedRepresentationError",
    "ParallelVectorsError",
    "E1",
    "E2",
    "E3",
    "E12",
    "E23",
    "E31",
    "I",
    "ONE",
    "Multivector",
    "Pseudoscalar",
    "Vector3",
    "cross",
    "dot",
    "geometric_product",
    "grade_project",
    "hodge_dual",
    "reflect_axis",
    "reverse",
    "unit_vector",
    "wedge",
]
