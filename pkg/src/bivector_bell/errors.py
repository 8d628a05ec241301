"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ParallelVectorsError(DomainError):
    """Two directions are (numerically) parallel, so their plane is undefined."""


class MixedRepresentationError(TypeError):
    """Left- and right-representation elements were combined in one operation."""
