"""Exceptions raised by eigenshape.

The argument errors derive from `ValueError` and the numeric errors from
`RuntimeError`, so callers that only know the builtin hierarchy still catch them.
"""
from typing import Optional


class EigenshapeError(Exception):
    """Base class of all eigenshape errors."""


class InvalidArgumentError(EigenshapeError, ValueError):
    """An argument violates a precondition."""


class NoPositiveEigenvalueError(InvalidArgumentError):
    """The Neumann problem has no positive principal eigenvalue (∫m ≥ 0)."""


class AssemblyError(EigenshapeError, RuntimeError):
    """An element could not be assembled.

    Attributes:
        element_index (int): Index of the offending element.
    """

    def __init__(self, message: str, element_index: int) -> None:
        super().__init__(message)
        self.element_index = element_index


class NumericFailureError(EigenshapeError, RuntimeError):
    """A factorization, eigensolve or root search failed.

    Attributes:
        probe (Optional[float]): The eigenvalue probe at which the failure occurred.
    """

    def __init__(self, message: str, probe: Optional[float] = None) -> None:
        super().__init__(message)
        self.probe = probe


class InstabilityError(NumericFailureError):
    """A time integration left the admissible range of densities."""
