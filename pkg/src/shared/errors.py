"""Exception hierarchy shared by every engine module.

Each top-level class maps to one CLI exit status.
"""
from typing import Any, Optional


class EngineError(Exception):
    """Base class for all engine failures."""

    exit_code = 2


class ValidationError(EngineError):
    """A manifold or Lie algebra violates one of its axioms."""

    exit_code = 1

    def __init__(self, axiom: str, message: str, witness: Any = None):
        super().__init__(f"{axiom}: {message}")
        self.axiom = axiom
        self.message = message
        self.witness = witness


class ManifestError(ValidationError):
    """Manifest text could not be turned into manifold data."""

    def __init__(self, message: str, pointer: str = ""):
        super().__init__("MANIFEST", f"{message} (at '{pointer or '/'}')")
        self.pointer = pointer


class ConsistencyError(EngineError):
    """An exact identity, audit or implication failed on validated input."""

    exit_code = 2

    def __init__(self, check: str, message: str, defect: Any = None):
        super().__init__(f"{check}: {message}")
        self.check = check
        self.defect = defect


class InputOutputError(EngineError):
    """A manifest or config file could not be read."""

    exit_code = 3


class ConfigurationError(EngineError):
    exit_code = 1


class ShapeMismatchError(EngineError):
    """Matrix or form operands have incompatible shapes."""


class NonSquareMatrixError(ShapeMismatchError):
    pass


class ZeroPolynomialError(EngineError):
    pass


class NotPositiveSemidefiniteError(EngineError):
    """A quadratic form took a negative value; ``witness`` attains it."""

    def __init__(self, message: str, witness: Optional[list] = None, value: Any = None):
        super().__init__(message)
        self.witness = witness
        self.value = value
