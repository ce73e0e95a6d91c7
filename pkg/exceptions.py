# Copyright (c) 2024 by Jonathan AW

"""
1. Custom Exceptions:
- The exceptions module contains custom exceptions that are raised in different parts of the toolchain to handle specific error scenarios.
- The CLI maps them onto exit codes (see cli/__init__.py).
"""
from typing import List, Any


class StpaParseException(Exception):
    """Raised when a .stpa text cannot be turned into a model. Carries every ParseError found."""

    def __init__(self, errors: List[Any]):
        self.errors = list(errors)
        first = self.errors[0] if self.errors else None
        super().__init__(f"{len(self.errors)} parse error(s)" + (f", first: {first}" if first else ""))


class UnresolvedReferenceException(Exception):
    """Raised when a context or rule refers to an unknown variable, value or control action."""
    pass


class InvalidStpaModelException(Exception):
    """Raised when an STPA model violates a construction invariant (duplicate names, bad value domains)."""
    pass


class ModelValidationException(Exception):
    """Raised when synthesis is requested for a model that has ERROR diagnostics."""

    def __init__(self, diagnostics: List[Any]):
        self.diagnostics = list(diagnostics)
        super().__init__(f"model has {len(self.diagnostics)} ERROR diagnostic(s)")


class LassoIndexException(Exception):
    """Raised when a formula is evaluated at a position outside the lasso."""
    pass


class InvalidLassoException(Exception):
    """Raised when a lasso is built with an empty loop."""
    pass


class InvalidBoundException(Exception):
    """Raised when the verification bound is smaller than 1."""
    pass


class InvalidStatechartDataException(Exception):
    """Raised when serialized statechart data is malformed or violates the schema."""
    pass


class TraceFileException(Exception):
    """Raised when a simulation trace file cannot be read."""
    pass


class NondeterministicStatechartException(Exception):
    """Raised when more than one transition is enabled for a state and valuation."""
    pass


class SynthesisRuleNotFoundException(Exception):
    """Raised when no synthesis rule strategy is registered for a rule role."""
    pass
