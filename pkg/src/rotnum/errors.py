"""Exception hierarchy shared by all rotnum modules.

The CLI maps these onto its exit-code contract: syntax problems exit 1,
semantic validation problems exit 2, unresolved rotation numbers exit 3,
and relator / lifting obstructions exit 4.
"""

from __future__ import annotations


class RotnumError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(RotnumError):
    """Malformed textual input (configs, words, fractions, map files)."""


class InvalidArgument(RotnumError):
    """Argument outside the documented domain (e.g. genus < 2, n <= 0)."""


class InvalidSpec(RotnumError):
    """A maximal-map spec that is inconsistent with its point configuration."""


class InverseNotSupported(RotnumError):
    """A word with inverse letters was passed to the monotone-map engine.

    Maximal monotone maps are not invertible, and the extremal function of
    a word loses monotonicity once inverses are permitted, so the engine
    only accepts positive words.
    """


class InvalidPL(RotnumError):
    """Data that does not define a piecewise-linear lift (bad monotonicity)."""


class ComplexityExceeded(InvalidPL):
    """A composition exceeded the per-call breakpoint budget."""


class NotResolved(RotnumError):
    """A rotation number could not be certified rational within Qmax.

    Carries the partial results so callers can inspect the certified
    intervals or the list of unresolved words.
    """

    def __init__(self, message: str, details=None):
        super().__init__(message)
        self.details = details


class RelatorNotSatisfied(RotnumError):
    """The surface-group relator product is not an integer translation."""

    def __init__(self, message: str, offending_map=None):
        super().__init__(message)
        self.offending_map = offending_map


class NotInCentralizer(RotnumError):
    """Deformation map fails to commute with the required element."""


class InconsistentSplitting(RotnumError):
    """Bending data does not describe a valid two-sided splitting."""


class LiftObstruction(RotnumError):
    """Requested lift census violates the divisibility constraint."""


class InvalidComparison(RotnumError):
    """Fingerprints of different genus or radius cannot be compared."""
