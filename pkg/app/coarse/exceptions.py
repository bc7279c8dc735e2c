"""
Error hierarchy shared by the coarse, orders, search and core apps.

Mathematical failures (a map without a modulus, a relation missing its
diagonal) are report entries, never exceptions. Exceptions are reserved for
malformed input, broken preconditions and constructions a finite window cannot
certify.
"""


class BalleanError(Exception):
    """Base class for all errors raised by this project."""


class StructuralError(BalleanError, ValueError):
    """Malformed input: unknown point, window mismatch, bad parameters."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field

    def as_dict(self):
        return {'field': self.field, 'error': str(self)}


class PreconditionError(BalleanError):
    """An operation was called on input that fails its documented check."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report or {}


class InconclusiveError(BalleanError):
    """The window is too small to certify the result of a construction."""

    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness


class SearchBudgetExceeded(InconclusiveError):
    """Backtracking ran out of its step budget."""
