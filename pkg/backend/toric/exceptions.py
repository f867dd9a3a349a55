from __future__ import annotations


class ToricError(Exception):
    """Base error; ``exit_code`` is what the command line reports."""

    exit_code = 1


class InputError(ToricError, ValueError):
    """Malformed input: bad JSON, out-of-range vertices, bad parameters."""

    exit_code = 2


class PreconditionError(ToricError, ValueError):
    """The request is well formed but outside what the theory covers."""

    exit_code = 3


class InvariantError(ToricError, RuntimeError):
    """An internal invariant failed; this is a bug, not a user error."""

    exit_code = 4
