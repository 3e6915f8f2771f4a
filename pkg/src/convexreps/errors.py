"""Errors signalling that a proved statement appeared violated.

These are always defects in the input validation or in this package, never
mathematical findings.  The CLI maps them to exit code 2.
"""


class InvariantViolation(RuntimeError):
    pass


class BoundViolation(InvariantViolation):
    """A convex set had a nonzero difference with more than floor(n/2) representations."""


class WitnessStructureError(InvariantViolation):
    """A witness list broke the ordering forced by convexity."""
