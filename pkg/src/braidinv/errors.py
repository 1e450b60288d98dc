"""Shared exception types."""


class InternalConsistencyError(Exception):
    """An exact identity that must hold by construction failed.

    Raised when a cross-checked quantity (a division that must be exact, a
    character sum that must reduce to 0 or |H|, a re-sorted label that must
    stay admissible) comes out wrong.  Always indicates a bug, never bad
    user input.
    """


class CapabilityError(Exception):
    """The request is valid but exceeds the supported problem size."""
