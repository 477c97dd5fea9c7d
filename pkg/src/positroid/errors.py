"""Exception types shared across the package.

Each class carries the CLI exit status it maps to.
"""

from __future__ import annotations


class PositroidError(Exception):
    exit_code = 1


class InputError(PositroidError, ValueError):
    """Malformed or out-of-range user input."""

    exit_code = 2


class NecklaceError(InputError):
    """A sequence of sets violating the Grassmann necklace step condition."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class CapacityError(PositroidError):
    """A brute-force enumeration would exceed its size guard."""

    exit_code = 3


class ContractError(PositroidError, AssertionError):
    """An internal precondition failed; always indicates a bug in the caller."""

    exit_code = 4


class FixedPointError(PositroidError):
    """A core algorithm received a permutation with fixed points (loops or coloops)."""

    exit_code = 5

    explanation = (
        "fixed points of a decorated permutation are loops (white) or coloops (black); "
        "delete them and study the remaining positroid, whose permutation has no fixed points"
    )
