"""Exception types shared across the library."""


class VotingError(Exception):
    """Base class for library-specific errors."""


class InputError(VotingError, ValueError):
    """Invalid user input: bad parameters, ranges, or references."""


class GameValidationError(InputError):
    """A game description violates the schema or its invariants."""


class DegenerateGameError(VotingError):
    """Every player has zero influence, so powers cannot be normalized."""


class CapacityError(VotingError):
    """The request exceeds a hard enumeration limit."""
