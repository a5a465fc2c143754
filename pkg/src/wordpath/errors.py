"""Exception types shared across the package."""


class InsufficientDataError(Exception):
    """Input too small or degenerate for the requested computation."""


class DisconnectedGraphError(ValueError):
    """Graph has more than one component and strict connectivity was required."""


class CorruptStreamError(ValueError):
    """Growth event stream references nodes inconsistently."""
