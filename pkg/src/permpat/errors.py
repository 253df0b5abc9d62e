"""Shared exception types."""


class ParseError(ValueError):
    """Malformed textual input (word, matrix or graph)."""


class BudgetExceeded(RuntimeError):
    """An exact search was refused because it would exceed its size guard."""
