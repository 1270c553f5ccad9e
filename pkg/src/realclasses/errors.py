"""Exceptions shared across the package."""


class BudgetExceeded(Exception):
    """An enumeration would exceed the configured work budget or cap."""
