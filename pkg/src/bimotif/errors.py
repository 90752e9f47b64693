"""Shared exception base for the package."""


class BimotifError(Exception):
    """Base class for all errors raised by bimotif."""
