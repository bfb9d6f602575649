"""Custom exceptions for the command-line layer."""

from __future__ import annotations


class ConfigurationError(ValueError):
    """Raised when replay settings are missing or invalid."""
