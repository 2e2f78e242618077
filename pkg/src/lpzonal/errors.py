"""Exception types shared across the toolkit."""

__all__ = [
    "DomainError",
    "DegreeCapError",
    "ConvergenceError",
    "BracketError",
    "ConfigError",
]


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class DegreeCapError(ValueError):
    """Requested degree or table size exceeds the configured cap."""


class ConvergenceError(RuntimeError):
    """An iterative scheme failed to reach its requested tolerance."""


class BracketError(RuntimeError):
    """A root bracket failed to enclose a sign change; indicates a defect."""


class ConfigError(ValueError):
    """Invalid configuration value."""
