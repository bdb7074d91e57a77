"""
Exception hierarchy for the sum-of-squared-degrees toolkit.

Library code raises these; the command-line front end maps them to exit codes.
"""


class ExtremalError(ValueError):
    """Base class for every error raised by this package."""


class EdgeCountError(ExtremalError):
    """Vertex or edge count outside the admissible range."""


class NegativeRadicandError(ExtremalError):
    """Square root requested of a negative integer."""


class IncomparableSurdError(ExtremalError):
    """Operands that cannot be ordered exactly."""


class UndefinedBoundError(ExtremalError):
    """Bound requested outside its domain (de Caen's bound needs n >= 2)."""


class RatioUndefinedError(ExtremalError):
    """Ratio against f(n,m) requested while f(n,m) = 0."""


class ConstructionError(ExtremalError):
    """Extremal construction does not fit on the requested vertex count."""


class OracleCapExceededError(ExtremalError):
    """Exhaustive enumeration requested above the configured vertex cap."""


class ConfigError(ExtremalError):
    """Invalid sweep or command configuration."""


class EdgeListFormatError(ExtremalError):
    """Edge-list text that does not follow the "n m" / "u v" format."""
