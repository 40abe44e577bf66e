"""Exception types shared across the package."""


class CxgaError(Exception):
    """Base class for all package-specific errors."""


class TsplibParseError(CxgaError):
    """Raised when an instance file cannot be parsed; names the offending line."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class InvalidInstanceError(CxgaError):
    """Raised for instances that violate the basic shape requirements."""


class InvalidTourError(CxgaError):
    """Raised when a sequence of city labels is not a permutation of 1..n."""


class ConfigError(CxgaError):
    """Raised for invalid algorithm or experiment configuration."""
