"""Exception hierarchy shared by all modules."""


class PolaritonError(Exception):
    """Base class for errors raised by this package."""


class ParameterError(PolaritonError, ValueError):
    """Physically invalid or inconsistent input parameters."""


class InstabilityError(PolaritonError):
    """Parameter set gives a non-positive lower polariton frequency squared."""


class ConvergenceError(PolaritonError, RuntimeError):
    """An iterative numerical routine hit its iteration cap."""


class ConfigurationError(PolaritonError, ValueError):
    """Numerical configuration outside the supported range (e.g. basis too large)."""


class InconsistentMeasurementError(ParameterError):
    """Measured polariton doublet admits no real coupling strength."""

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class CSVParseError(PolaritonError, ValueError):
    """Malformed CSV input; carries the 1-based line number."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
