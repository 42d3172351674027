"""Exception types shared across the package."""


class BesselSumError(Exception):
    """Base class for all package errors."""


class DomainError(BesselSumError, ValueError):
    """Argument outside the supported domain (poles, negative arguments, ...)."""


class PoleError(DomainError):
    """Evaluation requested exactly at a pole."""


class OutOfRegimeError(BesselSumError, ValueError):
    """Asymptotic formula invoked outside its validity band."""


class OracleError(BesselSumError, RuntimeError):
    """A reference quadrature/summation failed to converge to its contract."""


class ToleranceError(BesselSumError, RuntimeError):
    """Requested tolerance unreachable; carries the best-effort result."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class ScaledResultError(BesselSumError, OverflowError):
    """Result overflows binary64; carries (mantissa, log_scale) diagnostics."""

    def __init__(self, message, mantissa=None, log_scale=None):
        super().__init__(message)
        self.mantissa = mantissa
        self.log_scale = log_scale


class UnsupportedDepthError(BesselSumError, ValueError):
    """Expansion coefficient requested beyond the built-in closed forms."""


class InsufficientDataError(BesselSumError, ValueError):
    """Not enough usable rows for a fit."""


class BranchWarning(UserWarning):
    """Parameters are close to a removable singularity; a limit branch was used."""
