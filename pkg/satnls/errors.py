"""
Error types

Exceptions raised by grid/config validation, initial data, the nonlinear steps and the file readers
"""
from typing import Optional


class SatNLSError(Exception):
    """Base class for all satnls errors"""


class ConfigurationError(SatNLSError, ValueError):
    """Invalid run parameter; `key` names the offending configuration key"""

    def __init__(self, key: str, message: str):
        self.key = key
        super().__init__(f"{key}: {message}")


class SingularProfileError(SatNLSError, ArithmeticError):
    """Soliton profile denominator 1 + B*exp(2*sqrt(2)*x) vanishes at x"""

    def __init__(self, x: float):
        self.x = x
        super().__init__(f"Soliton profile is singular at x_rel={x!r}")


class SingularNonlinearityError(SatNLSError, ArithmeticError):
    """Saturation denominator 1 + S*|psi_j|^2 vanishes at sample j"""

    def __init__(self, index: int, intensity: float):
        self.index = index
        self.intensity = intensity
        super().__init__(
            f"Saturable nonlinearity is singular at j={index} (|psi|^2={intensity!r})"
        )


class GridMismatchError(SatNLSError, ValueError):
    """Two states or a state and a propagator live on different grids"""


class SnapshotParseError(SatNLSError, ValueError):
    """Malformed snapshot/evolution/diagnostics file"""

    def __init__(self, line_number: Optional[int], message: str):
        self.line_number = line_number
        if line_number is None:
            super().__init__(message)
        else:
            super().__init__(f"line {line_number}: {message}")


class OutputFormatError(SatNLSError, ValueError):
    """Data cannot be written in the requested format (e.g. ragged evolution rows)"""
