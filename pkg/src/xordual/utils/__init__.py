"""Utility modules."""

from .errors import (
    BadArityError,
    BadSectorError,
    BadSError,
    BudgetExceededError,
    ConfigError,
    DependentRowsError,
    DuplicateEdgeError,
    ForcedRowsNotABasisError,
    InconsistentInputsError,
    InstanceFormatError,
    InvalidGError,
    InvalidInstanceError,
    MalformedModelError,
    NoConvergenceError,
    NoNonlocalTermError,
    NotIndependentError,
    NotInKernelError,
    NotXStringError,
    OutOfRangeError,
    SizeMismatchError,
    TooLargeError,
    XorDualError,
    YProductError,
)
from .logging import log_duration, setup_logging

__all__ = [
    "log_duration",
    "setup_logging",
    "XorDualError",
    "ForcedRowsNotABasisError",
    "DependentRowsError",
    "InconsistentInputsError",
    "BadArityError",
    "OutOfRangeError",
    "DuplicateEdgeError",
    "InvalidInstanceError",
    "InvalidGError",
    "TooLargeError",
    "SizeMismatchError",
    "YProductError",
    "NotXStringError",
    "BadSectorError",
    "NoNonlocalTermError",
    "MalformedModelError",
    "NotInKernelError",
    "NotIndependentError",
    "BadSError",
    "NoConvergenceError",
    "BudgetExceededError",
    "ConfigError",
    "InstanceFormatError",
]
