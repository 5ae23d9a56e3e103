"""Custom exception classes for xordual.

Every failure a caller can act on is a subclass of :class:`XorDualError` and
carries a machine-readable ``code`` next to the human-readable message.
"""


class XorDualError(Exception):
    """Base exception for all xordual errors."""

    def __init__(self, message: str, code: str = "XORDUAL_ERROR"):
        self.message = message
        self.code = code
        super().__init__(message)


# GF(2) linear algebra


class ForcedRowsNotABasisError(XorDualError):
    """Raised when forced basis rows are dependent or do not span the row space."""

    def __init__(self, message: str, rows: tuple[int, ...] = ()):
        self.rows = rows
        super().__init__(message, code="FORCED_ROWS_NOT_A_BASIS")


class DependentRowsError(XorDualError):
    """Raised when a matrix expected to have independent rows does not."""

    def __init__(self, message: str):
        super().__init__(message, code="DEPENDENT_ROWS")


class InconsistentInputsError(XorDualError):
    """Raised when derived matrices do not satisfy their defining contract."""

    def __init__(self, message: str):
        super().__init__(message, code="INCONSISTENT_INPUTS")


# XORSAT instances


class BadArityError(XorDualError):
    """Raised when an edge is not a triple of distinct spins."""

    def __init__(self, message: str, edge: tuple[int, ...] = ()):
        self.edge = edge
        super().__init__(message, code="BAD_ARITY")


class OutOfRangeError(XorDualError):
    """Raised when a spin label lies outside [1, N]."""

    def __init__(self, message: str, spin: int):
        self.spin = spin
        super().__init__(message, code="OUT_OF_RANGE")


class DuplicateEdgeError(XorDualError):
    """Raised when the same vertex triple appears twice."""

    def __init__(self, message: str, edge: tuple[int, ...] = ()):
        self.edge = edge
        super().__init__(message, code="DUPLICATE_EDGE")


class InvalidInstanceError(XorDualError):
    """Raised for structurally invalid instances (no edges, bad couplings)."""

    def __init__(self, message: str):
        super().__init__(message, code="INVALID_INSTANCE")


class InvalidGError(XorDualError):
    """Raised when a generator is asked for a generation count below one."""

    def __init__(self, message: str, g: int):
        self.g = g
        super().__init__(message, code="INVALID_G")


class TooLargeError(XorDualError):
    """Raised when an exhaustive computation exceeds its size bound."""

    def __init__(self, message: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(message, code="TOO_LARGE")


# Pauli algebra


class SizeMismatchError(XorDualError):
    """Raised when operands act on different numbers of sites."""

    def __init__(self, message: str):
        super().__init__(message, code="SIZE_MISMATCH")


class YProductError(XorDualError):
    """Raised when a Pauli string would carry a Y factor."""

    def __init__(self, message: str):
        super().__init__(message, code="Y_PRODUCT")


class NotXStringError(XorDualError):
    """Raised when a charge is expected to be a pure X-string."""

    def __init__(self, message: str):
        super().__init__(message, code="NOT_X_STRING")


# Duality


class BadSectorError(XorDualError):
    """Raised when a sector specification does not match the charge count."""

    def __init__(self, message: str):
        super().__init__(message, code="BAD_SECTOR")


class NoNonlocalTermError(XorDualError):
    """Raised when a parity embedding is requested without a product-X term."""

    def __init__(self, message: str):
        super().__init__(message, code="NO_NONLOCAL_TERM")


class MalformedModelError(XorDualError):
    """Raised when a term sum does not have the shape an operation expects."""

    def __init__(self, message: str):
        super().__init__(message, code="MALFORMED_MODEL")


class NotInKernelError(XorDualError):
    """Raised when a proposed charge does not commute with every edge."""

    def __init__(self, message: str):
        super().__init__(message, code="NOT_IN_KERNEL")


class NotIndependentError(XorDualError):
    """Raised when proposed charges are dependent or do not span the kernel."""

    def __init__(self, message: str):
        super().__init__(message, code="NOT_INDEPENDENT")


# Spectrum


class BadSError(XorDualError):
    """Raised when the annealing parameter lies outside [0, 1]."""

    def __init__(self, message: str, s: float):
        self.s = s
        super().__init__(message, code="BAD_S")


class NoConvergenceError(XorDualError):
    """Raised when an iterative eigensolver hits its iteration cap."""

    def __init__(self, message: str, iterations: int):
        self.iterations = iterations
        super().__init__(message, code="NO_CONVERGENCE")


class BudgetExceededError(XorDualError):
    """Raised when a sweep would diagonalize more sites than allowed."""

    def __init__(self, message: str, sites: int, limit: int):
        self.sites = sites
        self.limit = limit
        super().__init__(message, code="BUDGET_EXCEEDED")


# Configuration and I/O


class ConfigError(XorDualError):
    """Raised when configuration or command-line values are invalid."""

    def __init__(self, message: str):
        super().__init__(message, code="CONFIG_ERROR")


class InstanceFormatError(XorDualError):
    """Raised when an instance or matrix file cannot be parsed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(message, code="INSTANCE_FORMAT_ERROR")
