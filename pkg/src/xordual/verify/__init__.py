"""Oracle checks of every step of the duality and the suites that run them."""

from .checks import (
    check_worked_example,
    check_charge_commutation,
    check_classical_degeneracy,
    check_embedding,
    check_relabeling,
    check_sector_decomposition,
    full_spectrum,
    merged_dual_spectrum,
    multiset_residual,
)
from .models import CheckResult, VerificationReport
from .suites import build_tasks, run_suite

__all__ = [
    "CheckResult",
    "VerificationReport",
    "build_tasks",
    "check_worked_example",
    "check_charge_commutation",
    "check_classical_degeneracy",
    "check_embedding",
    "check_relabeling",
    "check_sector_decomposition",
    "full_spectrum",
    "merged_dual_spectrum",
    "multiset_residual",
    "run_suite",
]
