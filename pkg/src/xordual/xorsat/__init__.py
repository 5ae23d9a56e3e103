"""3-XORSAT instances: construction, generators, classical analysis and file formats."""

from .analysis import (
    brute_force_classical,
    classical_energy,
    coupling_signs,
    from_assignment,
    gauge_reduce,
    incidence_matrix,
    leaf_removal,
)
from .generators import (
    generate,
    generate_closure,
    generate_tree,
    make_couplings,
    make_instance,
    relabel,
    with_couplings,
)
from .io import format_instance, parse_instance, read_instance, write_instance
from .models import (
    ClassicalGroundState,
    Edge,
    Family,
    GaugeResult,
    Instance,
    LeafRemovalReport,
    LeafRemovalStep,
)

__all__ = [
    "ClassicalGroundState",
    "Edge",
    "Family",
    "GaugeResult",
    "Instance",
    "LeafRemovalReport",
    "LeafRemovalStep",
    "brute_force_classical",
    "classical_energy",
    "coupling_signs",
    "format_instance",
    "from_assignment",
    "gauge_reduce",
    "generate",
    "generate_closure",
    "generate_tree",
    "incidence_matrix",
    "leaf_removal",
    "make_couplings",
    "make_instance",
    "parse_instance",
    "read_instance",
    "relabel",
    "with_couplings",
    "write_instance",
]
