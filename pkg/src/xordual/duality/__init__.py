"""Edge/spin duality, charge sectors and the parity embedding."""

from .embedding import embed_nonlocal
from .models import DualModel, EmbeddedModel, SectorSpec, StructureReport, XTerm, ZTerm
from .oracle import sector_block_oracle
from .transform import (
    boundary_pair_charges,
    dualize,
    dump_header,
    parse_sector,
    restrict,
    sector_from_state,
    sector_transform,
    structure_report,
)

__all__ = [
    "DualModel",
    "EmbeddedModel",
    "SectorSpec",
    "StructureReport",
    "XTerm",
    "ZTerm",
    "boundary_pair_charges",
    "dualize",
    "dump_header",
    "embed_nonlocal",
    "parse_sector",
    "restrict",
    "sector_block_oracle",
    "sector_from_state",
    "sector_transform",
    "structure_report",
]
