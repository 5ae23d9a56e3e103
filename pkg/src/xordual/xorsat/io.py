"""Instance file formats.

Text form::

    c optional comment lines
    p xor3 N M
    e i j k J        (M lines, J is +1 or -1)

The JSON mirror holds ``{"n_spins": N, "edges": [[i, j, k], ...], "couplings": [...]}``.
"""

import json
import logging
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ValidationError

from ..utils.errors import InstanceFormatError
from .generators import make_instance
from .models import Edge, Instance

logger = logging.getLogger(__name__)

InstanceFormat = Literal["text", "json"]


class InstanceDocument(BaseModel):
    """JSON mirror of an instance."""

    n_spins: int
    edges: list[Edge]
    couplings: list[int]


def format_instance(inst: Instance, fmt: InstanceFormat = "text") -> str:
    if fmt == "json":
        doc = InstanceDocument(
            n_spins=inst.n_spins, edges=list(inst.edges), couplings=list(inst.couplings)
        )
        return doc.model_dump_json(indent=2) + "\n"
    lines = [f"p xor3 {inst.n_spins} {inst.n_edges}"]
    if inst.family is not None:
        lines.insert(0, f"c {inst.describe()}")
    for (i, j, k), coupling in zip(inst.edges, inst.couplings):
        lines.append(f"e {i} {j} {k} {coupling:+d}")
    return "\n".join(lines) + "\n"


def parse_instance(text: str) -> Instance:
    """Parse either format; JSON is recognized by a leading ``{``.

    Raises:
        InstanceFormatError: On malformed content.
    """
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return _parse_json(stripped)
    return _parse_text(text)


def _parse_json(text: str) -> Instance:
    try:
        doc = InstanceDocument.model_validate(json.loads(text))
    except (json.JSONDecodeError, ValidationError) as e:
        raise InstanceFormatError(f"Invalid instance JSON: {e}") from e
    return make_instance(doc.n_spins, doc.edges, doc.couplings)


def _parse_text(text: str) -> Instance:
    header: tuple[int, int] | None = None
    edges: list[tuple[int, ...]] = []
    couplings: list[int] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        try:
            if fields[0] == "p":
                if header is not None or len(fields) != 4 or fields[1] != "xor3":
                    raise InstanceFormatError(f"Bad header {line!r}", line=number)
                header = (int(fields[2]), int(fields[3]))
            elif fields[0] == "e":
                if header is None:
                    raise InstanceFormatError("Edge line before header", line=number)
                if len(fields) != 5:
                    raise InstanceFormatError(f"Bad edge line {line!r}", line=number)
                edges.append(tuple(int(v) for v in fields[1:4]))
                couplings.append(int(fields[4]))
            else:
                raise InstanceFormatError(f"Unknown line {line!r}", line=number)
        except ValueError as e:
            raise InstanceFormatError(f"Non-integer field in {line!r}", line=number) from e

    if header is None:
        raise InstanceFormatError("Missing 'p xor3 N M' header")
    n_spins, n_edges = header
    if len(edges) != n_edges:
        raise InstanceFormatError(f"Header announces {n_edges} edges, found {len(edges)}")
    return make_instance(n_spins, edges, couplings)


def read_instance(path: str | Path) -> Instance:
    inst = parse_instance(Path(path).read_text(encoding="utf-8"))
    logger.debug("[Model] Read %s from %s", inst.describe(), path)
    return inst


def write_instance(inst: Instance, path: str | Path, fmt: InstanceFormat = "text") -> None:
    Path(path).write_text(format_instance(inst, fmt), encoding="utf-8")
