"""Application settings with environment variable and config file support."""

import logging
import os
from pathlib import Path
from typing import Any, Optional

import yaml
from pydantic import Field, ValidationError
from pydantic_settings import BaseSettings, SettingsConfigDict

from ..utils.errors import ConfigError

logger = logging.getLogger(__name__)


def _available_parallelism() -> int:
    """Return the number of CPUs this process may use."""
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


class Settings(BaseSettings):
    """Run settings loaded from environment variables (prefix ``XORDUAL_``)."""

    model_config = SettingsConfigDict(
        env_prefix="XORDUAL_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Execution
    workers: int = Field(
        default_factory=_available_parallelism,
        ge=1,
        description="Worker processes for grid points, sectors and sweeps",
    )
    seed: int = Field(default=1234, description="Seed for every random start and sample")

    # Logging
    log_level: str = Field(default="INFO", description="Logging level")

    # Eigensolver
    dense_limit: int = Field(
        default=4096, ge=2, description="Largest dimension diagonalized densely"
    )
    lanczos_tol: float = Field(default=1e-10, gt=0, description="Ritz residual tolerance")
    lanczos_max_iter: int = Field(default=300, ge=10, description="Lanczos iteration cap")
    lanczos_memory_mb: int = Field(
        default=1024,
        ge=1,
        description="Memory budget for the Krylov basis before falling back to ARPACK",
    )
    degeneracy_tol: float = Field(
        default=1e-8, gt=0, description="Eigenvalues closer than this form one level"
    )

    # Gap scans
    grid_points: int = Field(default=41, ge=2, description="Default uniform s-grid size")
    refine_tol: float = Field(default=1e-4, gt=0, description="Minimum-gap refinement width")
    max_sites: int = Field(default=22, ge=1, description="Largest site count in sweeps")

    # Oracles and verification
    brute_force_max_spins: int = Field(
        default=26, ge=1, description="Enumeration bound for classical brute force"
    )
    numeric_commutator_max_sites: int = Field(
        default=20, ge=1, description="Largest N for numeric commutator checks"
    )
    spectrum_tol: float = Field(default=1e-8, gt=0, description="Spectrum comparison tolerance")
    commutator_tol: float = Field(default=1e-10, gt=0, description="Commutator residual bound")

    # Optional default output directory
    output_dir: Optional[str] = Field(default=None, description="Directory for emitted files")


def load_settings(
    config_path: str | Path | None = None,
    overrides: dict[str, Any] | None = None,
) -> Settings:
    """Resolve settings with precedence flags > config file > environment > defaults.

    Args:
        config_path: Optional YAML file with top-level setting keys.
        overrides: Values given explicitly on the command line; ``None`` values are ignored.

    Returns:
        The resolved settings.

    Raises:
        ConfigError: If the file cannot be read or a value is invalid.
    """
    file_values: dict[str, Any] = {}
    if config_path is not None:
        path = Path(config_path)
        try:
            loaded = yaml.safe_load(path.read_text(encoding="utf-8"))
        except (OSError, yaml.YAMLError) as e:
            raise ConfigError(f"Cannot read config file {path}: {e}") from e
        if loaded is None:
            loaded = {}
        if not isinstance(loaded, dict):
            raise ConfigError(f"Config file {path} must contain a mapping")
        file_values = {k: v for k, v in loaded.items() if k in Settings.model_fields}
        logger.debug("[Config] Loaded %d keys from %s", len(file_values), path)

    flag_values = {k: v for k, v in (overrides or {}).items() if v is not None}
    try:
        return Settings(**{**file_values, **flag_values})
    except ValidationError as e:
        raise ConfigError(f"Invalid settings: {e}") from e
