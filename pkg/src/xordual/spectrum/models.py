"""Result types of spectrum computations."""

import math
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field

from ..config.settings import Settings


class SolverOptions(BaseModel):
    """Eigensolver knobs; built from :class:`Settings` by the CLI."""

    model_config = ConfigDict(frozen=True)

    tol: float = Field(default=1e-10, gt=0)
    max_iter: int = Field(default=300, ge=10)
    dense_limit: int = Field(default=4096, ge=2)
    degeneracy_tol: float = Field(default=1e-8, gt=0)
    memory_mb: int = Field(default=1024, ge=1)
    seed: int = 1234

    @classmethod
    def from_settings(cls, settings: Settings) -> "SolverOptions":
        return cls(
            tol=settings.lanczos_tol,
            max_iter=settings.lanczos_max_iter,
            dense_limit=settings.dense_limit,
            degeneracy_tol=settings.degeneracy_tol,
            memory_mb=settings.lanczos_memory_mb,
            seed=settings.seed,
        )


class Level(BaseModel):
    """An energy level and how many eigenvalues fall within the degeneracy tolerance."""

    model_config = ConfigDict(frozen=True)

    energy: float
    multiplicity: int


class GapPoint(BaseModel):
    """Lowest eigenvalues and gaps at one value of s."""

    model_config = ConfigDict(frozen=True)

    s: float
    eigenvalues: tuple[float, ...]
    gap: float
    gap_degenaware: float


class GapCurve(BaseModel):
    """Gap data over an ascending s-grid."""

    model_config = ConfigDict(frozen=True)

    label: str = ""
    k: int
    points: tuple[GapPoint, ...] = ()

    def __len__(self) -> int:
        return len(self.points)

    @property
    def s_values(self) -> list[float]:
        return [p.s for p in self.points]

    @property
    def gaps(self) -> list[float]:
        return [p.gap_degenaware for p in self.points]

    def argmin(self) -> int:
        gaps = self.gaps
        return min(range(len(gaps)), key=gaps.__getitem__)


class MinGapResult(BaseModel):
    """Refined location and value of the minimum gap."""

    model_config = ConfigDict(frozen=True)

    s_star: float
    min_gap: float
    grid_s: float
    grid_gap: float
    refine_tol: float
    solver_tol: float
    evaluations: int


class ScalingRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    family: str
    g: int
    n_spins: int
    n_edges: int
    r: int
    q: int
    sector: tuple[int, ...] = ()
    sites: int
    s_star: float
    min_gap: float
    solver_tol: float


class ScalingTable(BaseModel):
    """Minimum gaps of one family over a range of generation counts."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[ScalingRow, ...] = ()

    def __len__(self) -> int:
        return len(self.rows)

    def log_log_slope(self) -> Optional[float]:
        """Slope of log(min gap) against log N between the last two sizes, if there are two."""
        if len(self.rows) < 2:
            return None
        a, b = self.rows[-2], self.rows[-1]
        return (math.log(b.min_gap) - math.log(a.min_gap)) / (
            math.log(b.n_spins) - math.log(a.n_spins)
        )
