"""
Shared domain types

Grid, wave state, soliton and saturation parameters, run configuration and per-step diagnostics
"""
import math
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Tuple

import numpy as np

from ..config import (
    MIN_GRID_POINTS,
    NORM_INTEGRANDS,
    SCHEMES,
    SPLITTINGS,
    STEP_COUNT_SLACK,
)
from ..errors import ConfigurationError, GridMismatchError


def is_power_of_two(value: int) -> bool:
    """True for 1, 2, 4, 8, ..."""
    return value > 0 and (value & (value - 1)) == 0


@dataclass(frozen=True)
class GridSpec:
    """Periodic 1-D grid x_j = j*h on [0, L)"""
    length: float  # L
    points: int  # N

    def __post_init__(self):
        if isinstance(self.points, bool) or int(self.points) != self.points:
            raise ConfigurationError('N', f"mesh count must be an integer, got {self.points!r}")
        object.__setattr__(self, 'points', int(self.points))
        object.__setattr__(self, 'length', float(self.length))
        if not math.isfinite(self.length) or self.length <= 0:
            raise ConfigurationError('L', f"domain length must be positive, got {self.length!r}")
        if self.points < MIN_GRID_POINTS:
            raise ConfigurationError('N', f"mesh count must be >= {MIN_GRID_POINTS}, got {self.points}")
        if not is_power_of_two(self.points):
            raise ConfigurationError('N', f"mesh count must be a power of two, got {self.points}")

    @property
    def spacing(self) -> float:
        """h = L / N"""
        return self.length / self.points

    def coordinates(self) -> np.ndarray:
        """Sample positions x_j = j*h"""
        return np.arange(self.points) * self.spacing


@dataclass(frozen=True, eq=False)
class WaveState:
    """Complex field samples psi(x_j, t)"""
    grid: GridSpec
    amplitudes: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        amplitudes = np.array(self.amplitudes, dtype=np.complex128)
        if amplitudes.ndim != 1 or amplitudes.shape[0] != self.grid.points:
            raise GridMismatchError(
                f"expected {self.grid.points} amplitudes, got shape {amplitudes.shape}"
            )
        amplitudes.setflags(write=False)
        object.__setattr__(self, 'amplitudes', amplitudes)
        object.__setattr__(self, 'time', float(self.time))
        if self.time < 0:
            raise ValueError(f"time must be nonnegative, got {self.time}")

    @property
    def is_finite(self) -> bool:
        """False once any sample is inf/nan (blow-up)"""
        return bool(np.all(np.isfinite(self.amplitudes)))

    def magnitudes(self) -> np.ndarray:
        """|psi_j|"""
        return np.abs(self.amplitudes)

    def evolve(self, amplitudes: np.ndarray, dt: float = 0.0) -> 'WaveState':
        """New state on the same grid with time advanced by dt"""
        return WaveState(grid=self.grid, amplitudes=amplitudes, time=self.time + dt)

    def require_same_grid(self, other: 'WaveState'):
        if self.grid != other.grid:
            raise GridMismatchError(f"grid mismatch: {self.grid} vs {other.grid}")


@dataclass(frozen=True)
class SolitonSpec:
    """Center offset and phase-gradient velocity of one soliton"""
    offset: float
    velocity: float = 0.0


@dataclass(frozen=True)
class SaturationParam:
    """Saturation strength S"""
    value: float

    @property
    def coefficient_b(self) -> float:
        """B = 3/2 - 2S from the soliton profile"""
        return 1.5 - 2.0 * self.value

    @property
    def profile_is_regular(self) -> bool:
        """B > 0: the soliton profile has no pole"""
        return self.coefficient_b > 0


@dataclass(frozen=True)
class RunConfig:
    """One simulation: scheme, physics, discretization and output location"""
    scheme: str  # 'splitstep' or 'fd'
    saturation: SaturationParam
    tau: float
    total_time: float
    grid: GridSpec
    solitons: Tuple[SolitonSpec, ...]
    snapshot_stride: int = 1
    output_dir: Path = Path('output')
    splitting: str = 'lie'
    norm_integrand: str = 'abs2'

    def __post_init__(self):
        object.__setattr__(self, 'solitons', tuple(self.solitons))
        object.__setattr__(self, 'output_dir', Path(self.output_dir))
        if self.scheme not in SCHEMES:
            raise ConfigurationError('scheme', f"expected one of {SCHEMES}, got {self.scheme!r}")
        if self.splitting not in SPLITTINGS:
            raise ConfigurationError('splitting', f"expected one of {SPLITTINGS}, got {self.splitting!r}")
        if self.norm_integrand not in NORM_INTEGRANDS:
            raise ConfigurationError(
                'norm_integrand', f"expected one of {NORM_INTEGRANDS}, got {self.norm_integrand!r}"
            )
        if not math.isfinite(self.saturation.value):
            raise ConfigurationError('S', f"must be finite, got {self.saturation.value!r}")
        if not math.isfinite(self.tau) or self.tau <= 0:
            raise ConfigurationError('tau', f"must be positive, got {self.tau!r}")
        if not math.isfinite(self.total_time) or self.total_time <= 0:
            raise ConfigurationError('T', f"must be positive, got {self.total_time!r}")
        if self.step_count < 1:
            raise ConfigurationError('T', f"floor(T/tau) must be >= 1 (T={self.total_time}, tau={self.tau})")
        if not 1 <= len(self.solitons) <= 2:
            raise ConfigurationError('solitons', f"expected 1 or 2 solitons, got {len(self.solitons)}")
        for spec in self.solitons:
            if not (0.0 <= spec.offset < self.grid.length):
                raise ConfigurationError(
                    'solitons', f"offset {spec.offset} outside [0, {self.grid.length})"
                )
        if isinstance(self.snapshot_stride, bool) or int(self.snapshot_stride) != self.snapshot_stride \
                or self.snapshot_stride < 1:
            raise ConfigurationError('snapshot_stride', f"must be a positive integer, got {self.snapshot_stride!r}")

    @property
    def step_count(self) -> int:
        """floor(T / tau)"""
        return int(math.floor(self.total_time / self.tau + STEP_COUNT_SLACK))

    def with_changes(self, **changes) -> 'RunConfig':
        """Copy with fields replaced (re-validated)"""
        return replace(self, **changes)


@dataclass(frozen=True)
class DiagnosticsRecord:
    """Per-step conserved norm and peak location"""
    step_index: int
    time: float
    norm: float
    peak_amplitude: float
    peak_index: int

    @property
    def is_diverged(self) -> bool:
        return not math.isfinite(self.norm)
