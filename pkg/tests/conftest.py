"""Shared fixtures: grids, configurations, random states and preset paths."""

from pathlib import Path
from typing import Callable

import numpy as np
import pytest

from satnls.config import PRESETS_DIR
from satnls.logger import SimulationLogger
from satnls.model.state import GridSpec, RunConfig, SaturationParam, SolitonSpec, WaveState

# Repository root (satnls/)
ROOT_DIR = Path(__file__).resolve().parent.parent


@pytest.fixture
def presets_dir() -> Path:
    """Directory holding the shipped *.cfg presets."""
    return PRESETS_DIR


@pytest.fixture
def fd_grid() -> GridSpec:
    """Finite-difference grid: L=30, N=512."""
    return GridSpec(30.0, 512)


@pytest.fixture
def ss_grid() -> GridSpec:
    """Split-step grid: L=64, N=512."""
    return GridSpec(64.0, 512)


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property tests are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def logger() -> SimulationLogger:
    """Fresh logger (own warning list)."""
    return SimulationLogger()


def random_state(rng: np.random.Generator, grid: GridSpec, time: float = 0.0) -> WaveState:
    """Complex Gaussian samples on a grid."""
    amplitudes = rng.normal(size=grid.points) + 1j * rng.normal(size=grid.points)
    return WaveState(grid=grid, amplitudes=amplitudes, time=time)


@pytest.fixture
def make_config() -> Callable[..., RunConfig]:
    """Factory for RunConfig with short keyword names."""

    def _make(scheme: str = 'splitstep', S: float = -0.1, tau: float = 0.01, T: float = 1.0,
              L: float = 64.0, N: int = 512, solitons=((8.0, 20.0), (18.0, -20.0)), **kwargs) -> RunConfig:
        return RunConfig(
            scheme=scheme,
            saturation=SaturationParam(S),
            tau=tau,
            total_time=T,
            grid=GridSpec(L, N),
            solitons=tuple(SolitonSpec(offset, velocity) for offset, velocity in solitons),
            **kwargs,
        )

    return _make


@pytest.fixture
def make_random_state(rng: np.random.Generator) -> Callable[..., WaveState]:
    """random_state bound to the seeded generator."""

    def _make(grid: GridSpec, time: float = 0.0) -> WaveState:
        return random_state(rng, grid, time)

    return _make
