"""
Split-step Fourier solver

Nonlinear part i*psi_t + |psi|^2 psi/(1 + S|psi|^2) = 0 solved exactly as a pointwise phase rotation,
linear part i*psi_t + psi_xx/2 = 0 solved exactly per Fourier mode.
"""
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np
from scipy import fft

from ..config import SimulationSettings, default_settings
from ..errors import GridMismatchError, SingularNonlinearityError
from ..geom.grid import mode_indices
from ..logger import SimulationLogger, get_logger
from ..model.state import GridSpec, RunConfig, SaturationParam, WaveState
from .monitor import EvolutionResult, RunMonitor, SnapshotSink


@dataclass(frozen=True, eq=False)
class ModePhases:
    """Per-mode linear propagator exp(-i*2*(pi*n/L)^2*tau), native transform order"""
    grid: GridSpec
    tau: float
    factors: np.ndarray


def make_mode_phases(grid: GridSpec, tau: float) -> ModePhases:
    """Precompute the linear propagator for (grid, tau)"""
    n = mode_indices(grid).astype(np.float64)
    exponent = -2.0 * (np.pi * n / grid.length) ** 2 * tau
    factors = np.exp(1j * exponent)
    factors.setflags(write=False)
    return ModePhases(grid=grid, tau=float(tau), factors=factors)


def saturation_denominator(
    amplitudes: np.ndarray,
    saturation: SaturationParam,
    settings: Optional[SimulationSettings] = None,
):
    """
    Return (|psi|^2, 1 + S|psi|^2), raising if the denominator vanishes

    Raises:
        SingularNonlinearityError: At the first sample whose denominator is zero (within tolerance)
    """
    settings = settings or default_settings
    intensity = np.abs(amplitudes) ** 2
    denominator = 1.0 + saturation.value * intensity
    scale = 1.0 + abs(saturation.value) * intensity
    singular = np.abs(denominator) <= settings.singularity_tolerance * scale
    if np.any(singular):
        index = int(np.flatnonzero(singular)[0])
        raise SingularNonlinearityError(index, float(intensity[index]))
    return intensity, denominator


def nonlinear_step(
    state: WaveState,
    tau: float,
    saturation: SaturationParam,
    settings: Optional[SimulationSettings] = None,
) -> WaveState:
    """
    psi_j -> psi_j * exp(i*tau*|psi_j|^2 / (1 + S|psi_j|^2)); time unchanged

    Magnitudes are preserved sample by sample.
    """
    intensity, denominator = saturation_denominator(state.amplitudes, saturation, settings)
    rotated = state.amplitudes * np.exp(1j * tau * intensity / denominator)
    return state.evolve(rotated)


def linear_step(state: WaveState, phases: ModePhases) -> WaveState:
    """
    Exact linear evolution over phases.tau: FFT, multiply by the mode phases, inverse FFT

    Time is unchanged; split_step does the bookkeeping.
    """
    if phases.grid != state.grid:
        raise GridMismatchError(f"mode phases built for {phases.grid}, state is on {state.grid}")
    spectrum = fft.fft(state.amplitudes)
    return state.evolve(fft.ifft(spectrum * phases.factors))


def split_step(
    state: WaveState,
    tau: float,
    saturation: SaturationParam,
    phases: ModePhases,
    splitting: str = 'lie',
    settings: Optional[SimulationSettings] = None,
) -> WaveState:
    """
    Advance one step of length tau

    'lie': nonlinear(tau) then linear(tau).
    'strang': nonlinear(tau/2), linear(tau), nonlinear(tau/2).
    """
    if splitting == 'lie':
        advanced = linear_step(nonlinear_step(state, tau, saturation, settings), phases)
    elif splitting == 'strang':
        half = 0.5 * tau
        advanced = nonlinear_step(state, half, saturation, settings)
        advanced = linear_step(advanced, phases)
        advanced = nonlinear_step(advanced, half, saturation, settings)
    else:
        raise ValueError(f"Unknown splitting: {splitting!r}")
    return WaveState(grid=state.grid, amplitudes=advanced.amplitudes, time=state.time + tau)


def evolve_splitstep(
    initial: WaveState,
    config: RunConfig,
    sink: Optional[SnapshotSink] = None,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
    stepper: Optional[Callable[[WaveState], WaveState]] = None,
) -> EvolutionResult:
    """
    Run floor(T/tau) split steps from the initial state

    Args:
        initial: State at t = 0
        config: Run configuration (scheme 'splitstep')
        sink: Receives (step_index, state) for emitted snapshots
        logger: SimulationLogger instance (uses get_logger() if None)
        settings: SimulationSettings instance (uses default_settings if None)
        stepper: Replaces the configured split step (e.g. linear_step alone for free dispersion)

    Returns:
        EvolutionResult; .divergence is set if the run was aborted
    """
    logger = logger or get_logger()
    settings = settings or default_settings
    if stepper is None:
        phases = make_mode_phases(config.grid, config.tau)

        def stepper(current: WaveState) -> WaveState:
            return split_step(current, config.tau, config.saturation, phases, config.splitting, settings)

    monitor = RunMonitor(config, sink=sink, logger=logger, settings=settings, label='splitstep')
    state = initial
    monitor.start(state)
    for step_index in range(1, config.step_count + 1):
        try:
            state = stepper(state)
        except SingularNonlinearityError as e:
            monitor.abort(step_index, state.time + config.tau, str(e))
            break
        if not monitor.observe(step_index, state):
            break
    return monitor.finish()
