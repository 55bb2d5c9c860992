"""
Finite-difference solver

One forward (Euler) bootstrap step, then explicit leapfrog (central difference) steps
on the periodic three-point stencil.
"""
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..config import SimulationSettings, default_settings
from ..errors import GridMismatchError, SingularNonlinearityError
from ..logger import SimulationLogger, get_logger
from ..model.state import RunConfig, SaturationParam, WaveState
from .monitor import EvolutionResult, RunMonitor, SnapshotSink
from .spectral import saturation_denominator

# |(t_k - t_{k-1}) - tau| allowed in a LeapfrogState, relative to tau
_LEVEL_GAP_TOLERANCE = 1e-9


@dataclass(frozen=True)
class LeapfrogState:
    """The two most recent time levels (k-1, k)"""
    previous: WaveState
    current: WaveState

    def __post_init__(self):
        if self.previous.grid != self.current.grid:
            raise GridMismatchError(
                f"leapfrog levels on different grids: {self.previous.grid} vs {self.current.grid}"
            )

    @property
    def grid(self):
        return self.current.grid

    def check_spacing(self, tau: float):
        """Raise ValueError unless current.time - previous.time == tau (within rounding)"""
        gap = self.current.time - self.previous.time
        if not math.isclose(gap, tau, rel_tol=_LEVEL_GAP_TOLERANCE):
            raise ValueError(f"leapfrog levels are {gap} apart, expected tau={tau}")


def discrete_laplacian(state: WaveState) -> np.ndarray:
    """(psi_{j-1} - 2 psi_j + psi_{j+1}) / h^2 with periodic wraparound"""
    psi = state.amplitudes
    h = state.grid.spacing
    return (np.roll(psi, 1) - 2.0 * psi + np.roll(psi, -1)) / (h * h)


def saturated_coefficient(psi_j: complex, saturation: SaturationParam,
                          settings: Optional[SimulationSettings] = None) -> float:
    """
    A = |psi|^2 / (1 + S|psi|^2) at one sample

    Raises:
        SingularNonlinearityError: If 1 + S|psi|^2 vanishes
    """
    intensity, denominator = saturation_denominator(np.asarray([psi_j]), saturation, settings)
    return float(intensity[0] / denominator[0])


def saturated_coefficients(amplitudes: np.ndarray, saturation: SaturationParam,
                           settings: Optional[SimulationSettings] = None) -> np.ndarray:
    """Vectorized saturated_coefficient over a whole level"""
    intensity, denominator = saturation_denominator(amplitudes, saturation, settings)
    return intensity / denominator


def _rhs(state: WaveState, saturation: SaturationParam, linearized: bool,
         settings: Optional[SimulationSettings]) -> np.ndarray:
    # 0.5*psi_xx + A*psi; A is dropped for the linearized problem
    rhs = 0.5 * discrete_laplacian(state)
    if not linearized:
        rhs = rhs + saturated_coefficients(state.amplitudes, saturation, settings) * state.amplitudes
    return rhs


def forward_step(
    state: WaveState,
    tau: float,
    saturation: SaturationParam,
    linearized: bool = False,
    settings: Optional[SimulationSettings] = None,
) -> WaveState:
    """psi_{k+1} = psi_k + i*tau*(0.5*psi_xx + A*psi_k)"""
    advanced = state.amplitudes + 1j * tau * _rhs(state, saturation, linearized, settings)
    return state.evolve(advanced, dt=tau)


def central_step(
    lf: LeapfrogState,
    tau: float,
    saturation: SaturationParam,
    linearized: bool = False,
    settings: Optional[SimulationSettings] = None,
) -> LeapfrogState:
    """
    psi_{k+1} = psi_{k-1} + 2*i*tau*(0.5*psi_xx(psi_k) + A_k*psi_k)

    A is taken from level k only.
    """
    lf.check_spacing(tau)
    current = lf.current
    advanced = lf.previous.amplitudes + 2j * tau * _rhs(current, saturation, linearized, settings)
    return LeapfrogState(previous=current, current=current.evolve(advanced, dt=tau))


def evolve_fd(
    initial: WaveState,
    config: RunConfig,
    sink: Optional[SnapshotSink] = None,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
    linearized: bool = False,
) -> EvolutionResult:
    """
    One forward step, then floor(T/tau) - 1 central steps

    Args:
        initial: State at t = 0
        config: Run configuration (scheme 'fd')
        sink: Receives (step_index, state) for emitted snapshots
        logger: SimulationLogger instance (uses get_logger() if None)
        settings: SimulationSettings instance (uses default_settings if None)
        linearized: Drop the nonlinear term (stability experiments)

    Returns:
        EvolutionResult with .leapfrog holding the last (k-1, k) pair
    """
    logger = logger or get_logger()
    settings = settings or default_settings
    tau = config.tau
    saturation = config.saturation

    monitor = RunMonitor(config, sink=sink, logger=logger, settings=settings, label='fd')
    monitor.start(initial)

    lf: Optional[LeapfrogState] = None
    step_index = 1
    with np.errstate(over='ignore', invalid='ignore'):
        try:
            bootstrap = forward_step(initial, tau, saturation, linearized, settings)
            if monitor.observe(1, bootstrap):
                lf = LeapfrogState(previous=initial, current=bootstrap)
                for step_index in range(2, config.step_count + 1):
                    candidate = central_step(lf, tau, saturation, linearized, settings)
                    if not monitor.observe(step_index, candidate.current):
                        break
                    lf = candidate
        except SingularNonlinearityError as e:
            # raised while building level step_index
            monitor.abort(step_index, initial.time + step_index * tau, str(e))

    result = monitor.finish()
    result.leapfrog = lf
    return result
