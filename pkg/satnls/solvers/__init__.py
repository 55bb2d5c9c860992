"""Time-stepping solvers"""
from .monitor import DivergenceReport, EvolutionResult, RunMonitor, SnapshotSink
from .spectral import (
    ModePhases,
    make_mode_phases,
    nonlinear_step,
    linear_step,
    split_step,
    evolve_splitstep,
)
from .finite_difference import (
    LeapfrogState,
    discrete_laplacian,
    saturated_coefficient,
    forward_step,
    central_step,
    evolve_fd,
)
from .runner import run_simulation

__all__ = [
    'DivergenceReport',
    'EvolutionResult',
    'RunMonitor',
    'SnapshotSink',
    'ModePhases',
    'make_mode_phases',
    'nonlinear_step',
    'linear_step',
    'split_step',
    'evolve_splitstep',
    'LeapfrogState',
    'discrete_laplacian',
    'saturated_coefficient',
    'forward_step',
    'central_step',
    'evolve_fd',
    'run_simulation',
]
