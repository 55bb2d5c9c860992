"""
Run dispatch

Builds the initial state and hands a RunConfig to the evolution loop of its scheme
"""
from typing import Optional

from ..config import SimulationSettings, default_settings
from ..errors import GridMismatchError
from ..initial import initial_state
from ..logger import SimulationLogger, get_logger
from ..model.state import RunConfig, WaveState
from .finite_difference import evolve_fd
from .monitor import EvolutionResult, SnapshotSink
from .spectral import evolve_splitstep


def run_simulation(
    config: RunConfig,
    sink: Optional[SnapshotSink] = None,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
    initial: Optional[WaveState] = None,
) -> EvolutionResult:
    """
    Evolve config from its soliton initial state (or from `initial`)

    Args:
        config: Run configuration
        sink: Snapshot consumer, see RunMonitor
        logger: SimulationLogger instance (uses get_logger() if None)
        settings: SimulationSettings instance (uses default_settings if None)
        initial: Start from this state instead of the configured solitons

    Returns:
        EvolutionResult
    """
    logger = logger or get_logger()
    settings = settings or default_settings
    if initial is None:
        initial = initial_state(config, logger=logger)
    elif initial.grid != config.grid:
        raise GridMismatchError(f"initial state on {initial.grid}, config grid is {config.grid}")

    if config.scheme == 'splitstep':
        result = evolve_splitstep(initial, config, sink=sink, logger=logger, settings=settings)
    else:
        result = evolve_fd(initial, config, sink=sink, logger=logger, settings=settings)

    if result.diverged:
        logger.info(f"{config.scheme}: diverged after {result.steps_taken}/{config.step_count} steps")
    else:
        logger.info(
            f"{config.scheme}: {result.steps_taken} steps to t={result.final.time:.6g}, "
            f"norm {result.records[0].norm:.9g} -> {result.records[-1].norm:.9g}"
        )
    return result
