"""
Run monitor

Shared by both evolution loops: snapshot emission, per-step diagnostics, divergence detection
"""
import math
from dataclasses import dataclass, field
from typing import Callable, List, Optional

import numpy as np

from ..config import SimulationSettings, default_settings
from ..diagnostics import diagnostics_record
from ..logger import SimulationLogger, get_logger
from ..model.state import DiagnosticsRecord, RunConfig, WaveState

# Receives (step_index, state) for every emitted snapshot
SnapshotSink = Callable[[int, WaveState], None]


@dataclass(frozen=True)
class DivergenceReport:
    """Why and where a run was aborted"""
    step_index: int
    time: float
    last_finite_norm: float
    reason: str


@dataclass
class EvolutionResult:
    """Outcome of one evolution"""
    final: WaveState  # last state that passed the divergence checks
    records: List[DiagnosticsRecord] = field(default_factory=list)
    steps_taken: int = 0
    divergence: Optional[DivergenceReport] = None
    leapfrog: Optional[object] = None  # LeapfrogState for fd runs

    @property
    def diverged(self) -> bool:
        return self.divergence is not None


class RunMonitor:
    """Observes successive states of one run"""

    def __init__(
        self,
        config: RunConfig,
        sink: Optional[SnapshotSink] = None,
        logger: Optional[SimulationLogger] = None,
        settings: Optional[SimulationSettings] = None,
        label: Optional[str] = None,
    ):
        self.config = config
        self.sink = sink
        self.logger = logger or get_logger()
        self.settings = settings or default_settings
        self.label = label or config.scheme
        self.records: List[DiagnosticsRecord] = []
        self.initial_norm = 0.0
        self.last_state: Optional[WaveState] = None
        self.divergence: Optional[DivergenceReport] = None
        self.steps_taken = 0

    def _emit(self, step_index: int, state: WaveState):
        if self.sink is None:
            return
        if step_index < self.config.step_count and step_index % self.config.snapshot_stride == 0:
            self.sink(step_index, state)

    def start(self, initial: WaveState):
        """Register the t = 0 state (step 0)"""
        record = diagnostics_record(0, initial, self.config.norm_integrand)
        self.records.append(record)
        self.initial_norm = record.norm
        self.last_state = initial
        self._emit(0, initial)
        self.logger.debug(
            f"[{self.label}] start: {self.config.step_count} steps, tau={self.config.tau}, "
            f"N={self.config.grid.points}, L={self.config.grid.length}, norm={record.norm:.12g}"
        )

    def _divergence_reason(self, state: WaveState, norm: float) -> Optional[str]:
        if not state.is_finite or not math.isfinite(norm):
            return 'non-finite amplitude'
        limit = self.settings.divergence_factor * self.initial_norm
        if self.initial_norm > 0 and norm > limit:
            return f"norm {norm:.6g} exceeds {self.settings.divergence_factor:g}x initial norm {self.initial_norm:.6g}"
        return None

    def observe(self, step_index: int, state: WaveState) -> bool:
        """
        Check and record the state after step_index steps

        Returns:
            False when the run has diverged and must stop
        """
        with np.errstate(over='ignore', invalid='ignore'):
            record = diagnostics_record(step_index, state, self.config.norm_integrand)
        reason = self._divergence_reason(state, record.norm)
        if reason is not None:
            self.abort(step_index, state.time, reason)
            return False

        self.records.append(record)
        self.last_state = state
        self.steps_taken = step_index
        self._emit(step_index, state)
        every = self.settings.progress_every
        if every and step_index % every == 0:
            self.logger.debug(f"[{self.label}] step {step_index}/{self.config.step_count} norm={record.norm:.12g}")
        return True

    def abort(self, step_index: int, time: float, reason: str):
        """Stop the run at step_index; the last observed state stays the final one"""
        last_norm = self.records[-1].norm if self.records else float('nan')
        self.divergence = DivergenceReport(
            step_index=step_index,
            time=time,
            last_finite_norm=last_norm,
            reason=reason,
        )
        self.logger.warn_divergence(step_index, time, last_norm, reason, source=self.label)

    def finish(self) -> EvolutionResult:
        """Bundle what was observed"""
        if self.divergence is None:
            self.logger.debug(f"[{self.label}] completed {self.steps_taken} steps")
        return EvolutionResult(
            final=self.last_state,
            records=list(self.records),
            steps_taken=self.steps_taken,
            divergence=self.divergence,
        )
