"""
Run output writer

Collects emitted snapshots during an evolution and writes the run directory:
evolution.csv, final_snapshot.csv, diagnostics.csv and manifest
"""
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

import numpy as np

from ..diagnostics import conservation_report
from ..logger import SimulationLogger, get_logger
from ..model.state import RunConfig, WaveState
from ..solvers.monitor import EvolutionResult
from ..stability import StabilityReport
from .manifest_writer import write_manifest
from .snapshot_io import write_diagnostics, write_evolution, write_snapshot

EVOLUTION_FILE = 'evolution.csv'
FINAL_SNAPSHOT_FILE = 'final_snapshot.csv'
DIAGNOSTICS_FILE = 'diagnostics.csv'


@dataclass(frozen=True)
class RunOutputs:
    """Files written for one run"""
    evolution: Path
    final_snapshot: Path
    diagnostics: Path
    manifest: Path


class RunWriter:
    """Snapshot sink + writer of the run directory"""

    def __init__(self, config: RunConfig, output_dir: Optional[Path] = None,
                 logger: Optional[SimulationLogger] = None):
        """
        Args:
            config: Run configuration
            output_dir: Target directory (config.output_dir if None)
            logger: SimulationLogger instance (uses get_logger() if None)
        """
        self.config = config
        self.output_dir = Path(output_dir) if output_dir is not None else config.output_dir
        self.logger = logger or get_logger()
        self.rows: List[np.ndarray] = []

    def __call__(self, step_index: int, state: WaveState):
        self.rows.append(state.magnitudes())

    def finalize(self, result: EvolutionResult, preflight: Optional[StabilityReport] = None) -> RunOutputs:
        """
        Write all run files (partial outputs for a diverged run)

        Args:
            result: Outcome of the evolution
            preflight: FD stability verdict, None for split-step runs
        """
        self.output_dir.mkdir(parents=True, exist_ok=True)
        config = self.config

        evolution = write_evolution(self.rows, self.output_dir / EVOLUTION_FILE, config.grid, config.tau)
        final_snapshot = write_snapshot(result.final, self.output_dir / FINAL_SNAPSHOT_FILE)
        diagnostics = write_diagnostics(result.records, self.output_dir / DIAGNOSTICS_FILE)

        outcome = {
            'status': 'diverged' if result.diverged else 'completed',
            'steps_taken': result.steps_taken,
            'step_count': config.step_count,
            'final_time': repr(result.final.time),
            'evolution_rows': len(self.rows),
        }
        if result.divergence is not None:
            outcome['divergence_step'] = result.divergence.step_index
            outcome['divergence_reason'] = result.divergence.reason
            outcome['last_finite_norm'] = repr(result.divergence.last_finite_norm)

        manifest = write_manifest(
            self.output_dir,
            config,
            preflight=preflight,
            outcome=outcome,
            conservation=conservation_report(result.records),
        )
        self.logger.info(f"Wrote {len(self.rows)} evolution rows and manifest to {self.output_dir}")
        return RunOutputs(
            evolution=evolution,
            final_snapshot=final_snapshot,
            diagnostics=diagnostics,
            manifest=manifest,
        )
