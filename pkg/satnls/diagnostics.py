"""
Diagnostics module

Conserved norm N = integral |psi|^2 dx (composite trapezoidal rule), state distances,
peak tracking and run-level conservation summaries
"""
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.integrate import trapezoid

from .config import SimulationSettings, default_settings
from .model.state import DiagnosticsRecord, GridSpec, WaveState


def _integrand(state: WaveState, integrand: str) -> np.ndarray:
    magnitudes = np.abs(state.amplitudes)
    if integrand == 'abs2':
        return magnitudes * magnitudes
    if integrand == 'abs':
        # |psi| instead of |psi|^2; kept for comparison with older drift figures
        return magnitudes
    raise ValueError(f"Unknown norm integrand: {integrand!r}")


def trapezoid_norm(state: WaveState, integrand: str = 'abs2') -> float:
    """
    Composite trapezoidal quadrature of |psi|^2 over the periodic grid

    The first sample is repeated at x = L, so the result equals h * sum |psi_j|^2.
    """
    values = _integrand(state, integrand)
    closed = np.append(values, values[0])
    return float(trapezoid(closed, dx=state.grid.spacing))


def conservation_drift(reference: WaveState, evolved: WaveState, integrand: str = 'abs2') -> float:
    """|N(reference) - N(evolved)|"""
    reference.require_same_grid(evolved)
    return abs(trapezoid_norm(reference, integrand) - trapezoid_norm(evolved, integrand))


@dataclass(frozen=True)
class StateDistance:
    """Discrete L2 (h-weighted) and max norms of a - b"""
    l2: float
    linf: float


def state_distance(a: WaveState, b: WaveState) -> StateDistance:
    """
    Distance between two states on the same grid

    Raises:
        GridMismatchError: If the grids differ
    """
    a.require_same_grid(b)
    difference = np.abs(a.amplitudes - b.amplitudes)
    l2 = float(np.sqrt(a.grid.spacing * np.sum(difference * difference)))
    linf = float(np.max(difference)) if difference.size else 0.0
    return StateDistance(l2=l2, linf=linf)


def relative_distance(state: WaveState, reference: WaveState) -> float:
    """||state - reference||_2 / ||reference||_2"""
    scale = np.sqrt(trapezoid_norm(reference))
    distance = state_distance(state, reference).l2
    return distance / scale if scale > 0 else distance


@dataclass(frozen=True)
class PeakReport:
    """Local maxima of |psi| after thresholding and merging"""
    count: int
    peaks: List[Tuple[int, float]] = field(default_factory=list)  # (index, magnitude)

    @property
    def highest(self) -> Optional[Tuple[int, float]]:
        if not self.peaks:
            return None
        return max(self.peaks, key=lambda peak: peak[1])


def merge_radius_points(grid: GridSpec, merge_distance: float) -> int:
    """Smallest point count covering merge_distance (at least 1)"""
    return max(1, int(np.ceil(merge_distance / grid.spacing - 1e-9)))


def peak_report(
    state: WaveState,
    threshold_fraction: Optional[float] = None,
    merge_distance: Optional[float] = None,
    merge_radius: Optional[int] = None,
    settings: Optional[SimulationSettings] = None,
) -> PeakReport:
    """
    Count solitons by their magnitude peaks

    Strict local maxima of |psi_j| (periodic neighbours) at or above threshold_fraction of the
    global maximum; maxima whose index gap is <= merge_radius are chained into one peak,
    represented by its largest member.

    Args:
        state: State to inspect
        threshold_fraction: Fraction of the global maximum a peak must reach
        merge_distance: Chaining distance in x, converted to ceil(distance / h) points
        merge_radius: Chaining distance in points; overrides merge_distance
        settings: SimulationSettings instance (uses default_settings if None)
    """
    settings = settings or default_settings
    if threshold_fraction is None:
        threshold_fraction = settings.peak_threshold_fraction
    if merge_radius is None:
        merge_radius = merge_radius_points(
            state.grid,
            settings.peak_merge_distance if merge_distance is None else merge_distance,
        )

    magnitudes = np.abs(state.amplitudes)
    global_max = float(np.max(magnitudes))
    if not np.isfinite(global_max) or global_max <= 0.0:
        return PeakReport(count=0, peaks=[])

    left = np.roll(magnitudes, 1)
    right = np.roll(magnitudes, -1)
    candidates = np.flatnonzero(
        (magnitudes > left) & (magnitudes > right) & (magnitudes >= threshold_fraction * global_max)
    )
    if candidates.size == 0:
        return PeakReport(count=0, peaks=[])

    groups: List[List[int]] = [[int(candidates[0])]]
    for index in candidates[1:]:
        if index - groups[-1][-1] <= merge_radius:
            groups[-1].append(int(index))
        else:
            groups.append([int(index)])

    # Periodic wrap: last group may continue into the first
    points = state.grid.points
    if len(groups) > 1 and groups[0][0] + points - groups[-1][-1] <= merge_radius:
        groups[0] = groups.pop() + groups[0]

    peaks = []
    for group in groups:
        best = max(group, key=lambda j: magnitudes[j])
        peaks.append((best, float(magnitudes[best])))
    peaks.sort()
    return PeakReport(count=len(peaks), peaks=peaks)


def diagnostics_record(step_index: int, state: WaveState, integrand: str = 'abs2') -> DiagnosticsRecord:
    """Norm and global peak of a state"""
    magnitudes = np.abs(state.amplitudes)
    peak_index = int(np.argmax(magnitudes))
    return DiagnosticsRecord(
        step_index=step_index,
        time=state.time,
        norm=trapezoid_norm(state, integrand),
        peak_amplitude=float(magnitudes[peak_index]),
        peak_index=peak_index,
    )


@dataclass(frozen=True)
class ConservationReport:
    """Norm behaviour over a whole run"""
    initial_norm: float
    final_norm: float
    final_drift: float
    max_drift: float
    max_drift_step: int

    def within(self, tolerance: float) -> bool:
        return self.max_drift < tolerance


def conservation_report(records: Sequence[DiagnosticsRecord]) -> ConservationReport:
    """Summarize per-step norms"""
    if not records:
        raise ValueError("conservation_report needs at least one record")
    initial = records[0].norm
    drifts = [abs(record.norm - initial) for record in records]
    worst = int(np.argmax(drifts))
    return ConservationReport(
        initial_norm=initial,
        final_norm=records[-1].norm,
        final_drift=drifts[-1],
        max_drift=drifts[worst],
        max_drift_step=records[worst].step_index,
    )
