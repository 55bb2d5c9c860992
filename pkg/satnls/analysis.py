"""
Run analysis module

Single-soliton conservation checks, split-step vs finite-difference comparison with
peak timelines, and wall-clock benchmarks. The print_* helpers render the reports
used by the CLI.
"""
import statistics
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .config import (
    CONSERVATION_CHECKS,
    SCHEME_PARAMETERS,
    SCHEMES,
    SimulationSettings,
    default_settings,
)
from .diagnostics import (
    StateDistance,
    conservation_drift,
    conservation_report,
    peak_report,
    state_distance,
)
from .errors import ConfigurationError
from .geom.grid import fd_stability_threshold
from .initial import initial_state
from .io.config_loader import build_config, config_pairs, parse_config, resolve_config_path
from .logger import SimulationLogger, get_logger
from .model.state import GridSpec, RunConfig, SolitonSpec, WaveState
from .solvers.monitor import EvolutionResult
from .solvers.runner import run_simulation
from .stability import StabilityReport

BENCH_DEFAULT_PRESETS: Tuple[str, ...] = ('fig1', 'fig2')


def _print(*args, **kwargs):
    """Print to stdout without logging format"""
    print(*args, **kwargs, file=sys.stdout)


# ---------------------------------------------------------------- conservation

@dataclass
class ConservationCheck:
    """Outcome of a single-soliton norm check"""
    scheme: str
    config: RunConfig
    drift: float
    tolerance: float
    result: EvolutionResult

    @property
    def diverged(self) -> bool:
        return self.result.diverged

    @property
    def passed(self) -> bool:
        return not self.diverged and self.drift < self.tolerance


def conservation_config(scheme: str, steps: int = 8, overrides: Optional[Mapping[str, str]] = None) -> RunConfig:
    """
    Configuration of the single-soliton check

    split-step takes `steps` steps; finite difference takes the bootstrap step plus `steps`
    central steps. T follows from tau unless overridden.
    """
    if scheme not in SCHEMES:
        raise ConfigurationError('scheme', f"expected one of {SCHEMES}, got {scheme!r}")
    if steps < 1:
        raise ConfigurationError('steps', f"must be >= 1, got {steps}")
    check = CONSERVATION_CHECKS[scheme]
    pairs: Dict[str, str] = {key: str(value) for key, value in check.items() if key != 'steps'}
    pairs['scheme'] = scheme
    if overrides:
        pairs.update({k: str(v) for k, v in overrides.items()})
    if 'T' not in pairs:
        total_steps = steps + 1 if scheme == 'fd' else steps
        try:
            tau = float(pairs['tau'])
        except ValueError:
            raise ConfigurationError('tau', f"expected a number, got {pairs['tau']!r}") from None
        pairs['T'] = repr(total_steps * tau)
    return build_config(pairs)


def check_conservation(
    scheme: str,
    steps: int = 8,
    overrides: Optional[Mapping[str, str]] = None,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
) -> ConservationCheck:
    """
    Evolve one soliton a few steps and measure |N(initial) - N(final)|

    Args:
        scheme: 'splitstep' or 'fd'
        steps: Steps after the initial state (central steps for fd)
        overrides: Configuration keys replacing the built-in check parameters
        logger: SimulationLogger instance (uses get_logger() if None)
        settings: SimulationSettings instance (uses default_settings if None)
    """
    logger = logger or get_logger()
    settings = settings or default_settings
    config = conservation_config(scheme, steps, overrides)
    initial = initial_state(config, logger=logger)
    result = run_simulation(config, logger=logger, settings=settings, initial=initial)
    drift = conservation_drift(initial, result.final, config.norm_integrand)
    return ConservationCheck(
        scheme=scheme,
        config=config,
        drift=drift,
        tolerance=settings.norm_tolerance,
        result=result,
    )


# ---------------------------------------------------------------- comparison

@dataclass(frozen=True)
class PeakSample:
    step_index: int
    time: float
    count: int
    highest: float


@dataclass
class PeakTimeline:
    """Peak count of every step of one run"""
    scheme: str
    samples: List[PeakSample] = field(default_factory=list)

    def counts(self) -> List[int]:
        return [sample.count for sample in self.samples]

    def transitions(self) -> List[int]:
        """Counts with repeats collapsed, e.g. [2, 1, 2]"""
        compressed: List[int] = []
        for count in self.counts():
            if not compressed or compressed[-1] != count:
                compressed.append(count)
        return compressed

    def first_step_with(self, count: int) -> Optional[PeakSample]:
        for sample in self.samples:
            if sample.count == count:
                return sample
        return None


class _PeakRecorder:
    """Snapshot sink that keeps only the peak count"""

    def __init__(self, scheme: str, settings: SimulationSettings):
        self.timeline = PeakTimeline(scheme=scheme)
        self.settings = settings

    def record(self, step_index: int, state: WaveState):
        report = peak_report(state, settings=self.settings)
        highest = report.highest[1] if report.highest else 0.0
        self.timeline.samples.append(PeakSample(step_index, state.time, report.count, highest))

    __call__ = record


@dataclass
class ComparisonResult:
    """Both schemes run from the same initial state"""
    config: RunConfig  # tau already made FD-safe
    tau_requested: float
    results: Dict[str, EvolutionResult]
    timelines: Dict[str, PeakTimeline]
    distance: Optional[StateDistance]

    @property
    def tau_reduced(self) -> bool:
        return self.config.tau != self.tau_requested


def fd_safe_tau(config: RunConfig, settings: Optional[SimulationSettings] = None) -> float:
    """config.tau if it satisfies tau < h^2/2, else settings.fd_safe_fraction * h^2/2"""
    settings = settings or default_settings
    threshold = fd_stability_threshold(config.grid)
    if config.tau < threshold:
        return config.tau
    return settings.fd_safe_fraction * threshold


def compare_schemes(
    config: RunConfig,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
) -> ComparisonResult:
    """
    Run split-step and finite difference on config's grid with a common FD-stable tau

    Peak timelines cover every step including the final state.
    """
    logger = logger or get_logger()
    settings = settings or default_settings

    tau = fd_safe_tau(config, settings)
    if tau != config.tau:
        logger.warn_tau_reduced(config.tau, tau)
    base = config.with_changes(tau=tau, snapshot_stride=1)
    initial = initial_state(base, logger=logger)

    results: Dict[str, EvolutionResult] = {}
    timelines: Dict[str, PeakTimeline] = {}
    for scheme in SCHEMES:
        recorder = _PeakRecorder(scheme, settings)
        result = run_simulation(base.with_changes(scheme=scheme), sink=recorder,
                                logger=logger, settings=settings, initial=initial)
        if not result.diverged:
            recorder.record(result.steps_taken, result.final)
        results[scheme] = result
        timelines[scheme] = recorder.timeline

    distance = None
    if not any(result.diverged for result in results.values()):
        distance = state_distance(results['splitstep'].final, results['fd'].final)

    return ComparisonResult(
        config=base,
        tau_requested=config.tau,
        results=results,
        timelines=timelines,
        distance=distance,
    )


# ---------------------------------------------------------------- benchmark

@dataclass
class BenchEntry:
    """Wall-clock timings of one configuration"""
    label: str
    config: RunConfig
    times: List[float]
    steps: int
    diverged: bool = False

    @property
    def median(self) -> float:
        return statistics.median(self.times)

    @property
    def spread(self) -> float:
        return max(self.times) - min(self.times)

    @property
    def per_step_median(self) -> float:
        return self.median / self.steps if self.steps else float('nan')

    @property
    def noisy(self) -> bool:
        """A single repeat gives no spread estimate"""
        return len(self.times) < 2


def with_scheme_parameters(config: RunConfig, scheme: str) -> RunConfig:
    """
    config moved to the other scheme's own tau and L (S, solitons, T, N kept)

    Offsets are wrapped into the new domain.
    """
    params = SCHEME_PARAMETERS[scheme]
    length = float(params['L'])
    grid = GridSpec(length=length, points=config.grid.points)
    solitons = tuple(SolitonSpec(spec.offset % length, spec.velocity) for spec in config.solitons)
    return config.with_changes(scheme=scheme, tau=float(params['tau']), grid=grid, solitons=solitons)


def bench_configs(config: Optional[RunConfig] = None) -> List[Tuple[str, RunConfig]]:
    """(label, config) pairs timed by benchmark"""
    if config is None:
        return [(name, parse_config(resolve_config_path(name))) for name in BENCH_DEFAULT_PRESETS]
    other = 'fd' if config.scheme == 'splitstep' else 'splitstep'
    return [
        (config.scheme, config),
        (f"{other} (own tau, L)", with_scheme_parameters(config, other)),
    ]


def benchmark(
    config: Optional[RunConfig] = None,
    repeat: int = 3,
    logger: Optional[SimulationLogger] = None,
    settings: Optional[SimulationSettings] = None,
) -> List[BenchEntry]:
    """
    Time whole runs of each bench configuration `repeat` times

    Numbers are informational only.
    """
    if repeat < 1:
        raise ConfigurationError('repeat', f"must be >= 1, got {repeat}")
    logger = logger or get_logger()
    settings = settings or default_settings

    entries = []
    for label, cfg in bench_configs(config):
        initial = initial_state(cfg, logger=logger)
        times: List[float] = []
        result = None
        for _ in range(repeat):
            start = time.perf_counter()
            result = run_simulation(cfg, logger=logger, settings=settings, initial=initial)
            times.append(time.perf_counter() - start)
        entries.append(BenchEntry(
            label=label,
            config=cfg,
            times=times,
            steps=result.steps_taken,
            diverged=result.diverged,
        ))
    return entries


# ---------------------------------------------------------------- reports

def print_conservation(check: ConservationCheck):
    """Print a conservation check"""
    config = check.config
    _print(f"=== Conservation check ({check.scheme}) ===")
    _print(f"S={config.saturation.value} tau={config.tau} L={config.grid.length} N={config.grid.points} "
           f"steps={config.step_count}")
    if check.diverged:
        _print(f"Diverged: {check.result.divergence.reason} (step {check.result.divergence.step_index})")
    _print(f"Norm drift: {check.drift:.6e} (epsilon {check.tolerance:g}) "
           f"{'✓' if check.passed else '✗'}")


def print_stability(report: StabilityReport, sweep: bool = False):
    """Print a stability verdict, optionally with the beta sweep table"""
    _print("=== Von Neumann stability (leapfrog) ===")
    _print(f"tau={report.tau:g} h={report.h:.6g} q=2tau/h^2={report.q:.6g}")
    _print(f"Threshold h^2/2: {report.threshold:.7g}")
    _print(f"Verdict: {'stable' if report.stable else 'unstable'} (tau {'<' if report.stable else '>='} h^2/2)")
    _print(f"Worst mode: beta={report.worst_beta:.6f} max|alpha|={report.worst_magnitude:.12f}")
    _print(f"Note: {report.note}")
    if sweep:
        _print()
        _print(f"{'k':>5} {'beta':>10} {'max|alpha|':>16}")
        for k, result in enumerate(report.sweep):
            _print(f"{k:>5} {result.beta:>10.6f} {result.max_magnitude:>16.12f}")


def _format_transitions(timeline: PeakTimeline) -> str:
    return ' -> '.join(str(count) for count in timeline.transitions())


def print_comparison(comparison: ComparisonResult):
    """Print distances and peak timelines"""
    config = comparison.config
    _print("=== Scheme comparison ===")
    _print(f"S={config.saturation.value} L={config.grid.length} N={config.grid.points} T={config.total_time} "
           f"tau={config.tau:g}" + (f" (requested {comparison.tau_requested:g})" if comparison.tau_reduced else ""))
    for scheme in SCHEMES:
        result = comparison.results[scheme]
        timeline = comparison.timelines[scheme]
        status = 'diverged' if result.diverged else 'completed'
        report = conservation_report(result.records)
        _print(f"[{scheme}] {status}, {result.steps_taken} steps, norm drift {report.max_drift:.3e}")
        _print(f"[{scheme}] peak counts: {_format_transitions(timeline)}")
    if comparison.distance is None:
        _print("Distance at T: n/a (a run diverged)")
    else:
        _print(f"Distance at T: l2={comparison.distance.l2:.6e} linf={comparison.distance.linf:.6e}")


def print_benchmark(entries: Sequence[BenchEntry]):
    """Print the timing table"""
    _print("=== Benchmark ===")
    _print(f"{'run':<24} {'steps':>6} {'median s':>10} {'spread s':>10} {'per step ms':>12}")
    for entry in entries:
        flags = []
        if entry.noisy:
            flags.append('noisy: single repeat')
        if entry.diverged:
            flags.append('diverged')
        suffix = f"  ({', '.join(flags)})" if flags else ''
        _print(f"{entry.label:<24} {entry.steps:>6} {entry.median:>10.4f} {entry.spread:>10.4f} "
               f"{1000.0 * entry.per_step_median:>12.4f}{suffix}")


def describe_config(config: RunConfig) -> str:
    """One-line `key=value` summary"""
    return ' '.join(f"{key}={value}" for key, value in config_pairs(config))
