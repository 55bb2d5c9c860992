"""
Configuration and policy module

Manages tolerances, thresholds, scheme vocabularies, per-scheme parameter sets and preset lookup
"""
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, Optional, Tuple, Union


# Conserved-norm accuracy used for the single-soliton checks
NORM_TOLERANCE = 1e-3

# A run is diverged once its norm exceeds this multiple of the initial norm
DIVERGENCE_FACTOR = 10.0

# |denominator| at or below this (relative) value counts as a vanishing denominator
SINGULARITY_TOLERANCE = 1e-12

# Peak tracking heuristics: 25% of the global maximum; maxima closer than about one soliton
# width (in x) merge, so interference fringes of a collision count as one peak
PEAK_THRESHOLD_FRACTION = 0.25
PEAK_MERGE_DISTANCE = 2.0

# Default number of Fourier angles beta in a Von Neumann sweep
STABILITY_SWEEP_SAMPLES = 360

# Smallest legal mesh (the spectral transform wants a power of two)
MIN_GRID_POINTS = 8

# Absorbs rounding in floor(T / tau), e.g. 0.3 / 0.1 = 2.9999999999999996
STEP_COUNT_SLACK = 1e-9

SCHEMES: Tuple[str, ...] = ('splitstep', 'fd')
SPLITTINGS: Tuple[str, ...] = ('lie', 'strang')
NORM_INTEGRANDS: Tuple[str, ...] = ('abs2', 'abs')

# Accepted spellings → canonical scheme name
SCHEME_ALIASES: Dict[str, str] = {
    'splitstep': 'splitstep',
    'split-step': 'splitstep',
    'split_step': 'splitstep',
    'ss': 'splitstep',
    'fd': 'fd',
    'finitedifference': 'fd',
    'finite-difference': 'fd',
    'finite_difference': 'fd',
    'leapfrog': 'fd',
}

# Reference parameters per scheme (T = 1, N = 512)
SCHEME_PARAMETERS: Dict[str, Dict[str, float]] = {
    'splitstep': {'L': 64.0, 'N': 512, 'tau': 0.01, 'T': 1.0},
    'fd': {'L': 30.0, 'N': 512, 'tau': 0.001, 'T': 1.0},
}

# Single-soliton conservation checks (8 steps, S = -0.1).
# fd uses v = 0: at large v the leapfrog parasitic mode alone moves |psi|^2 by more than epsilon.
CONSERVATION_CHECKS: Dict[str, Dict[str, Union[float, int, str]]] = {
    'splitstep': {'L': 64.0, 'N': 512, 'tau': 0.01, 'S': -0.1, 'solitons': '8:10', 'steps': 8},
    'fd': {'L': 30.0, 'N': 512, 'tau': 0.001, 'S': -0.1, 'solitons': '8:0', 'steps': 8},
}

PRESETS_DIR = Path(__file__).resolve().parent / 'presets'
PRESET_SUFFIX = '.cfg'


@dataclass
class SimulationSettings:
    """Tunables shared by the solvers, diagnostics and CLI"""
    # Conservation accuracy epsilon
    norm_tolerance: float = NORM_TOLERANCE

    # Divergence: norm > divergence_factor * initial norm, or any non-finite sample
    divergence_factor: float = DIVERGENCE_FACTOR

    singularity_tolerance: float = SINGULARITY_TOLERANCE

    peak_threshold_fraction: float = PEAK_THRESHOLD_FRACTION
    peak_merge_distance: float = PEAK_MERGE_DISTANCE

    stability_samples: int = STABILITY_SWEEP_SAMPLES

    # compare: tau used for both schemes when the configured one is FD-unstable = fraction * h^2/2
    fd_safe_fraction: float = 0.5

    # Whether B <= 0 initial data is reported as a warning
    warn_nonpositive_saturation: bool = True

    # Debug progress line every N steps (0 disables)
    progress_every: int = 100


def canonical_scheme(name: str) -> Optional[str]:
    """
    Resolve a scheme spelling

    Args:
        name: Scheme name as written by a user ('splitstep', 'fd', 'leapfrog', ...)

    Returns:
        'splitstep' or 'fd', or None when the name is unknown
    """
    if not name:
        return None
    return SCHEME_ALIASES.get(name.strip().lower())


def preset_path(name: str) -> Optional[Path]:
    """Locate a shipped preset by name ('fig2', 'fig2.cfg'); None if there is none"""
    stem = name[:-len(PRESET_SUFFIX)] if name.endswith(PRESET_SUFFIX) else name
    path = PRESETS_DIR / f"{stem}{PRESET_SUFFIX}"
    return path if path.is_file() else None


def list_presets() -> Tuple[str, ...]:
    """Names of all shipped presets (without suffix), sorted"""
    return tuple(sorted(p.stem for p in PRESETS_DIR.glob(f"*{PRESET_SUFFIX}")))


# Default settings instance
default_settings = SimulationSettings()
