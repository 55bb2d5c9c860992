"""
Stability analysis module

Von Neumann analysis of the leapfrog scheme for the linearized equation (nonlinear term neglected).
Inserting psi_{j,k} = alpha^k e^{i beta j} gives

    alpha^2 + (4 tau i / h^2) sin^2(beta/2) alpha - 1 = 0

whose roots have |alpha| = 1 for every beta exactly when tau < h^2/2.
"""
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np

from .config import SimulationSettings, default_settings
from .model.state import GridSpec

NONLINEAR_CAVEAT = "nonlinear term neglected (linearized analysis)"


@dataclass(frozen=True)
class AmplificationResult:
    """Both amplification factors of one Fourier angle"""
    beta: float
    roots: Tuple[complex, complex]
    max_magnitude: float


def _validate(tau: float, h: float):
    if not math.isfinite(h) or h <= 0:
        raise ValueError(f"grid spacing must be positive, got {h!r}")
    if not math.isfinite(tau) or tau <= 0:
        raise ValueError(f"time step must be positive, got {tau!r}")


def _roots(tau: float, h: float, beta: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    # alpha = -i q s +- sqrt(1 - q^2 s^2),  q = 2 tau / h^2,  s = sin^2(beta/2)
    qs = (2.0 * tau / (h * h)) * np.sin(0.5 * beta) ** 2
    root = np.sqrt(1.0 - qs * qs + 0j)
    return -1j * qs + root, -1j * qs - root


def amplification_roots(tau: float, h: float, beta: float) -> AmplificationResult:
    """
    Closed-form roots of the leapfrog amplification quadratic at angle beta

    Args:
        tau: Time step
        h: Grid spacing
        beta: Fourier angle (radians)

    Returns:
        AmplificationResult with max_magnitude = max |alpha|
    """
    _validate(tau, h)
    plus, minus = _roots(tau, h, np.asarray(beta, dtype=np.float64))
    roots = (complex(plus), complex(minus))
    return AmplificationResult(
        beta=float(beta),
        roots=roots,
        max_magnitude=max(abs(roots[0]), abs(roots[1])),
    )


def sweep_modes(tau: float, h: float, samples: int) -> List[AmplificationResult]:
    """amplification_roots at beta = 2*pi*k/samples, k = 0..samples-1"""
    _validate(tau, h)
    if samples < 2:
        raise ValueError(f"a sweep needs at least 2 samples, got {samples}")
    betas = 2.0 * np.pi * np.arange(samples) / samples
    plus, minus = _roots(tau, h, betas)
    magnitudes = np.maximum(np.abs(plus), np.abs(minus))
    return [
        AmplificationResult(beta=float(b), roots=(complex(p), complex(m)), max_magnitude=float(a))
        for b, p, m, a in zip(betas, plus, minus, magnitudes)
    ]


@dataclass(frozen=True)
class StabilityReport:
    """Verdict of the tau < h^2/2 criterion plus the worst mode of a beta sweep"""
    tau: float
    h: float
    threshold: float  # h^2 / 2
    stable: bool
    worst_beta: float
    worst_magnitude: float
    samples: int
    note: str = NONLINEAR_CAVEAT
    sweep: List[AmplificationResult] = field(default_factory=list, repr=False, compare=False)

    @property
    def q(self) -> float:
        """2 tau / h^2; stable iff q < 1"""
        return 2.0 * self.tau / (self.h * self.h)

    def __bool__(self) -> bool:
        return self.stable


def is_stable(tau: float, h: float, samples: Optional[int] = None,
              settings: Optional[SimulationSettings] = None) -> StabilityReport:
    """
    Leapfrog stability verdict: stable iff tau < h^2/2

    The marginal case tau = h^2/2 is unstable (the double root at beta = pi allows
    linear growth).

    Args:
        tau: Time step
        h: Grid spacing
        samples: beta sweep size (settings.stability_samples if None)
        settings: SimulationSettings instance (uses default_settings if None)
    """
    settings = settings or default_settings
    samples = samples or settings.stability_samples
    _validate(tau, h)
    threshold = 0.5 * h * h
    sweep = sweep_modes(tau, h, samples)
    worst = max(sweep, key=lambda result: result.max_magnitude)
    return StabilityReport(
        tau=float(tau),
        h=float(h),
        threshold=threshold,
        stable=tau < threshold,
        worst_beta=worst.beta,
        worst_magnitude=worst.max_magnitude,
        samples=samples,
        sweep=sweep,
    )


def stability_for_grid(tau: float, grid: GridSpec, samples: Optional[int] = None,
                       settings: Optional[SimulationSettings] = None) -> StabilityReport:
    """is_stable for the spacing of a grid"""
    return is_stable(tau, grid.spacing, samples=samples, settings=settings)
