"""
Initial condition module

Builds one- and two-soliton wave states from the soliton profile
f(x) = 2*sqrt(2)*e^{sqrt(2)x} / (1 + B*e^{2*sqrt(2)x}),  B = 3/2 - 2S
with phase exp(i*t + i*v*x)
"""
from typing import Optional, Sequence, Union

import numpy as np

from .config import SimulationSettings, default_settings
from .errors import ConfigurationError, SingularProfileError
from .logger import SimulationLogger, get_logger
from .model.state import GridSpec, RunConfig, SaturationParam, SolitonSpec, WaveState

SQRT2 = np.sqrt(2.0)


def soliton_field(
    x_rel: Union[float, np.ndarray],
    t: float,
    saturation: SaturationParam,
    velocity: float,
    settings: Optional[SimulationSettings] = None,
) -> np.ndarray:
    """
    Evaluate the soliton at shifted coordinates (vectorized)

    For x > 0 the profile is evaluated as 2*sqrt(2)*e^{-sqrt(2)x} / (e^{-2sqrt(2)x} + B)
    so that large domains do not overflow.

    Args:
        x_rel: Coordinates relative to the soliton center
        t: Time entering the global phase
        saturation: Saturation parameter S
        velocity: Phase-gradient velocity v (multiplies x_rel)
        settings: Tolerances (uses default_settings if None)

    Returns:
        Complex array shaped like x_rel

    Raises:
        SingularProfileError: When the denominator vanishes at some x_rel
    """
    settings = settings or default_settings
    coefficient_b = saturation.coefficient_b
    x = np.asarray(x_rel, dtype=np.float64)

    left = x <= 0
    # e^{-sqrt(2)|x|} <= 1 on both branches
    decay = np.exp(-SQRT2 * np.abs(x))
    decay_sq = decay * decay
    numerator = 2.0 * SQRT2 * decay
    denominator = np.where(left, 1.0 + coefficient_b * decay_sq, decay_sq + coefficient_b)
    scale = np.where(left, 1.0 + abs(coefficient_b) * decay_sq, decay_sq + abs(coefficient_b))

    singular = np.abs(denominator) <= settings.singularity_tolerance * scale
    if np.any(singular):
        bad = x[singular].flat[0] if x.ndim else float(x)
        raise SingularProfileError(float(bad))

    profile = numerator / denominator
    return profile * np.exp(1j * t + 1j * velocity * x)


def soliton_profile(x_rel: float, t: float, saturation: SaturationParam, velocity: float) -> complex:
    """Soliton value f(x_rel)*exp(i*t + i*v*x_rel) at one point"""
    return complex(soliton_field(np.float64(x_rel), t, saturation, velocity))


def _check_saturation(saturation: SaturationParam, logger: SimulationLogger):
    if not saturation.profile_is_regular:
        logger.warn_nonpositive_saturation(saturation.value, saturation.coefficient_b)


def init_one_soliton(
    grid: GridSpec,
    spec: SolitonSpec,
    saturation: SaturationParam,
    logger: Optional[SimulationLogger] = None,
) -> WaveState:
    """
    Single soliton centered at spec.offset

    amplitudes[j] = soliton(j*h - offset, t=0, S, v); time = 0
    """
    logger = logger or get_logger()
    _check_saturation(saturation, logger)
    _check_offset(grid, spec)
    x_rel = grid.coordinates() - spec.offset
    return WaveState(grid=grid, amplitudes=soliton_field(x_rel, 0.0, saturation, spec.velocity), time=0.0)


def init_two_soliton(
    grid: GridSpec,
    spec1: SolitonSpec,
    spec2: SolitonSpec,
    saturation: SaturationParam,
    logger: Optional[SimulationLogger] = None,
) -> WaveState:
    """Superposition of two single-soliton fields"""
    logger = logger or get_logger()
    _check_saturation(saturation, logger)
    x = grid.coordinates()
    fields = []
    for spec in (spec1, spec2):
        _check_offset(grid, spec)
        fields.append(soliton_field(x - spec.offset, 0.0, saturation, spec.velocity))
    return WaveState(grid=grid, amplitudes=fields[0] + fields[1], time=0.0)


def init_solitons(
    grid: GridSpec,
    solitons: Sequence[SolitonSpec],
    saturation: SaturationParam,
    logger: Optional[SimulationLogger] = None,
) -> WaveState:
    """One- or two-soliton state depending on len(solitons)"""
    if len(solitons) == 1:
        return init_one_soliton(grid, solitons[0], saturation, logger=logger)
    if len(solitons) == 2:
        return init_two_soliton(grid, solitons[0], solitons[1], saturation, logger=logger)
    raise ConfigurationError('solitons', f"expected 1 or 2 solitons, got {len(solitons)}")


def initial_state(config: RunConfig, logger: Optional[SimulationLogger] = None) -> WaveState:
    """Initial wave state for a run"""
    return init_solitons(config.grid, config.solitons, config.saturation, logger=logger)


def _check_offset(grid: GridSpec, spec: SolitonSpec):
    if not (0.0 <= spec.offset < grid.length):
        raise ConfigurationError('solitons', f"offset {spec.offset} outside [0, {grid.length})")
