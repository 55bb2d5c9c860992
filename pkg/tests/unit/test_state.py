"""Tests for the shared domain types (satnls.model.state)"""

import numpy as np
import pytest

from satnls.errors import ConfigurationError, GridMismatchError
from satnls.model.state import (
    DiagnosticsRecord,
    GridSpec,
    SaturationParam,
    WaveState,
    is_power_of_two,
)


@pytest.mark.parametrize("length, points, spacing", [
    (64.0, 512, 0.125),
    (30.0, 512, 0.05859375),
    (1.0, 8, 0.125),
])
def test_grid_spacing(length, points, spacing):
    grid = GridSpec(length, points)
    assert grid.spacing == spacing
    assert grid.points * grid.spacing == pytest.approx(length, rel=1e-15)


def test_grid_coordinates():
    grid = GridSpec(1.0, 8)
    np.testing.assert_array_equal(grid.coordinates(), np.arange(8) * 0.125)


@pytest.mark.parametrize("points", [511, 500, 4, 1, 0])
def test_grid_rejects_bad_mesh_count(points):
    with pytest.raises(ConfigurationError) as exc_info:
        GridSpec(64.0, points)
    assert exc_info.value.key == 'N'


@pytest.mark.parametrize("length", [0.0, -1.0, float('nan'), float('inf')])
def test_grid_rejects_bad_length(length):
    with pytest.raises(ConfigurationError) as exc_info:
        GridSpec(length, 512)
    assert exc_info.value.key == 'L'


def test_grid_rejects_fractional_points():
    with pytest.raises(ConfigurationError):
        GridSpec(64.0, 512.5)


def test_is_power_of_two():
    assert is_power_of_two(8)
    assert is_power_of_two(512)
    assert not is_power_of_two(0)
    assert not is_power_of_two(24)


def test_wave_state_length_must_match_grid():
    with pytest.raises(GridMismatchError):
        WaveState(grid=GridSpec(1.0, 8), amplitudes=np.zeros(7))


def test_wave_state_is_read_only_copy():
    source = np.ones(8, dtype=complex)
    state = WaveState(grid=GridSpec(1.0, 8), amplitudes=source)
    source[0] = 5.0
    assert state.amplitudes[0] == 1.0
    with pytest.raises(ValueError):
        state.amplitudes[0] = 2.0


def test_wave_state_rejects_negative_time():
    with pytest.raises(ValueError):
        WaveState(grid=GridSpec(1.0, 8), amplitudes=np.zeros(8), time=-0.1)


def test_wave_state_finiteness():
    grid = GridSpec(1.0, 8)
    assert WaveState(grid=grid, amplitudes=np.ones(8)).is_finite
    amplitudes = np.ones(8, dtype=complex)
    amplitudes[3] = complex(np.inf, 0.0)
    assert not WaveState(grid=grid, amplitudes=amplitudes).is_finite


def test_wave_state_evolve_advances_time():
    grid = GridSpec(1.0, 8)
    state = WaveState(grid=grid, amplitudes=np.zeros(8), time=0.5)
    advanced = state.evolve(np.ones(8), dt=0.25)
    assert advanced.time == 0.75
    assert advanced.grid == grid


def test_require_same_grid():
    a = WaveState(grid=GridSpec(1.0, 8), amplitudes=np.zeros(8))
    b = WaveState(grid=GridSpec(2.0, 8), amplitudes=np.zeros(8))
    with pytest.raises(GridMismatchError):
        a.require_same_grid(b)


@pytest.mark.parametrize("value, b, regular", [
    (0.0, 1.5, True),
    (-0.1, 1.7, True),
    (0.4, 0.7, True),
    (0.75, 0.0, False),
    (2.0, -2.5, False),
    (-10.0, 21.5, True),
])
def test_saturation_coefficient_b(value, b, regular):
    saturation = SaturationParam(value)
    assert saturation.coefficient_b == pytest.approx(b)
    assert saturation.profile_is_regular is regular


def test_run_config_step_count(make_config):
    assert make_config(tau=0.01, T=1.0).step_count == 100
    assert make_config(tau=0.1, T=0.3).step_count == 3
    assert make_config(scheme='fd', tau=0.001, T=1.0, L=30.0, solitons=((10, 20), (20, -20))).step_count == 1000


@pytest.mark.parametrize("changes, key", [
    ({'tau': 0.0}, 'tau'),
    ({'tau': -0.01}, 'tau'),
    ({'T': 0.0}, 'T'),
    ({'tau': 0.5, 'T': 0.4}, 'T'),
    ({'scheme': 'rk4'}, 'scheme'),
    ({'splitting': 'yoshida'}, 'splitting'),
    ({'norm_integrand': 'abs3'}, 'norm_integrand'),
    ({'solitons': ()}, 'solitons'),
    ({'solitons': ((1, 0), (2, 0), (3, 0))}, 'solitons'),
    ({'solitons': ((64.0, 0),)}, 'solitons'),
    ({'solitons': ((-1.0, 0),)}, 'solitons'),
    ({'snapshot_stride': 0}, 'snapshot_stride'),
])
def test_run_config_validation(make_config, changes, key):
    with pytest.raises(ConfigurationError) as exc_info:
        make_config(**changes)
    assert exc_info.value.key == key


def test_run_config_with_changes_revalidates(make_config):
    config = make_config()
    assert config.with_changes(tau=0.005).step_count == 200
    with pytest.raises(ConfigurationError):
        config.with_changes(tau=0.0)


def test_diagnostics_record_divergence_flag():
    assert not DiagnosticsRecord(0, 0.0, 1.0, 1.0, 3).is_diverged
    assert DiagnosticsRecord(5, 0.05, float('inf'), 1.0, 3).is_diverged
    assert DiagnosticsRecord(5, 0.05, float('nan'), 1.0, 3).is_diverged
