"""Test module for soliton initial data"""

import math

import numpy as np
import pytest

from satnls.diagnostics import trapezoid_norm
from satnls.errors import ConfigurationError, SingularProfileError
from satnls.initial import (
    init_one_soliton,
    init_solitons,
    init_two_soliton,
    initial_state,
    soliton_field,
    soliton_profile,
)
from satnls.model.state import GridSpec, SaturationParam, SolitonSpec


def test_profile_center_value():
    # f(0) = 2*sqrt(2) / (1 + B)
    assert soliton_profile(0.0, 0.0, SaturationParam(0.0), 0.0) == pytest.approx(2 * math.sqrt(2) / 2.5)
    assert soliton_profile(0.0, 0.0, SaturationParam(-0.1), 0.0) == pytest.approx(1.047566, rel=1e-6)


def test_profile_phase():
    value = soliton_profile(0.0, math.pi / 2, SaturationParam(0.0), 5.0)
    assert value.real == pytest.approx(0.0, abs=1e-12)
    assert value.imag == pytest.approx(2 * math.sqrt(2) / 2.5)


def test_profile_velocity_phase_gradient():
    x = np.array([-0.5, 0.3, 1.0])
    field = soliton_field(x, 0.0, SaturationParam(-0.1), 10.0)
    np.testing.assert_allclose(np.angle(field / np.abs(field)), np.angle(np.exp(10j * x)), atol=1e-12)


def test_profile_decays_without_overflow():
    field = soliton_field(np.array([-400.0, 400.0]), 0.0, SaturationParam(-0.1), 0.0)
    assert np.all(np.isfinite(field))
    assert np.all(np.abs(field) < 1e-200)


def test_profile_peak():
    # max of f is sqrt(2/B) at x = -ln(B) / (2*sqrt(2))
    saturation = SaturationParam(-0.1)
    b = saturation.coefficient_b
    x_peak = -math.log(b) / (2 * math.sqrt(2))
    assert abs(soliton_profile(x_peak, 0.0, saturation, 0.0)) == pytest.approx(math.sqrt(2 / b))


def test_profile_singular_point_raises():
    saturation = SaturationParam(2.0)  # B = -2.5
    x_pole = -math.log(2.5) / (2 * math.sqrt(2))
    with pytest.raises(SingularProfileError) as exc_info:
        soliton_field(np.array([0.0, x_pole]), 0.0, saturation, 0.0)
    assert exc_info.value.x == pytest.approx(x_pole)


@pytest.mark.parametrize("S", [0.0, -0.1, 0.4])
def test_one_soliton_norm(ss_grid, logger, S):
    state = init_one_soliton(ss_grid, SolitonSpec(32.0, 0.0), SaturationParam(S), logger=logger)
    assert state.time == 0.0
    assert trapezoid_norm(state) == pytest.approx(2 * math.sqrt(2) / (1.5 - 2 * S), rel=1e-8)


def test_one_soliton_sample_values(ss_grid, logger):
    spec = SolitonSpec(8.0, 10.0)
    saturation = SaturationParam(-0.1)
    state = init_one_soliton(ss_grid, spec, saturation, logger=logger)
    for j in (0, 64, 100, 511):
        expected = soliton_profile(j * ss_grid.spacing - 8.0, 0.0, saturation, 10.0)
        assert state.amplitudes[j] == pytest.approx(expected, rel=1e-12, abs=1e-300)


def test_one_soliton_peak_location(ss_grid, logger):
    state = init_one_soliton(ss_grid, SolitonSpec(8.0, 20.0), SaturationParam(-0.1), logger=logger)
    magnitudes = state.magnitudes()
    # true peak sits at x = 8 - 0.1876, almost midway between samples 62 and 63
    assert int(np.argmax(magnitudes)) in (62, 63)
    assert magnitudes.max() == pytest.approx(math.sqrt(2 / 1.7), abs=5e-3)


def test_two_soliton_is_superposition(ss_grid, logger):
    saturation = SaturationParam(-0.1)
    first = SolitonSpec(8.0, 20.0)
    second = SolitonSpec(18.0, -20.0)
    pair = init_two_soliton(ss_grid, first, second, saturation, logger=logger)
    one = init_one_soliton(ss_grid, first, saturation, logger=logger)
    two = init_one_soliton(ss_grid, second, saturation, logger=logger)
    np.testing.assert_allclose(pair.amplitudes, one.amplitudes + two.amplitudes)


def test_well_separated_pair_norm_is_additive(ss_grid, logger):
    saturation = SaturationParam(0.0)
    pair = init_two_soliton(ss_grid, SolitonSpec(16.0, 0.0), SolitonSpec(48.0, 0.0), saturation, logger=logger)
    assert trapezoid_norm(pair) == pytest.approx(2 * 2 * math.sqrt(2) / 1.5, rel=1e-8)


def test_nonpositive_b_warns(ss_grid, logger):
    state = init_one_soliton(ss_grid, SolitonSpec(32.0, 0.0), SaturationParam(2.0), logger=logger)
    assert state.amplitudes.shape == (512,)
    assert [w.warning_type for w in logger.warnings] == ['nonpositive_saturation']


def test_regular_b_does_not_warn(ss_grid, logger):
    init_one_soliton(ss_grid, SolitonSpec(32.0, 0.0), SaturationParam(-10.0), logger=logger)
    assert logger.warnings == []


@pytest.mark.parametrize("offset", [-1.0, 64.0, 100.0])
def test_offset_outside_domain(ss_grid, logger, offset):
    with pytest.raises(ConfigurationError) as exc_info:
        init_one_soliton(ss_grid, SolitonSpec(offset, 0.0), SaturationParam(0.0), logger=logger)
    assert exc_info.value.key == 'solitons'


def test_init_solitons_count(logger):
    grid = GridSpec(64.0, 512)
    saturation = SaturationParam(0.0)
    assert init_solitons(grid, [SolitonSpec(32.0)], saturation, logger=logger).grid == grid
    with pytest.raises(ConfigurationError):
        init_solitons(grid, [], saturation, logger=logger)
    with pytest.raises(ConfigurationError):
        init_solitons(grid, [SolitonSpec(1.0)] * 3, saturation, logger=logger)


def test_initial_state_from_config(make_config, logger):
    config = make_config()
    state = initial_state(config, logger=logger)
    expected = init_two_soliton(
        config.grid, config.solitons[0], config.solitons[1], config.saturation, logger=logger
    )
    np.testing.assert_array_equal(state.amplitudes, expected.amplitudes)
