"""Temporal convergence order of both schemes against a tau/8 reference run"""

import pytest

from satnls.diagnostics import state_distance
from satnls.solvers import run_simulation


def _error_ratio(make_config, logger, scheme, L, offset, tau, splitting='lie'):
    """e(tau) / e(tau/2), both measured against the run with tau/8"""
    def final(step):
        config = make_config(scheme=scheme, S=-0.1, tau=step, T=0.5, L=L,
                             solitons=((offset, 0.0),), splitting=splitting)
        result = run_simulation(config, logger=logger)
        assert not result.diverged
        assert result.final.time == pytest.approx(0.5)
        return result.final

    reference = final(tau / 8)
    errors = [state_distance(final(step), reference).l2 for step in (tau, tau / 2)]
    return errors[0] / errors[1]


def test_lie_splitting_is_first_order(make_config, logger):
    # order 1 against a tau/8 reference: (1 - 1/8) / (1/2 - 1/8) = 2.33
    ratio = _error_ratio(make_config, logger, 'splitstep', 64.0, 32.0, 0.01)
    assert 1.7 <= ratio <= 2.6


def test_strang_splitting_is_second_order(make_config, logger):
    ratio = _error_ratio(make_config, logger, 'splitstep', 64.0, 32.0, 0.01, splitting='strang')
    assert 3.2 <= ratio <= 5.0


def test_leapfrog_is_second_order(make_config, logger):
    ratio = _error_ratio(make_config, logger, 'fd', 30.0, 15.0, 0.001)
    assert 3.2 <= ratio <= 5.0
