"""Test module for run configuration files and presets"""

from pathlib import Path

import pytest

from satnls.config import list_presets, preset_path
from satnls.errors import ConfigurationError
from satnls.io.config_loader import (
    parse_config,
    parse_config_text,
    parse_solitons,
    resolve_config_path,
    serialize_config,
    write_config,
)
from satnls.model.state import SolitonSpec

BASE = """\
# two solitons
scheme=splitstep
S=-0.1
tau=0.01   # step
T=1

L=64
N=512
solitons=8:20;18:-20
"""


def test_parse_fig2_preset():
    config = parse_config(preset_path('fig2'))
    assert config.scheme == 'splitstep'
    assert config.saturation.value == -0.1
    assert config.tau == 0.01
    assert config.total_time == 1.0
    assert config.grid.length == 64.0
    assert config.grid.points == 512
    assert config.solitons == (SolitonSpec(8.0, 20.0), SolitonSpec(18.0, -20.0))
    assert config.step_count == 100
    assert config.splitting == 'lie'
    assert config.norm_integrand == 'abs2'
    assert config.snapshot_stride == 1
    assert config.output_dir == Path('output')


@pytest.mark.parametrize("name", list_presets())
def test_every_preset_parses(name):
    config = parse_config(preset_path(name))
    assert config.grid.points == 512
    assert len(config.solitons) == 2
    assert config.total_time == 1.0


def test_fd_presets_use_fd_parameters():
    for name in ('fig1', 'fig5', 'fig7', 'fig9'):
        config = parse_config(preset_path(name))
        assert config.scheme == 'fd'
        assert config.tau == 0.001
        assert config.grid.length == 30.0


def test_comments_and_blank_lines():
    config = parse_config_text(BASE)
    assert config.tau == 0.01


def test_output_dir():
    config = parse_config_text(BASE, output_dir='runs/fig2')
    assert config.output_dir == Path('runs/fig2')


def test_overrides_replace_file_values():
    config = parse_config_text(BASE, overrides={'tau': '0.005', 'scheme': 'leapfrog', 'L': '30',
                                                'solitons': '10:20;20:-20'})
    assert config.tau == 0.005
    assert config.scheme == 'fd'
    assert config.grid.length == 30.0
    assert config.step_count == 200


def test_overrides_supply_missing_key():
    text = BASE.replace('T=1\n', '')
    with pytest.raises(ConfigurationError) as exc_info:
        parse_config_text(text)
    assert exc_info.value.key == 'T'
    assert parse_config_text(text, overrides={'T': '0.5'}).step_count == 50


def test_optional_keys():
    config = parse_config_text(BASE + 'snapshot_stride=10\nsplitting=Strang\nnorm_integrand=abs\n')
    assert config.snapshot_stride == 10
    assert config.splitting == 'strang'
    assert config.norm_integrand == 'abs'


@pytest.mark.parametrize("extra, key", [
    ('colour=blue\n', 'colour'),
    ('tau=0.02\n', 'tau'),
    ('snapshot_stride=2.5\n', 'snapshot_stride'),
    ('splitting=ruth\n', 'splitting'),
])
def test_bad_entries_name_the_key(extra, key):
    with pytest.raises(ConfigurationError) as exc_info:
        parse_config_text(BASE + extra)
    assert exc_info.value.key == key


@pytest.mark.parametrize("old, new, key", [
    ('tau=0.01', 'tau=fast', 'tau'),
    ('tau=0.01', 'tau=0', 'tau'),
    ('N=512', 'N=500', 'N'),
    ('N=512', 'N=5e2', 'N'),
    ('L=64', 'L=-64', 'L'),
    ('scheme=splitstep', 'scheme=rk4', 'scheme'),
    ('solitons=8:20;18:-20', 'solitons=8:20;18:-20;30:0', 'solitons'),
    ('solitons=8:20;18:-20', 'solitons=80:20', 'solitons'),
    ('S=-0.1', 'S=', 'S'),
])
def test_invalid_values_name_the_key(old, new, key):
    with pytest.raises(ConfigurationError) as exc_info:
        parse_config_text(BASE.replace(old, new))
    assert exc_info.value.key == key


def test_line_without_equals():
    with pytest.raises(ConfigurationError) as exc_info:
        parse_config_text(BASE + 'oops\n', source='run.cfg')
    assert exc_info.value.key == 'run.cfg:10'


def test_parse_solitons():
    assert parse_solitons('8:20') == (SolitonSpec(8.0, 20.0),)
    assert parse_solitons(' 8 : 20 ; 18:-20 ;') == (SolitonSpec(8.0, 20.0), SolitonSpec(18.0, -20.0))


@pytest.mark.parametrize("value", ['', ';', '8', '8:fast'])
def test_parse_solitons_errors(value):
    with pytest.raises(ConfigurationError) as exc_info:
        parse_solitons(value)
    assert exc_info.value.key == 'solitons'


def test_unreadable_file(tmp_path):
    with pytest.raises(ConfigurationError) as exc_info:
        parse_config(tmp_path / 'missing.cfg')
    assert exc_info.value.key == 'config'


def test_resolve_config_path(tmp_path):
    assert resolve_config_path('fig1') == preset_path('fig1')
    own = tmp_path / 'own.cfg'
    own.write_text(BASE, encoding='utf-8')
    assert resolve_config_path(own) == own
    with pytest.raises(ConfigurationError):
        resolve_config_path(tmp_path / 'nothing.cfg')


def test_serialized_config_parses_back(tmp_path):
    config = parse_config_text(BASE, overrides={'tau': '0.003', 'snapshot_stride': '7'}, output_dir=tmp_path)
    assert parse_config_text(serialize_config(config), output_dir=tmp_path) == config
    path = write_config(config, tmp_path / 'resolved.cfg')
    assert parse_config(path, output_dir=tmp_path) == config
    assert 'tau=0.003\n' in path.read_text(encoding='utf-8')
