"""Test module for the XML run manifest"""

from lxml import etree as ET

from satnls import __version__
from satnls.diagnostics import ConservationReport
from satnls.io.manifest_writer import MANIFEST_NAME, build_manifest, read_manifest, write_manifest
from satnls.stability import NONLINEAR_CAVEAT, is_stable


def test_manifest_config_params(make_config):
    root = build_manifest(make_config())
    assert root.tag == 'run'
    assert root.get('tool') == 'satnls'
    assert root.get('version') == __version__
    params = {p.get('key'): p.text for p in root.find('config').findall('param')}
    assert params['scheme'] == 'splitstep'
    assert params['tau'] == '0.01'
    assert params['N'] == '512'
    assert params['solitons'] == '8.0:20.0;18.0:-20.0'


def test_manifest_without_preflight(make_config):
    root = build_manifest(make_config())
    assert root.find('preflight').get('applicable') == 'false'
    assert root.find('result') is None
    assert root.find('conservation') is None


def test_write_and_read_manifest(tmp_path, make_config):
    config = make_config(scheme='fd', tau=0.002, L=30.0, solitons=((10.0, 20.0), (20.0, -20.0)))
    preflight = is_stable(config.tau, config.grid.spacing, samples=8)
    conservation = ConservationReport(1.0, 1.5, 0.5, 0.5, 3)
    outcome = {'status': 'diverged', 'steps_taken': 3, 'divergence_step': 4}

    path = write_manifest(tmp_path, config, preflight=preflight, outcome=outcome, conservation=conservation)
    assert path == tmp_path / MANIFEST_NAME
    assert path.read_text(encoding='utf-8').startswith("<?xml version='1.0' encoding='UTF-8'?>")
    ET.parse(str(path))

    manifest = read_manifest(tmp_path)
    assert manifest['tool'] == 'satnls'
    assert manifest['config']['scheme'] == 'fd'
    assert manifest['config']['tau'] == '0.002'
    assert manifest['preflight']['applicable'] == 'true'
    assert manifest['preflight']['stable'] == 'false'
    assert manifest['preflight']['note'] == NONLINEAR_CAVEAT
    assert float(manifest['preflight']['threshold']) == preflight.threshold
    assert manifest['result'] == {'status': 'diverged', 'steps_taken': '3', 'divergence_step': '4'}
    assert manifest['conservation']['max_drift_step'] == '3'
    assert float(manifest['conservation']['final_norm']) == 1.5


def test_read_manifest_by_file_path(tmp_path, make_config):
    path = write_manifest(tmp_path, make_config())
    manifest = read_manifest(path)
    assert 'preflight' in manifest
    assert 'result' not in manifest
