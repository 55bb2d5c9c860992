"""
Run manifest module

Writes the XML `manifest` file describing a run: resolved configuration, tool version,
stability preflight and outcome. read_manifest parses it back into plain dictionaries.
"""
from pathlib import Path
from typing import Any, Dict, Optional, Union

from lxml import etree as ET

from .. import __version__
from ..diagnostics import ConservationReport
from ..model.state import RunConfig
from ..stability import StabilityReport
from .config_loader import config_pairs

MANIFEST_NAME = 'manifest'

PathLike = Union[str, Path]


def _fmt(value: float) -> str:
    return repr(float(value))


def build_manifest(
    config: RunConfig,
    preflight: Optional[StabilityReport] = None,
    outcome: Optional[Dict[str, Any]] = None,
    conservation: Optional[ConservationReport] = None,
) -> ET.Element:
    """Manifest element tree for a run"""
    root = ET.Element('run', tool='satnls', version=__version__)

    config_el = ET.SubElement(root, 'config')
    for key, value in config_pairs(config):
        param = ET.SubElement(config_el, 'param', key=key)
        param.text = value

    if preflight is None:
        # split-step runs have no stability restriction
        ET.SubElement(root, 'preflight', applicable='false')
    else:
        ET.SubElement(
            root, 'preflight',
            applicable='true',
            stable='true' if preflight.stable else 'false',
            tau=_fmt(preflight.tau),
            h=_fmt(preflight.h),
            threshold=_fmt(preflight.threshold),
            worst_beta=_fmt(preflight.worst_beta),
            worst_magnitude=_fmt(preflight.worst_magnitude),
            note=preflight.note,
        )

    if outcome is not None:
        ET.SubElement(root, 'result', {key: str(value) for key, value in outcome.items()})

    if conservation is not None:
        ET.SubElement(
            root, 'conservation',
            initial_norm=_fmt(conservation.initial_norm),
            final_norm=_fmt(conservation.final_norm),
            final_drift=_fmt(conservation.final_drift),
            max_drift=_fmt(conservation.max_drift),
            max_drift_step=str(conservation.max_drift_step),
        )
    return root


def write_manifest(
    output_dir: PathLike,
    config: RunConfig,
    preflight: Optional[StabilityReport] = None,
    outcome: Optional[Dict[str, Any]] = None,
    conservation: Optional[ConservationReport] = None,
) -> Path:
    """
    Write `manifest` into output_dir

    Returns:
        Path of the written manifest
    """
    path = Path(output_dir) / MANIFEST_NAME
    root = build_manifest(config, preflight=preflight, outcome=outcome, conservation=conservation)
    ET.ElementTree(root).write(str(path), xml_declaration=True, encoding='UTF-8', pretty_print=True)
    return path


def read_manifest(path: PathLike) -> Dict[str, Any]:
    """
    Parse a manifest

    Returns:
        {'tool', 'version', 'config': {key: value}, 'preflight': {...}, 'result': {...},
         'conservation': {...}} with attribute values as strings
    """
    path = Path(path)
    if path.is_dir():
        path = path / MANIFEST_NAME
    root = ET.parse(str(path)).getroot()
    manifest: Dict[str, Any] = {
        'tool': root.get('tool'),
        'version': root.get('version'),
        'config': {},
    }
    config_el = root.find('config')
    if config_el is not None:
        manifest['config'] = {param.get('key'): (param.text or '') for param in config_el.findall('param')}
    for tag in ('preflight', 'result', 'conservation'):
        element = root.find(tag)
        if element is not None:
            manifest[tag] = dict(element.attrib)
    return manifest
