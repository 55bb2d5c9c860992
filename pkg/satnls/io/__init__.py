"""IO module"""
from .snapshot_io import (
    EvolutionMatrix,
    write_snapshot,
    read_snapshot,
    write_evolution,
    read_evolution,
    write_diagnostics,
    read_diagnostics,
)
from .config_loader import (
    parse_config,
    parse_config_text,
    parse_solitons,
    resolve_config_path,
    serialize_config,
    write_config,
)
from .manifest_writer import write_manifest, read_manifest
from .run_writer import RunWriter, RunOutputs

__all__ = [
    'EvolutionMatrix',
    'write_snapshot',
    'read_snapshot',
    'write_evolution',
    'read_evolution',
    'write_diagnostics',
    'read_diagnostics',
    'parse_config',
    'parse_config_text',
    'parse_solitons',
    'resolve_config_path',
    'serialize_config',
    'write_config',
    'write_manifest',
    'read_manifest',
    'RunWriter',
    'RunOutputs',
]
