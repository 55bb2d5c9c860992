"""Domain model module"""
from .state import (
    GridSpec,
    WaveState,
    SolitonSpec,
    SaturationParam,
    RunConfig,
    DiagnosticsRecord,
    is_power_of_two,
)

__all__ = [
    'GridSpec',
    'WaveState',
    'SolitonSpec',
    'SaturationParam',
    'RunConfig',
    'DiagnosticsRecord',
    'is_power_of_two',
]
