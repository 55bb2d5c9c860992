"""
Run configuration loading module

Parses `key=value` run files (with `#` comments) into RunConfig, applies command-line
overrides, resolves shipped presets and writes configurations back out
"""
from pathlib import Path
from typing import Dict, List, Mapping, Optional, Tuple, Union

from ..config import canonical_scheme, preset_path
from ..errors import ConfigurationError
from ..model.state import GridSpec, RunConfig, SaturationParam, SolitonSpec

REQUIRED_KEYS: Tuple[str, ...] = ('scheme', 'S', 'tau', 'T', 'L', 'N', 'solitons')
OPTIONAL_DEFAULTS: Dict[str, str] = {
    'snapshot_stride': '1',
    'splitting': 'lie',
    'norm_integrand': 'abs2',
}
KNOWN_KEYS: Tuple[str, ...] = REQUIRED_KEYS + tuple(OPTIONAL_DEFAULTS)

PathLike = Union[str, Path]


def _parse_float(key: str, value: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise ConfigurationError(key, f"expected a number, got {value!r}") from None


def _parse_int(key: str, value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ConfigurationError(key, f"expected an integer, got {value!r}") from None


def parse_solitons(value: str) -> Tuple[SolitonSpec, ...]:
    """
    Parse "offset:velocity;offset:velocity"

    Args:
        value: One or two semicolon-separated pairs (empty entries are ignored)

    Returns:
        Tuple of SolitonSpec
    """
    specs: List[SolitonSpec] = []
    for part in value.split(';'):
        part = part.strip()
        if not part:
            continue
        if ':' not in part:
            raise ConfigurationError('solitons', f"expected offset:velocity, got {part!r}")
        offset, velocity = part.split(':', 1)
        specs.append(SolitonSpec(
            offset=_parse_float('solitons', offset.strip()),
            velocity=_parse_float('solitons', velocity.strip()),
        ))
    if not specs:
        raise ConfigurationError('solitons', "no soliton given")
    return tuple(specs)


def _read_pairs(text: str, source: str) -> Dict[str, str]:
    pairs: Dict[str, str] = {}
    for line_number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if '=' not in line:
            raise ConfigurationError(f"{source}:{line_number}", f"expected key=value, got {raw.strip()!r}")
        key, value = line.split('=', 1)
        key = key.strip()
        if key not in KNOWN_KEYS:
            raise ConfigurationError(key, "unknown configuration key")
        if key in pairs:
            raise ConfigurationError(key, "given more than once")
        pairs[key] = value.strip()
    return pairs


def build_config(pairs: Mapping[str, str], output_dir: Optional[PathLike] = None) -> RunConfig:
    """
    RunConfig from string values (file contents merged with overrides)

    Raises:
        ConfigurationError: Missing/unknown key or invariant violation, naming the key
    """
    for key in pairs:
        if key not in KNOWN_KEYS:
            raise ConfigurationError(key, "unknown configuration key")
    for key in REQUIRED_KEYS:
        if key not in pairs or pairs[key] == '':
            raise ConfigurationError(key, "missing required key")
    values = {**OPTIONAL_DEFAULTS, **pairs}

    scheme = canonical_scheme(values['scheme'])
    if scheme is None:
        raise ConfigurationError('scheme', f"unknown scheme {values['scheme']!r}")

    grid = GridSpec(
        length=_parse_float('L', values['L']),
        points=_parse_int('N', values['N']),
    )
    return RunConfig(
        scheme=scheme,
        saturation=SaturationParam(_parse_float('S', values['S'])),
        tau=_parse_float('tau', values['tau']),
        total_time=_parse_float('T', values['T']),
        grid=grid,
        solitons=parse_solitons(values['solitons']),
        snapshot_stride=_parse_int('snapshot_stride', values['snapshot_stride']),
        output_dir=Path(output_dir) if output_dir is not None else Path('output'),
        splitting=values['splitting'].strip().lower(),
        norm_integrand=values['norm_integrand'].strip().lower(),
    )


def parse_config_text(
    text: str,
    overrides: Optional[Mapping[str, str]] = None,
    output_dir: Optional[PathLike] = None,
    source: str = '<config>',
) -> RunConfig:
    """parse_config for text already in memory"""
    pairs = _read_pairs(text, source)
    if overrides:
        pairs.update({k: str(v) for k, v in overrides.items()})
    return build_config(pairs, output_dir=output_dir)


def parse_config(
    path: PathLike,
    overrides: Optional[Mapping[str, str]] = None,
    output_dir: Optional[PathLike] = None,
) -> RunConfig:
    """
    Load a run configuration file

    Args:
        path: `key=value` file
        overrides: Values replacing (or supplying) file entries, e.g. from CLI flags
        output_dir: Output directory for the run (defaults to ./output)

    Returns:
        Validated RunConfig
    """
    path = Path(path)
    try:
        text = path.read_text(encoding='utf-8')
    except OSError as e:
        raise ConfigurationError('config', f"cannot read {path}: {e.strerror or e}") from e
    return parse_config_text(text, overrides=overrides, output_dir=output_dir, source=path.name)


def resolve_config_path(name_or_path: PathLike) -> Path:
    """
    Existing file, or shipped preset by name ('fig2', 'fig2.cfg')

    Raises:
        ConfigurationError: Neither a file nor a preset
    """
    path = Path(name_or_path)
    if path.is_file():
        return path
    preset = preset_path(str(name_or_path))
    if preset is not None:
        return preset
    raise ConfigurationError('config', f"no such file or preset: {name_or_path}")


def config_pairs(config: RunConfig) -> List[Tuple[str, str]]:
    """(key, value) strings for a configuration, in file order"""
    solitons = ';'.join(f"{float(spec.offset)!r}:{float(spec.velocity)!r}" for spec in config.solitons)
    return [
        ('scheme', config.scheme),
        ('S', repr(float(config.saturation.value))),
        ('tau', repr(float(config.tau))),
        ('T', repr(float(config.total_time))),
        ('L', repr(config.grid.length)),
        ('N', str(config.grid.points)),
        ('solitons', solitons),
        ('snapshot_stride', str(config.snapshot_stride)),
        ('splitting', config.splitting),
        ('norm_integrand', config.norm_integrand),
    ]


def serialize_config(config: RunConfig) -> str:
    """`key=value` text accepted by parse_config"""
    return ''.join(f"{key}={value}\n" for key, value in config_pairs(config))


def write_config(config: RunConfig, path: PathLike) -> Path:
    """Write serialize_config(config) to path"""
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(serialize_config(config))
    return path
