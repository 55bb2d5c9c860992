"""
Field file module

Reads and writes snapshot files (one state, x,re,im rows), evolution matrices
(one |psi| row per emitted step) and diagnostics logs
"""
import csv
import re
from dataclasses import dataclass
from pathlib import Path
from typing import List, Sequence, Union

import numpy as np

from ..errors import OutputFormatError, SnapshotParseError
from ..model.state import DiagnosticsRecord, GridSpec, WaveState

SNAPSHOT_MAGIC = 'satnls-snapshot v1'
EVOLUTION_MAGIC = 'satnls-evolution v1'
DIAGNOSTICS_HEADER = ('step', 'time', 'norm', 'peak_amplitude', 'peak_index')

# 17 significant digits round-trip every double
FLOAT_FORMAT = '%.17g'

_SNAPSHOT_META = re.compile(r'^#\s*L=(\S+)\s+N=(\S+)\s+t=(\S+)\s*$')
_EVOLUTION_META = re.compile(
    r'^#\s*' + re.escape(EVOLUTION_MAGIC) + r'\s+rows=(\d+)\s+cols=(\d+)\s+L=(\S+)\s+tau=(\S+)\s*$'
)

PathLike = Union[str, Path]


def _fmt(value: float) -> str:
    return FLOAT_FORMAT % value


def write_snapshot(state: WaveState, path: PathLike) -> Path:
    """
    Write one state as `x,re,im` rows under a two-line header

    Args:
        state: State to write (finite)
        path: Output file

    Returns:
        The written path
    """
    path = Path(path)
    grid = state.grid
    header = f"{SNAPSHOT_MAGIC}\nL={_fmt(grid.length)} N={grid.points} t={_fmt(state.time)}"
    data = np.column_stack((grid.coordinates(), state.amplitudes.real, state.amplitudes.imag))
    np.savetxt(path, data, fmt=FLOAT_FORMAT, delimiter=',', newline='\n',
               header=header, comments='# ', encoding='utf-8')
    return path


def read_snapshot(path: PathLike) -> WaveState:
    """
    Read a snapshot file written by write_snapshot

    Raises:
        SnapshotParseError: Bad header, bad row (with its line number) or a row count
            different from the declared N
    """
    path = Path(path)
    lines = path.read_text(encoding='utf-8').split('\n')
    if not lines or lines[0].strip() != f"# {SNAPSHOT_MAGIC}":
        raise SnapshotParseError(1, f"expected '# {SNAPSHOT_MAGIC}'")
    if len(lines) < 2:
        raise SnapshotParseError(2, "missing 'L= N= t=' header")
    meta = _SNAPSHOT_META.match(lines[1].strip())
    if meta is None:
        raise SnapshotParseError(2, f"malformed header {lines[1]!r}")
    try:
        length = float(meta.group(1))
        points = int(meta.group(2))
        time = float(meta.group(3))
    except ValueError as e:
        raise SnapshotParseError(2, f"malformed header value: {e}") from e

    real: List[float] = []
    imag: List[float] = []
    for line_number, line in enumerate(lines[2:], start=3):
        if not line.strip():
            continue
        columns = line.split(',')
        if len(columns) != 3:
            raise SnapshotParseError(line_number, f"expected 3 columns (x,re,im), got {len(columns)}")
        try:
            _, re_part, im_part = (float(c) for c in columns)
        except ValueError as e:
            raise SnapshotParseError(line_number, f"not a number: {e}") from e
        real.append(re_part)
        imag.append(im_part)

    if len(real) != points:
        raise SnapshotParseError(None, f"header declares N={points} but file has {len(real)} data rows")
    grid = GridSpec(length=length, points=points)
    amplitudes = np.asarray(real) + 1j * np.asarray(imag)
    return WaveState(grid=grid, amplitudes=amplitudes, time=time)


@dataclass(frozen=True, eq=False)
class EvolutionMatrix:
    """Contents of an evolution file"""
    rows: np.ndarray  # shape (R, N)
    length: float
    tau: float


def write_evolution(rows: Sequence[np.ndarray], path: PathLike, grid: GridSpec, tau: float) -> Path:
    """
    Write |psi| rows (one per emitted step) as a comma-separated matrix

    Raises:
        OutputFormatError: For an empty sequence, ragged rows or rows not matching the grid
    """
    if len(rows) == 0:
        raise OutputFormatError("evolution needs at least one row")
    widths = {len(row) for row in rows}
    if len(widths) != 1:
        raise OutputFormatError(f"ragged evolution rows (lengths {sorted(widths)})")
    width = widths.pop()
    if width != grid.points:
        raise OutputFormatError(f"rows have {width} columns, grid has {grid.points} points")

    path = Path(path)
    matrix = np.vstack([np.asarray(row, dtype=np.float64) for row in rows])
    header = f"{EVOLUTION_MAGIC} rows={matrix.shape[0]} cols={matrix.shape[1]} L={_fmt(grid.length)} tau={_fmt(tau)}"
    np.savetxt(path, matrix, fmt=FLOAT_FORMAT, delimiter=',', newline='\n',
               header=header, comments='# ', encoding='utf-8')
    return path


def read_evolution(path: PathLike) -> EvolutionMatrix:
    """Read an evolution file; the declared shape must match the data"""
    path = Path(path)
    with open(path, encoding='utf-8') as f:
        first = f.readline().strip()
    meta = _EVOLUTION_META.match(first)
    if meta is None:
        raise SnapshotParseError(1, f"malformed evolution header {first!r}")
    rows, cols = int(meta.group(1)), int(meta.group(2))
    try:
        matrix = np.loadtxt(path, delimiter=',', comments='#', ndmin=2, encoding='utf-8')
    except ValueError as e:
        raise SnapshotParseError(None, f"malformed evolution data: {e}") from e
    if matrix.shape != (rows, cols):
        raise SnapshotParseError(None, f"header declares {rows}x{cols}, data is {matrix.shape[0]}x{matrix.shape[1]}")
    return EvolutionMatrix(rows=matrix, length=float(meta.group(3)), tau=float(meta.group(4)))


def write_diagnostics(records: Sequence[DiagnosticsRecord], path: PathLike) -> Path:
    """Write per-step diagnostics as CSV"""
    path = Path(path)
    with open(path, 'w', encoding='utf-8', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(DIAGNOSTICS_HEADER)
        for record in records:
            writer.writerow([
                record.step_index,
                _fmt(record.time),
                _fmt(record.norm),
                _fmt(record.peak_amplitude),
                record.peak_index,
            ])
    return path


def read_diagnostics(path: PathLike) -> List[DiagnosticsRecord]:
    """Read a diagnostics CSV written by write_diagnostics"""
    path = Path(path)
    with open(path, encoding='utf-8', newline='') as f:
        reader = csv.reader(f)
        header = next(reader, None)
        if header is None or tuple(header) != DIAGNOSTICS_HEADER:
            raise SnapshotParseError(1, f"expected header {','.join(DIAGNOSTICS_HEADER)}")
        records = []
        for row in reader:
            if not row:
                continue
            if len(row) != len(DIAGNOSTICS_HEADER):
                raise SnapshotParseError(reader.line_num, f"expected {len(DIAGNOSTICS_HEADER)} columns, got {len(row)}")
            try:
                records.append(DiagnosticsRecord(
                    step_index=int(row[0]),
                    time=float(row[1]),
                    norm=float(row[2]),
                    peak_amplitude=float(row[3]),
                    peak_index=int(row[4]),
                ))
            except ValueError as e:
                raise SnapshotParseError(reader.line_num, str(e)) from e
    return records
