"""COPD Simulator Module"""
# standard library
import logging
import math
from enum import Enum
from pathlib import Path

# third-party
import numpy as np
import pandas as pd

# first-party
from copd_sim.exception import OutputError
from copd_sim.lattice.grid import Grid
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sweep_model import SweepRowModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])

# cooperators blue, defectors red, abstainers green
PALETTE = np.array([[0, 0, 255], [255, 0, 0], [0, 255, 0]], dtype=np.uint8)
LETTERS = np.array(['C', 'D', 'A'])
TIMESERIES_COLUMNS = ['step', 'rho_c', 'rho_d', 'rho_a', 'mean_w']
SUMMARY_COLUMNS = list(SweepRowModel.__fields__)


class SnapshotFormat(str, Enum):
    """Snapshot encodings."""

    TEXT_GRID = 'txt'
    PORTABLE_PIXMAP = 'ppm'


def _as_square(grid: Grid | np.ndarray) -> np.ndarray:
    """Return the strategy codes as a side x side array."""
    strategies = grid.strategies if isinstance(grid, Grid) else np.asarray(grid)
    side = math.isqrt(strategies.size)
    return strategies.reshape(side, side)


def export_snapshot(grid: Grid | np.ndarray, fmt: SnapshotFormat) -> bytes:
    """Encode the strategy layout as a text grid or a binary P6 pixmap."""
    square = _as_square(grid)
    side = square.shape[0]
    if fmt == SnapshotFormat.PORTABLE_PIXMAP:
        header = f'P6\n{side} {side}\n255\n'.encode('ascii')
        return header + PALETTE[square].tobytes()
    lines = [''.join(row) for row in LETTERS[square]]
    return ('\n'.join(lines) + '\n').encode('ascii')


def parse_text_grid(data: bytes | str) -> np.ndarray:
    """Return the flat int8 strategy array of a text-grid snapshot."""
    text = data.decode('ascii') if isinstance(data, bytes) else data
    codes = [('CDA'.index(ch)) for line in text.splitlines() for ch in line.strip()]
    return np.array(codes, dtype=np.int8)


def _write(path: Path, content: bytes | pd.DataFrame):
    """Write bytes or a DataFrame, surfacing failures with the path."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        if isinstance(content, pd.DataFrame):
            content.to_csv(path, index=False, float_format='%.6f', lineterminator='\n')
        else:
            path.write_bytes(content)
    except OSError as ex:
        raise OutputError(path, ex) from ex
    _logger.debug(f'event=write-file, path={path}')


def write_snapshot(grid: Grid | np.ndarray, fmt: SnapshotFormat, destination: Path):
    """Write one snapshot file."""
    _write(destination, export_snapshot(grid, fmt))


def timeseries_frame(result: RunResultModel) -> pd.DataFrame:
    """Return the per-step fractions as a DataFrame."""
    return pd.DataFrame(
        [[s.step, s.rho_c, s.rho_d, s.rho_a, s.mean_w] for s in result.series],
        columns=TIMESERIES_COLUMNS,
    ).astype({'step': 'int64'})


def write_timeseries_csv(result: RunResultModel, destination: Path):
    """Write step,rho_c,rho_d,rho_a,mean_w with six fractional digits."""
    _write(destination, timeseries_frame(result))


def write_summary_csv(rows: list[SweepRowModel], destination: Path):
    """Write one aggregate row per sweep point."""
    frame = pd.DataFrame([row.dict() for row in rows], columns=SUMMARY_COLUMNS)
    _write(destination, frame)


def write_manifest_csv(entries: list[dict], destination: Path):
    """Write the point,replicate,seed,path provenance table."""
    frame = pd.DataFrame(entries, columns=['point', 'replicate', 'seed', 'path'])
    # seeds are unsigned 64-bit; keep them exact as text
    frame['seed'] = frame['seed'].astype(str)
    _write(destination, frame)
