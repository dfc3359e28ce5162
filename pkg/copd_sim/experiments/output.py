"""COPD Simulator Module"""
# standard library
import logging
import threading
from pathlib import Path

# first-party
from copd_sim.config.config import dump_config
from copd_sim.experiments.runner import RunTask
from copd_sim.metrics.export import (
    SnapshotFormat,
    write_manifest_csv,
    write_snapshot,
    write_summary_csv,
    write_timeseries_csv,
)
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.model.sweep_model import SweepRowModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class OutputTree:
    """Writes one experiment's files under a root directory.

    <root>/config.yml
    <root>/summary.csv
    <root>/manifest.csv
    <root>/point-NNNN/replicate-NN/timeseries.csv
    <root>/point-NNNN/replicate-NN/snapshots/step-NNNNNN.ppm|.txt
    """

    def __init__(self, root: Path):
        """Initialize instance properties."""
        self.root = root
        self.manifest: list[dict] = []
        self._lock = threading.Lock()

    @staticmethod
    def replicate_path(point: int, replicate: int) -> Path:
        """Return the replicate directory relative to the root."""
        return Path(f'point-{point:04d}') / f'replicate-{replicate:02d}'

    def write_config(self, config: SimConfigModel):
        """Write the resolved base config."""
        dump_config(config, self.root / 'config.yml')

    def write_result(self, task: RunTask, result: RunResultModel):
        """Write the time series and snapshots of one replicate run."""
        relative = self.replicate_path(task.point, task.replicate)
        directory = self.root / relative
        write_timeseries_csv(result, directory / 'timeseries.csv')
        for step, strategies in sorted(result.snapshots.items()):
            for fmt in SnapshotFormat:
                write_snapshot(
                    strategies, fmt, directory / 'snapshots' / f'step-{step:06d}.{fmt.value}'
                )
        with self._lock:
            self.manifest.append(
                {
                    'point': task.point,
                    'replicate': task.replicate,
                    'seed': result.seed,
                    'path': relative.as_posix(),
                }
            )

    def write_summary(self, rows: list[SweepRowModel]):
        """Write summary.csv and the manifest sorted by point and replicate."""
        write_summary_csv(rows, self.root / 'summary.csv')
        with self._lock:
            entries = sorted(self.manifest, key=lambda e: (e['point'], e['replicate']))
        write_manifest_csv(entries, self.root / 'manifest.csv')
        _logger.info(f'event=output-written, root={self.root}, runs={len(entries)}')
