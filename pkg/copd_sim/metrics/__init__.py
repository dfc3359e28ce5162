"""COPD Simulator Module"""

from .export import SnapshotFormat, export_snapshot, parse_text_grid, write_timeseries_csv
from .fractions import aggregate_replicates, record_fractions, tail_average
