"""Test Module"""
# standard library
import os
import tempfile
from pathlib import Path

# keep test logs out of the user's home directory (read when copd_sim is imported)
os.environ.setdefault('COPD_HOME', str(Path(tempfile.gettempdir()) / 'copd-tests'))

# third-party
import pytest  # noqa: E402

# first-party
from copd_sim.config.config import validate_config  # noqa: E402
from copd_sim.model.sim_config_model import SimConfigModel  # noqa: E402

BASE_CONFIG = {
    'side': 10,
    'b': 1.9,
    'l': 0.6,
    'big_delta': 0.72,
    'small_delta': 0.8,
    'steps': 20,
    'tail_window': 5,
    'seeding.mode': 'unbiased',
    'rng_seed': 7,
    'replicates': 2,
    'snapshot_steps': [],
}


def make_config(**flat) -> SimConfigModel:
    """Return a validated small config with the given flat keys replaced."""
    data = dict(BASE_CONFIG)
    data.update(flat)
    return validate_config(data)


@pytest.fixture
def small_config() -> SimConfigModel:
    """Return a 10 x 10, 20 step config."""
    return make_config()
