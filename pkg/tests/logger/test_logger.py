"""Test Module"""
# standard library
import gzip
import logging
from pathlib import Path

# third-party
import pytest

# first-party
from copd_sim.experiments import Simulation
from copd_sim.logger import RotatingFileHandlerCustom, TraceLogger


class TestTraceLogger:
    """Test Module"""

    def test_trace_level(self):
        """Test Case"""
        assert logging.getLevelName('TRACE') == logging.DEBUG - 5
        assert isinstance(logging.getLogger('copd_sim'), TraceLogger)

    def test_trace_records_caller(self, caplog: pytest.LogCaptureFixture):
        """Test Case"""
        caplog.set_level(logging.DEBUG - 5, logger='copd_sim')
        logging.getLogger('copd_sim').trace('event=trace-check')  # type: ignore
        record = next(r for r in caplog.records if r.getMessage() == 'event=trace-check')
        assert record.levelname == 'TRACE'
        assert record.funcName == 'test_trace_records_caller'

    def test_mc_step_trace(self, caplog: pytest.LogCaptureFixture, small_config):
        """Test Case"""
        caplog.set_level(logging.DEBUG - 5, logger='copd_sim')
        Simulation(small_config).run(3)
        steps = [r.getMessage() for r in caplog.records if 'event=mc-step' in r.getMessage()]
        assert len(steps) == 3
        assert 'step=3' in steps[-1]

    def test_trace_disabled_above_level(self, caplog: pytest.LogCaptureFixture):
        """Test Case"""
        caplog.set_level(logging.INFO, logger='copd_sim')
        logging.getLogger('copd_sim').trace('event=hidden')  # type: ignore
        assert not [r for r in caplog.records if r.getMessage() == 'event=hidden']


class TestRotatingFileHandlerCustom:
    """Test Module"""

    def test_creates_directory_and_gzips(self, tmp_path: Path):
        """Test Case"""
        filename = tmp_path / 'nested' / 'copd.log'
        handler = RotatingFileHandlerCustom(filename, maxBytes=200, backupCount=2)
        logger = logging.getLogger('copd-rotation-test')
        logger.propagate = False
        logger.addHandler(handler)
        try:
            for i in range(50):
                logger.warning(f'event=rotation-check, line={i}')
        finally:
            logger.removeHandler(handler)
            handler.close()

        backup = filename.with_name('copd.log.1.gz')
        assert backup.is_file()
        with gzip.open(backup, 'rt') as fh:
            assert 'event=rotation-check' in fh.read()
