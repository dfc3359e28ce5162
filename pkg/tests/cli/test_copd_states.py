"""Test Module"""
# third-party
from click.testing import Result
from typer.testing import CliRunner

# first-party
from copd_sim.cli.cli import app

# get instance of typer CliRunner for test case
runner = CliRunner()


class TestCopdStates:
    """Test Module"""

    @staticmethod
    def _run_command(args: list[str]) -> Result:
        """Test Case"""
        result = runner.invoke(app, ['states', *args])
        return result

    @staticmethod
    def _rows(result: Result) -> list[str]:
        """Return the CSV lines of the output."""
        return [line for line in result.output.splitlines() if line[:1].isdigit()]

    def test_seven_states(self):
        """Test Case"""
        result = self._run_command(['--big-delta', '0.2', '--small-delta', '0.3'])
        assert result.exit_code == 0, result.output
        assert 'big_delta,small_delta,count,values' in result.output
        assert self._rows(result) == [
            '0.2,0.3,7,0.700000 0.800000 0.900000 1.000000 1.100000 1.200000 1.300000'
        ]

    def test_single_small_delta_applies_to_every_big_delta(self):
        """Test Case"""
        result = self._run_command(
            ['--big-delta', '0.72', '--big-delta', '0.8', '--small-delta', '0.8']
        )
        assert result.exit_code == 0, result.output
        rows = self._rows(result)
        assert len(rows) == 2
        assert rows[1].startswith('0.8,0.8,3,')

    def test_curve_points(self):
        """Test Case"""
        result = self._run_command(['--small-delta', '0.8', '--curve-points', '4'])
        assert result.exit_code == 0, result.output
        rows = self._rows(result)
        assert len(rows) == 5
        assert rows[0] == '0,0.8,1,1.000000'
        assert rows[-1].startswith('0.8,0.8,3,')

    def test_mismatched_pairs(self):
        """Test Case"""
        result = self._run_command(
            ['--big-delta', '0.1', '--big-delta', '0.2']
            + ['--small-delta', '0.3', '--small-delta', '0.4', '--small-delta', '0.5']
        )
        assert result.exit_code == 1, result.output

    def test_big_delta_above_small_delta(self):
        """Test Case"""
        result = self._run_command(['--big-delta', '0.9', '--small-delta', '0.8'])
        assert result.exit_code == 1, result.output
        assert 'big_delta must be' in result.output
