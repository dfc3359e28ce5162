"""COPD Simulator Module"""

# first-party
from copd_sim.cli.cli_abc import CliABC
from copd_sim.config.config import to_flat
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.render.render import Render


class ValidateCli(CliABC):
    """Validate a config without running it."""

    def render(self, config: SimConfigModel):
        """Render the resolved config as a key/value table."""
        data = to_flat(config)
        data['n'] = config.n
        data['digest'] = config.digest
        Render.table.key_value('Resolved Config', data)

    @staticmethod
    def summary(config: SimConfigModel) -> str:
        """Return the one-line result summary."""
        return f'valid digest={config.digest}'
