"""COPD Simulator Module"""
# standard library
import logging
from abc import ABC
from pathlib import Path

# third-party
import typer

# first-party
from copd_sim.config.config import dump_config, resolve_config
from copd_sim.config.profile import Profile
from copd_sim.exception import ConfigValidationError
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.render.render import Render

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class CliABC(ABC):
    """Base Class for copd command line tools."""

    def __init__(self):
        """Initialize instance properties."""
        self.accent = 'dark_orange'
        self.exit_code = 0
        self.log = _logger

    def resolve(
        self,
        profile: Profile,
        config_file: Path | None,
        overrides: dict,
        print_config: bool = False,
    ) -> SimConfigModel:
        """Return the resolved config, echoing it to stdout when requested."""
        config = resolve_config(profile, config_file, overrides)
        self.log.info(f'event=config-resolved, digest={config.digest}')
        if print_config:
            typer.echo(dump_config(config), nl=False)
        return config

    def render_violations(self, ex: ConfigValidationError):
        """Render every violated constraint and exit 1."""
        self.log.error(f'event=config-invalid, violations={len(ex.violations)}')
        Render.panel.list('Validation Errors', [v.message for v in ex.violations], 'bold red')
        Render.panel.failure('The configuration is invalid.', exit_code=1)
