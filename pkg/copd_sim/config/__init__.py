"""COPD Simulator Module"""

from .config import dump_config, load_config, resolve_config, to_flat, validate_config
from .profile import Profile, profile_defaults
