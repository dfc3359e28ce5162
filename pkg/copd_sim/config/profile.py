"""COPD Simulator Module"""
# standard library
from enum import Enum


class Profile(str, Enum):
    """Named default sets."""

    DESK = 'desk'
    PAPER = 'paper'


# defaults shared by both profiles: the headline configuration
_COMMON = {
    'b': 1.9,
    'l': 0.6,
    'big_delta': 0.72,
    'small_delta': 0.8,
    'seeding.mode': 'unbiased',
    'rng_seed': 0,
    'snapshot_steps': [],
}

PROFILES: dict[Profile, dict] = {
    Profile.DESK: {
        'side': 50,
        'steps': 20_000,
        'tail_window': 1_000,
        'replicates': 5,
        **_COMMON,
    },
    Profile.PAPER: {
        'side': 102,
        'steps': 100_000,
        'tail_window': 1_000,
        'replicates': 10,
        **_COMMON,
    },
}


def profile_defaults(profile: Profile | str) -> dict:
    """Return a fresh flat copy of the profile defaults."""
    defaults = PROFILES[Profile(profile)]
    return {k: (list(v) if isinstance(v, list) else v) for k, v in defaults.items()}
