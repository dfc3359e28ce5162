"""COPD Simulator Module"""

from .splitmix import SplitMix64, derive_seed, mix64
