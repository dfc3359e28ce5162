"""COPD Simulator Module"""

from .grid import Grid, build_lattice
