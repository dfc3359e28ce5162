"""COPD Simulator Module"""

from .classify import classify_fractions, classify_outcome
from .output import OutputTree
from .recipes import Recipe, build_recipe
from .replicates import run_replicates
from .simulation import Simulation, run_simulation
from .sweep import expand_points, run_sweep
