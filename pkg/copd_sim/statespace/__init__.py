"""COPD Simulator Module"""

from .state_space import WeightStateSetModel, count_states, is_closed, reachable_weights
