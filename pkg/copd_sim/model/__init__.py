"""COPD Simulator Module"""

from .coev_params_model import CoevParamsModel
from .dynamics_model import AdoptionRecordModel, UtilityViewModel
from .fraction_model import FractionSampleModel, FractionsModel
from .game_params_model import GameParamsModel
from .run_result_model import AggregateModel, RunResultModel
from .seeding_model import Placement, SeedingMode, SeedingSpecModel
from .sim_config_model import SimConfigModel
from .strategy import Strategy
from .sweep_model import (
    AxisName,
    SweepAxisModel,
    SweepPointModel,
    SweepRowModel,
    SweepSpecModel,
)
