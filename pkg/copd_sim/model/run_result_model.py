"""COPD Simulator Module"""

# third-party
import numpy as np
from pydantic import BaseModel, Field

# first-party
from copd_sim.model.fraction_model import FractionSampleModel, FractionsModel
from copd_sim.model.sim_config_model import SimConfigModel


class RunResultModel(BaseModel):
    """Outcome of one simulation run."""

    config: SimConfigModel
    config_digest: str
    seed: int = Field(..., description='The seed the run was started from.')
    series: list[FractionSampleModel] = Field([], description='One sample per MC step.')
    final_fractions: FractionsModel
    snapshots: dict[int, np.ndarray] = Field({}, description='Strategy arrays by MC step.')

    class Config:
        """DataModel Config"""

        arbitrary_types_allowed = True


class AggregateModel(BaseModel):
    """Cross-replicate mean and sample standard deviation of final fractions."""

    mean: FractionsModel
    sd: FractionsModel
    replicates: int
    config_digest: str
