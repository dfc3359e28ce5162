"""COPD Simulator Module"""
# pylint: disable=no-self-argument
# standard library
import math
from enum import Enum

# third-party
from pydantic import BaseModel, Field, validator

# first-party
from copd_sim.exception import ConstraintViolation
from copd_sim.model.sim_config_model import SimConfigModel


class AxisName(str, Enum):
    """Parameters a sweep may vary."""

    B = 'b'
    L = 'l'
    BIG_DELTA = 'big_delta'
    SMALL_DELTA = 'small_delta'
    ABSTAINER_FRACTION = 'abstainer_fraction'
    RATIO = 'ratio'


class SweepAxisModel(BaseModel):
    """Model Definition"""

    name: AxisName
    values: list[float]

    @validator('values')
    def values_not_empty(cls, v):
        """Require at least one value per axis."""
        if not v:
            raise ConstraintViolation('axes', 'every sweep axis needs at least one value')
        return v


class SweepSpecModel(BaseModel):
    """A Cartesian grid of configurations derived from one base config."""

    axes: list[SweepAxisModel]
    base: SimConfigModel
    replicates_per_point: int = Field(1, description='Replicates run at every grid point.')

    @validator('axes')
    def axes_unique(cls, v):
        """Require each axis name at most once."""
        names = [a.name for a in v]
        if len(names) != len(set(names)):
            raise ConstraintViolation('axes', 'an axis name may only appear once')
        return v

    @validator('replicates_per_point')
    def replicates_positive(cls, v):
        """Require at least one replicate."""
        if v < 1:
            raise ConstraintViolation.bound('replicates_per_point', 'greater than or equal to', 1)
        return v

    @property
    def point_count(self) -> int:
        """Return the number of grid points."""
        return math.prod(len(a.values) for a in self.axes)


class SweepRowModel(BaseModel):
    """One summary CSV row (one grid point)."""

    b: float
    l: float
    big_delta: float
    small_delta: float
    seeding: str
    mean_rho_c: float = math.nan
    sd_rho_c: float = math.nan
    mean_rho_d: float = math.nan
    sd_rho_d: float = math.nan
    mean_rho_a: float = math.nan
    sd_rho_a: float = math.nan
    replicates: int = 0
    outcome: str = ''
    error: str = ''


class SweepPointModel(BaseModel):
    """One expanded grid point: its flat parameters and the config, or why it is invalid."""

    index: int
    flat: dict = Field(..., description='Flat config keys after the axis values are applied.')
    config: SimConfigModel | None = None
    error: str = ''

    def row(self, **kwargs) -> SweepRowModel:
        """Return a summary row carrying this point's parameters."""
        mode = self.flat.get('seeding.mode', 'unbiased')
        if self.config is not None:
            seeding = self.config.seeding.label
        elif mode == 'biased_fraction':
            seeding = f'{mode}:{self.flat.get("seeding.abstainer_fraction")}'
        else:
            seeding = str(mode)
        return SweepRowModel(
            b=self.flat['b'],
            l=self.flat['l'],
            big_delta=self.flat['big_delta'],
            small_delta=self.flat['small_delta'],
            seeding=seeding,
            error=kwargs.pop('error', self.error),
            **kwargs,
        )
