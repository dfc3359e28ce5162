"""COPD Simulator Module"""
# pylint: disable=no-self-argument
# standard library
from enum import Enum

# third-party
from pydantic import BaseModel, Field, validator

# first-party
from copd_sim.exception import ConstraintViolation


class SeedingMode(str, Enum):
    """Initial population layouts."""

    UNBIASED = 'unbiased'
    BIASED_FRACTION = 'biased_fraction'
    SINGLE_ABSTAINER = 'single_abstainer'
    ALL_ABSTAINERS_EXCEPT_PAIR = 'all_abstainers_except_pair'


class Placement(str, Enum):
    """Where the lone abstainer of SINGLE_ABSTAINER seeding is placed."""

    RANDOM_CELL = 'random_cell'
    CENTER_CELL = 'center_cell'
    DEFECTOR_CLUSTER = 'defector_cluster'


class SeedingSpecModel(BaseModel):
    """Model Definition"""

    mode: SeedingMode = Field(SeedingMode.UNBIASED, description='The seeding mode.')
    abstainer_fraction: float | None = Field(
        None, description='Initial abstainer share (BIASED_FRACTION only).'
    )
    placement: Placement | None = Field(
        None, description='Placement of the lone abstainer (SINGLE_ABSTAINER only).'
    )

    @validator('abstainer_fraction', always=True)
    def abstainer_fraction_range(cls, v, values):
        """Require a fraction in [0, 1] when the mode needs one."""
        if values.get('mode') == SeedingMode.BIASED_FRACTION and v is None:
            raise ConstraintViolation(
                'seeding.abstainer_fraction',
                'seeding.abstainer_fraction is required for biased_fraction seeding',
            )
        if v is not None and not 0.0 <= v <= 1.0:
            raise ConstraintViolation.bound(
                'seeding.abstainer_fraction', 'within', '[0, 1]'
            )
        return v

    @validator('placement', always=True)
    def placement_required(cls, v, values):
        """Default the placement to the center cell for SINGLE_ABSTAINER seeding."""
        if values.get('mode') == SeedingMode.SINGLE_ABSTAINER and v is None:
            return Placement.CENTER_CELL
        return v

    @property
    def label(self) -> str:
        """Return the compact text used in the summary CSV seeding column."""
        if self.mode == SeedingMode.BIASED_FRACTION:
            return f'{self.mode.value}:{self.abstainer_fraction:g}'
        if self.mode == SeedingMode.SINGLE_ABSTAINER and self.placement is not None:
            return f'{self.mode.value}:{self.placement.value}'
        return self.mode.value

    class Config:
        """DataModel Config"""

        allow_mutation = False
