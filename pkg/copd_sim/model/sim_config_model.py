"""COPD Simulator Module"""
# pylint: disable=no-self-argument
# standard library
import hashlib
import json

# third-party
from pydantic import BaseModel, Field, validator

# first-party
from copd_sim.exception import ConstraintViolation
from copd_sim.model.coev_params_model import CoevParamsModel
from copd_sim.model.game_params_model import GameParamsModel
from copd_sim.model.seeding_model import SeedingSpecModel

UINT64_MAX = 2**64 - 1


class SimConfigModel(BaseModel):
    """A complete, validated simulation configuration."""

    side: int = Field(..., description='Lattice side s (N = s * s).')
    game: GameParamsModel
    coev: CoevParamsModel
    steps: int = Field(..., description='Number of MC steps.')
    tail_window: int = Field(..., description='Final MC steps averaged for the outcome.')
    seeding: SeedingSpecModel = Field(default_factory=SeedingSpecModel)
    rng_seed: int = Field(0, description='Base seed (unsigned 64-bit).')
    replicates: int = Field(1, description='Independent runs per configuration.')
    snapshot_steps: list[int] = Field([], description='MC steps at which to keep the grid.')

    @validator('side')
    def side_minimum(cls, v):
        """Require side >= 3 so the eight Moore neighbors are distinct cells."""
        if v < 3:
            raise ConstraintViolation.bound('side', 'greater than or equal to', 3)
        return v

    @validator('steps', 'replicates')
    def positive(cls, v, field):
        """Require a positive count."""
        if v < 1:
            raise ConstraintViolation.bound(field.name, 'greater than or equal to', 1)
        return v

    @validator('tail_window')
    def tail_window_range(cls, v, values):
        """Require 1 <= tail_window <= steps."""
        if v < 1:
            raise ConstraintViolation.bound('tail_window', 'greater than or equal to', 1)
        steps = values.get('steps')
        if steps is not None and v > steps:
            raise ConstraintViolation.bound('tail_window', 'less than or equal to steps', steps)
        return v

    @validator('rng_seed')
    def rng_seed_range(cls, v):
        """Require an unsigned 64-bit seed."""
        if not 0 <= v <= UINT64_MAX:
            raise ConstraintViolation.bound('rng_seed', 'within', f'[0, {UINT64_MAX}]')
        return v

    @validator('snapshot_steps')
    def snapshot_steps_range(cls, v, values):
        """Require snapshot steps within [0, steps]; stored sorted and unique."""
        steps = values.get('steps')
        for step in v:
            if step < 0 or (steps is not None and step > steps):
                raise ConstraintViolation.bound('snapshot_steps', 'within', f'[0, {steps}]')
        return sorted(set(v))

    @property
    def n(self) -> int:
        """Return the population size N."""
        return self.side * self.side

    @property
    def digest(self) -> str:
        """Return a stable sha256 of the configuration."""
        payload = json.dumps(json.loads(self.json()), sort_keys=True)
        return hashlib.sha256(payload.encode('utf-8')).hexdigest()

    class Config:
        """DataModel Config"""

        allow_mutation = False
