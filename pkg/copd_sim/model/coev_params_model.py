"""COPD Simulator Module"""
# pylint: disable=no-self-argument
# third-party
from pydantic import BaseModel, Field, validator

# first-party
from copd_sim.exception import ConstraintViolation


class CoevParamsModel(BaseModel):
    """Link-weight coevolution parameters."""

    # small_delta is declared first so the big_delta validator can see it
    small_delta: float = Field(..., description='Weight heterogeneity bound (δ).')
    big_delta: float = Field(..., description='Per-update weight step (Δ).')

    @validator('small_delta')
    def small_delta_range(cls, v):
        """Require 0 <= δ <= 1."""
        if not v >= 0.0:
            raise ConstraintViolation.bound('small_delta', 'greater than or equal to', 0)
        if not v <= 1.0:
            raise ConstraintViolation.bound('small_delta', 'less than or equal to', 1)
        return v

    @validator('big_delta')
    def big_delta_range(cls, v, values):
        """Require 0 <= Δ <= δ."""
        if not v >= 0.0:
            raise ConstraintViolation.bound('big_delta', 'greater than or equal to', 0)
        small_delta = values.get('small_delta')
        if small_delta is not None and not v <= small_delta:
            raise ConstraintViolation.bound(
                'big_delta', 'less than or equal to small_delta', small_delta
            )
        return v

    @property
    def lower(self) -> float:
        """Return the lowest admissible weight (1 - δ)."""
        return 1.0 - self.small_delta

    @property
    def upper(self) -> float:
        """Return the highest admissible weight (1 + δ)."""
        return 1.0 + self.small_delta

    @property
    def ratio(self) -> float:
        """Return Δ/δ (0 for a static network)."""
        return self.big_delta / self.small_delta if self.small_delta > 0 else 0.0

    class Config:
        """DataModel Config"""

        allow_mutation = False
