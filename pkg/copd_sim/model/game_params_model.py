"""COPD Simulator Module"""
# pylint: disable=no-self-argument
# third-party
from pydantic import BaseModel, Field, validator

# first-party
from copd_sim.exception import ConstraintViolation


class GameParamsModel(BaseModel):
    """Optional Prisoner's Dilemma payoffs in the normalized weak form (R=1, P=S=0)."""

    b: float = Field(..., description='Temptation to defect (T).')
    l: float = Field(..., description="Loner's payoff (L), paid to both players.")

    @validator('b')
    def b_range(cls, v):
        """Keep the dilemma: 1 < b < 2."""
        if not v > 1.0:
            raise ConstraintViolation.bound('b', 'greater than', 1)
        if not v < 2.0:
            raise ConstraintViolation.bound('b', 'less than', 2)
        return v

    @validator('l')
    def l_range(cls, v):
        """Allow 0 <= l < 1 (l=0 is the CPD reduction)."""
        if not v >= 0.0:
            raise ConstraintViolation.bound('l', 'greater than or equal to', 0)
        if not v < 1.0:
            raise ConstraintViolation.bound('l', 'less than', 1)
        return v

    @property
    def R(self) -> float:
        """Return the reward for mutual cooperation."""
        return 1.0

    @property
    def P(self) -> float:
        """Return the punishment for mutual defection."""
        return 0.0

    @property
    def S(self) -> float:
        """Return the sucker's payoff."""
        return 0.0

    @property
    def T(self) -> float:
        """Return the temptation to defect."""
        return self.b

    class Config:
        """DataModel Config"""

        allow_mutation = False
