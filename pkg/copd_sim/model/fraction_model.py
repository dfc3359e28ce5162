"""COPD Simulator Module"""

# third-party
from pydantic import BaseModel, Field


class FractionsModel(BaseModel):
    """Strategy fractions of a population."""

    rho_c: float = Field(..., description='Fraction of cooperators.')
    rho_d: float = Field(..., description='Fraction of defectors.')
    rho_a: float = Field(..., description='Fraction of abstainers.')

    def as_tuple(self) -> tuple[float, float, float]:
        """Return (rho_c, rho_d, rho_a)."""
        return (self.rho_c, self.rho_d, self.rho_a)


class FractionSampleModel(FractionsModel):
    """Strategy fractions measured after one MC step."""

    step: int = Field(..., description='The MC step (0 is the seeded grid).')
    mean_w: float = Field(1.0, description='Mean edge weight over all 4N edges.')
