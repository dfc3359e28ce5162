"""COPD Simulator Module"""

# third-party
from pydantic import BaseModel, Field


class UtilityViewModel(BaseModel):
    """Per-neighbor utilities of one agent plus their sum and mean."""

    per_neighbor: list[float] = Field(..., description='u_xy in neighbor order.')
    total: float = Field(..., description='U_x, summed left to right in neighbor order.')
    mean: float = Field(..., description='U_x / 8.')


class AdoptionRecordModel(BaseModel):
    """Result of one imitation attempt."""

    adopted: bool
    source: int = Field(..., description='The neighbor that was compared against.')
    probability: float = Field(..., description='Adoption probability (0 if U_y <= U_x).')
