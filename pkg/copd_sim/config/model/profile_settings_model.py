"""COPD Simulator Module"""
# third-party
from pydantic import BaseSettings, Extra, Field


class ProfileSettingsModel(BaseSettings):
    """Model Definition"""

    copd_seed: int | None = Field(None, description='Fallback base seed.')

    class Config:
        """DataModel Config"""

        extra = Extra.ignore
        case_sensitive = False
