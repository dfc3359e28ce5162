"""COPD Simulator Module"""
# standard library
from enum import IntEnum


class Strategy(IntEnum):
    """Agent strategy; the integer values are the stable serialized codes."""

    COOPERATOR = 0
    DEFECTOR = 1
    ABSTAINER = 2

    @property
    def code(self) -> str:
        """Return the single letter code (C, D or A)."""
        return 'CDA'[self.value]

    @classmethod
    def from_code(cls, code: str) -> 'Strategy':
        """Return the strategy for a single letter code."""
        try:
            return cls('CDA'.index(code))
        except ValueError as ex:
            raise ValueError(f'unknown strategy code "{code}"') from ex
