"""COPD Simulator Module"""
# standard library
import logging
import math
from collections import deque
from collections.abc import Iterable

# third-party
from pydantic import BaseModel, Field

# first-party
from copd_sim.exception import StateSpaceOverflow
from copd_sim.model.coev_params_model import CoevParamsModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])

DEDUP_TOLERANCE = 1e-9
STATE_CAP = 1_000_000


class WeightStateSetModel(BaseModel):
    """Link-weight values reachable from w=1."""

    values: list[float] = Field(..., description='Distinct reachable weights, ascending.')
    count: int


class _ValueIndex:
    """Tolerance-aware membership over buckets of width DEDUP_TOLERANCE.

    Kept values are more than DEDUP_TOLERANCE apart, so each bucket holds at most one and a
    match for w can only sit in w's bucket or the two next to it.
    """

    def __init__(self, values: Iterable[float] = ()):
        """Initialize instance properties."""
        self.buckets: dict[int, float] = {}
        for value in values:
            self.add(value)

    @staticmethod
    def _bucket(w: float) -> int:
        return math.floor(w / DEDUP_TOLERANCE)

    def add(self, w: float):
        """Store w."""
        self.buckets[self._bucket(w)] = w

    def __contains__(self, w: float) -> bool:
        """Return True when a stored value lies within DEDUP_TOLERANCE of w."""
        k = self._bucket(w)
        return any(
            abs(self.buckets.get(j, math.inf) - w) <= DEDUP_TOLERANCE for j in (k - 1, k, k + 1)
        )


def _moves(w: float, coev: CoevParamsModel) -> tuple[float, float]:
    """Return w ± Δ clamped into [1 - δ, 1 + δ]."""
    return (
        min(max(w + coev.big_delta, coev.lower), coev.upper),
        min(max(w - coev.big_delta, coev.lower), coev.upper),
    )


def reachable_weights(coev: CoevParamsModel, cap: int = STATE_CAP) -> WeightStateSetModel:
    """Breadth-first closure of {1.0} under the clamped ±Δ moves."""
    values = [1.0]
    seen = _ValueIndex(values)
    queue = deque(values)
    while queue:
        w = queue.popleft()
        for nxt in _moves(w, coev):
            if nxt not in seen:
                seen.add(nxt)
                values.append(nxt)
                queue.append(nxt)
                if len(values) > cap:
                    _logger.error(
                        f'event=state-space-overflow, big_delta={coev.big_delta}, '
                        f'small_delta={coev.small_delta}, cap={cap}'
                    )
                    raise StateSpaceOverflow(cap)

    values.sort()
    return WeightStateSetModel(values=values, count=len(values))


def count_states(coev: CoevParamsModel) -> int:
    """Return the number of reachable link-weight states."""
    return reachable_weights(coev).count


def is_closed(states: WeightStateSetModel, coev: CoevParamsModel) -> bool:
    """Return True when one more expansion of the set adds no new value."""
    seen = _ValueIndex(states.values)
    return all(nxt in seen for w in states.values for nxt in _moves(w, coev))
