"""COPD Simulator Module"""

# third-party
from pydantic import ValidationError

# first-party
from copd_sim.cli.cli_abc import CliABC
from copd_sim.config.config import constraint_violations
from copd_sim.exception import ConfigValidationError, ConstraintViolation
from copd_sim.model.coev_params_model import CoevParamsModel
from copd_sim.statespace.state_space import reachable_weights

CSV_HEADER = 'big_delta,small_delta,count,values'


class StatesCli(CliABC):
    """Count the link-weight states reachable from w=1."""

    @staticmethod
    def coev(big_delta: float, small_delta: float) -> CoevParamsModel:
        """Return validated (Δ, δ)."""
        try:
            return CoevParamsModel(small_delta=small_delta, big_delta=big_delta)
        except ValidationError as ex:
            raise ConfigValidationError(constraint_violations(ex)) from ex

    def pairs(
        self, big_deltas: list[float], small_deltas: list[float], curve_points: int | None
    ) -> list[CoevParamsModel]:
        """Return the (Δ, δ) pairs to count.

        With curve_points K every δ yields Δ = δ * i / K for i = 0..K. Otherwise the
        --big-delta and --small-delta values are paired in order; a single δ applies to
        every Δ.
        """
        if not small_deltas:
            raise ConfigValidationError(
                [ConstraintViolation('small_delta', 'at least one --small-delta is required')]
            )
        if curve_points is not None:
            if curve_points < 1:
                raise ConfigValidationError(
                    [ConstraintViolation.bound('curve_points', 'greater than or equal to', 1)]
                )
            return [
                self.coev(min(d * i / curve_points, d), d)
                for d in small_deltas
                for i in range(curve_points + 1)
            ]

        if len(small_deltas) == 1:
            small_deltas = small_deltas * len(big_deltas)
        if not big_deltas or len(big_deltas) != len(small_deltas):
            raise ConfigValidationError(
                [
                    ConstraintViolation(
                        'big_delta', 'give one --big-delta per --small-delta (or a single δ)'
                    )
                ]
            )
        return [self.coev(bd, sd) for bd, sd in zip(big_deltas, small_deltas)]

    def rows(self, pairs: list[CoevParamsModel]) -> list[str]:
        """Return one CSV line per pair."""
        lines = [CSV_HEADER]
        for coev in pairs:
            states = reachable_weights(coev)
            values = ' '.join(f'{v:.6f}' for v in states.values)
            lines.append(f'{coev.big_delta:g},{coev.small_delta:g},{states.count},{values}')
            self.log.debug(
                f'event=count-states, big_delta={coev.big_delta}, '
                f'small_delta={coev.small_delta}, count={states.count}'
            )
        return lines
