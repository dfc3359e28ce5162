"""COPD Simulator Module"""

# third-party
import numpy as np

# first-party
from copd_sim.dynamics import kernel
from copd_sim.lattice.grid import Grid
from copd_sim.model.coev_params_model import CoevParamsModel
from copd_sim.model.dynamics_model import AdoptionRecordModel, UtilityViewModel
from copd_sim.model.game_params_model import GameParamsModel
from copd_sim.model.strategy import Strategy
from copd_sim.rng.splitmix import SplitMix64


def payoff(s_x: Strategy, s_y: Strategy, game: GameParamsModel) -> float:
    """Return the row player's payoff for one interaction."""
    return float(kernel.payoff(int(s_x), int(s_y), game.b, game.l))


def utility(grid: Grid, x: int, y: int, game: GameParamsModel) -> float:
    """Return u_xy = w_xy * P_xy for adjacent x and y."""
    return grid.edge_weight(x, y) * payoff(grid.strategy(x), grid.strategy(y), game)


def accumulated_utility(grid: Grid, x: int, game: GameParamsModel) -> UtilityViewModel:
    """Return the per-neighbor utilities of x, their total and their mean."""
    per_neighbor = np.empty(8, dtype=np.float64)
    total = kernel.fill_utilities(
        grid.strategies, grid.weights, grid.neighbor, grid.edge, x, game.b, game.l, per_neighbor
    )
    return UtilityViewModel(per_neighbor=per_neighbor.tolist(), total=total, mean=total / 8.0)


def update_link_weights(grid: Grid, x: int, game: GameParamsModel, coev: CoevParamsModel):
    """Adapt the 8 edge weights of x against its mean utility."""
    kernel.update_link_weights(
        grid.strategies,
        grid.weights,
        grid.neighbor,
        grid.edge,
        x,
        game.b,
        game.l,
        coev.big_delta,
        grid.lower,
        grid.upper,
        np.empty(8, dtype=np.float64),
    )


def attempt_strategy_adoption(
    grid: Grid, x: int, game: GameParamsModel, rng: SplitMix64
) -> AdoptionRecordModel:
    """Let x imitate one random neighbor with the utility-difference probability."""
    adopted, source, probability = kernel.attempt_strategy_adoption(
        grid.strategies, grid.weights, grid.neighbor, grid.edge, x, game.b, game.l, rng.state
    )
    return AdoptionRecordModel(adopted=adopted, source=source, probability=probability)


def elementary_step(
    grid: Grid, game: GameParamsModel, coev: CoevParamsModel, rng: SplitMix64
) -> int:
    """Run one elementary update and return the selected agent."""
    return int(
        kernel.elementary_step(
            grid.strategies,
            grid.weights,
            grid.neighbor,
            grid.edge,
            game.b,
            game.l,
            coev.big_delta,
            grid.lower,
            grid.upper,
            rng.state,
            np.empty(8, dtype=np.float64),
        )
    )


def mc_step(grid: Grid, game: GameParamsModel, coev: CoevParamsModel, rng: SplitMix64):
    """Run one Monte Carlo step (N elementary updates)."""
    kernel.mc_step(
        grid.strategies,
        grid.weights,
        grid.neighbor,
        grid.edge,
        game.b,
        game.l,
        coev.big_delta,
        grid.lower,
        grid.upper,
        rng.state,
    )
