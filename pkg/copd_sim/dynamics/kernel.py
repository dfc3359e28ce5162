"""COPD Simulator Module

Compiled update kernels. All functions work on raw arrays:

* strategies - int8[N], codes 0=C, 1=D, 2=A
* weights - float64[4N], one value per undirected edge
* neighbor, edge - int64[N, 8] tables from lattice.topology
* state - uint64[1] splitmix64 state

Every random draw goes through rng.splitmix so the draw order is fixed: one draw for the
focal agent, one for the compared neighbor, and one Bernoulli draw only when the
neighbor's accumulated utility is larger.
"""
# third-party
import numpy as np
from numba import njit

# first-party
from copd_sim.rng.splitmix import next_below, next_float

COOPERATOR = 0
DEFECTOR = 1
ABSTAINER = 2

# absolute tolerance of the three-way comparison in the link-weight rule
EPSILON = 1e-12


@njit(cache=True, nogil=True)
def payoff(s_x: int, s_y: int, b: float, l: float) -> float:
    """Return the row player's payoff (R=1, P=S=0, T=b, L=l)."""
    if s_x == ABSTAINER or s_y == ABSTAINER:
        return l
    if s_y == DEFECTOR:
        return 0.0
    if s_x == COOPERATOR:
        return 1.0
    return b


@njit(cache=True, nogil=True)
def fill_utilities(strategies, weights, neighbor, edge, x, b, l, out) -> float:
    """Write u_xy for the 8 neighbors into out and return their left-to-right sum."""
    s_x = strategies[x]
    total = 0.0
    for k in range(8):
        u = weights[edge[x, k]] * payoff(s_x, strategies[neighbor[x, k]], b, l)
        out[k] = u
        total += u
    return total


@njit(cache=True, nogil=True)
def accumulated_utility(strategies, weights, neighbor, edge, x, b, l) -> float:
    """Return U_x with the same summation order as fill_utilities."""
    s_x = strategies[x]
    total = 0.0
    for k in range(8):
        total += weights[edge[x, k]] * payoff(s_x, strategies[neighbor[x, k]], b, l)
    return total


@njit(cache=True, nogil=True)
def update_link_weights(
    strategies, weights, neighbor, edge, x, b, l, big_delta, lower, upper, scratch
):
    """Step each of x's 8 edges by ±Δ against one utility snapshot, clamped to bounds."""
    mean = fill_utilities(strategies, weights, neighbor, edge, x, b, l, scratch) / 8.0
    for k in range(8):
        u = scratch[k]
        if u > mean + EPSILON:
            w = weights[edge[x, k]] + big_delta
        elif u < mean - EPSILON:
            w = weights[edge[x, k]] - big_delta
        else:
            continue
        weights[edge[x, k]] = min(max(w, lower), upper)


@njit(cache=True, nogil=True)
def attempt_strategy_adoption(strategies, weights, neighbor, edge, x, b, l, state):
    """Compare x against one random neighbor and maybe copy its strategy.

    Returns (adopted, neighbor cell, probability).
    """
    u_x = accumulated_utility(strategies, weights, neighbor, edge, x, b, l)
    y = neighbor[x, next_below(state, 8)]
    u_y = accumulated_utility(strategies, weights, neighbor, edge, y, b, l)
    if u_y > u_x:
        # normalizer 8(T - P) with T=b, P=0
        p = min(max((u_y - u_x) / (8.0 * b), 0.0), 1.0)
        if next_float(state) < p:
            strategies[x] = strategies[y]
            return True, y, p
        return False, y, p
    return False, y, 0.0


@njit(cache=True, nogil=True)
def elementary_step(
    strategies, weights, neighbor, edge, b, l, big_delta, lower, upper, state, scratch
) -> int:
    """Pick a random agent, adapt its links, then let it imitate; return the agent."""
    x = next_below(state, strategies.shape[0])
    update_link_weights(
        strategies, weights, neighbor, edge, x, b, l, big_delta, lower, upper, scratch
    )
    attempt_strategy_adoption(strategies, weights, neighbor, edge, x, b, l, state)
    return x


@njit(cache=True, nogil=True)
def mc_step(strategies, weights, neighbor, edge, b, l, big_delta, lower, upper, state):
    """Run N elementary steps (one Monte Carlo step)."""
    scratch = np.empty(8, dtype=np.float64)
    for _ in range(strategies.shape[0]):
        elementary_step(
            strategies, weights, neighbor, edge, b, l, big_delta, lower, upper, state, scratch
        )
