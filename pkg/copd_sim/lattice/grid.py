"""COPD Simulator Module"""
# standard library
import logging

# third-party
import numpy as np

# first-party
from copd_sim.exception import InvalidSide, NotAdjacent
from copd_sim.lattice.topology import EDGES_PER_CELL, tables
from copd_sim.model.seeding_model import Placement, SeedingMode, SeedingSpecModel
from copd_sim.model.strategy import Strategy
from copd_sim.rng.splitmix import SplitMix64

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class Grid:
    """Periodic square lattice of agents with symmetric Moore-8 edge weights.

    strategies holds one int8 strategy code per cell (row-major) and weights one float64
    per undirected edge (4N edges, see topology.tables for the layout).
    """

    def __init__(self, side: int, small_delta: float = 1.0):
        """Initialize instance properties."""
        if side < 3:
            raise InvalidSide(side)
        self.side = side
        self.n = side * side
        self.small_delta = small_delta
        self.lower = 1.0 - small_delta
        self.upper = 1.0 + small_delta
        self.neighbor, self.edge = tables(side)
        self.strategies = np.zeros(self.n, dtype=np.int8)
        self.weights = np.ones(self.n * EDGES_PER_CELL, dtype=np.float64)

    def _direction(self, x: int, y: int) -> int:
        """Return k such that neighbors(x)[k] == y."""
        matches = np.flatnonzero(self.neighbor[x] == y)
        if matches.size == 0:
            raise NotAdjacent(x, y)
        return int(matches[0])

    def copy(self) -> 'Grid':
        """Return an independent copy."""
        grid = Grid(self.side, self.small_delta)
        grid.strategies[:] = self.strategies
        grid.weights[:] = self.weights
        return grid

    def counts(self) -> np.ndarray:
        """Return the number of cooperators, defectors and abstainers."""
        return np.bincount(self.strategies, minlength=3)

    def edge_weight(self, x: int, y: int) -> float:
        """Return the shared weight of the edge between adjacent cells x and y."""
        return float(self.weights[self.edge[x, self._direction(x, y)]])

    def neighbors(self, x: int) -> list[int]:
        """Return the 8 Moore neighbors of x in NW, N, NE, W, E, SW, S, SE order."""
        assert 0 <= x < self.n, f'cell {x} outside [0, {self.n})'  # nosec
        return [int(y) for y in self.neighbor[x]]

    def set_edge_weight(self, x: int, y: int, w: float):
        """Store w, clamped into [1 - δ, 1 + δ], on the edge between x and y."""
        self.weights[self.edge[x, self._direction(x, y)]] = min(max(w, self.lower), self.upper)

    def strategy(self, x: int) -> Strategy:
        """Return the strategy of cell x."""
        return Strategy(int(self.strategies[x]))

    def weights_in_bounds(self) -> bool:
        """Return True when every stored weight lies in [1 - δ, 1 + δ]."""
        return bool(np.all((self.weights >= self.lower) & (self.weights <= self.upper)))


def _fill_balanced(grid: Grid, cells: np.ndarray, rng: SplitMix64, defectors_placed: int = 0):
    """Fill cells with C and D so overall C/D counts differ by at most one.

    cells must already be in random order; the odd cell (if any) is settled by one draw.
    """
    total = cells.size + defectors_placed
    half = total // 2
    n_defectors = half
    if total % 2 == 1 and rng.next_float() < 0.5:
        n_defectors += 1
    n_defectors = min(max(n_defectors - defectors_placed, 0), cells.size)
    grid.strategies[cells[:n_defectors]] = Strategy.DEFECTOR
    grid.strategies[cells[n_defectors:]] = Strategy.COOPERATOR


def _seed_unbiased(grid: Grid, rng: SplitMix64):
    """Each cell independently uniform over {C, D, A}."""
    for x in range(grid.n):
        grid.strategies[x] = rng.next_below(3)


def _seed_biased(grid: Grid, fraction: float, rng: SplitMix64):
    """Exactly round(f * N) abstainers at random cells, remainder split C/D."""
    cells = np.arange(grid.n, dtype=np.int64)
    rng.shuffle(cells)
    n_abstainers = int(np.floor(fraction * grid.n + 0.5))
    grid.strategies[cells[:n_abstainers]] = Strategy.ABSTAINER
    _fill_balanced(grid, cells[n_abstainers:], rng)


def cluster_radius(side: int) -> int:
    """Return the defector-cluster radius, capped so the block holds at most half the cells."""
    radius = max(1, side // 8)
    while radius > 0 and (2 * radius + 1) ** 2 - 1 > (side * side) // 2:
        radius -= 1
    return radius


def _seed_single_abstainer(grid: Grid, placement: Placement, rng: SplitMix64):
    """One abstainer at the placement cell, everything else split C/D."""
    center = (grid.side // 2) * grid.side + grid.side // 2
    if placement == Placement.RANDOM_CELL:
        lone = rng.next_below(grid.n)
    else:
        lone = center

    cluster = np.empty(0, dtype=np.int64)
    if placement == Placement.DEFECTOR_CLUSTER:
        radius = cluster_radius(grid.side)
        row, col = divmod(center, grid.side)
        offsets = range(-radius, radius + 1)
        cluster = np.array(
            [
                ((row + dr) % grid.side) * grid.side + (col + dc) % grid.side
                for dr in offsets
                for dc in offsets
                if (dr, dc) != (0, 0)
            ],
            dtype=np.int64,
        )
        cluster = np.unique(cluster)
        grid.strategies[cluster] = Strategy.DEFECTOR

    mask = np.ones(grid.n, dtype=bool)
    mask[lone] = False
    mask[cluster] = False
    cells = np.flatnonzero(mask).astype(np.int64)
    rng.shuffle(cells)
    grid.strategies[lone] = Strategy.ABSTAINER
    _fill_balanced(grid, cells, rng, defectors_placed=cluster.size)


def _seed_pair(grid: Grid, rng: SplitMix64):
    """All abstainers except one random cooperator and one random defector."""
    grid.strategies[:] = Strategy.ABSTAINER
    cooperator = rng.next_below(grid.n)
    defector = rng.next_below(grid.n - 1)
    if defector >= cooperator:
        defector += 1
    grid.strategies[cooperator] = Strategy.COOPERATOR
    grid.strategies[defector] = Strategy.DEFECTOR


def build_lattice(
    side: int, seeding: SeedingSpecModel, rng: SplitMix64, small_delta: float = 1.0
) -> Grid:
    """Return a freshly seeded grid with every edge weight at 1.0."""
    grid = Grid(side, small_delta)
    match seeding.mode:
        case SeedingMode.UNBIASED:
            _seed_unbiased(grid, rng)
        case SeedingMode.BIASED_FRACTION:
            _seed_biased(grid, seeding.abstainer_fraction or 0.0, rng)
        case SeedingMode.SINGLE_ABSTAINER:
            _seed_single_abstainer(grid, seeding.placement or Placement.CENTER_CELL, rng)
        case SeedingMode.ALL_ABSTAINERS_EXCEPT_PAIR:
            _seed_pair(grid, rng)

    _logger.debug(
        f'event=build-lattice, side={side}, seeding={seeding.label}, '
        f'counts={grid.counts().tolist()}'
    )
    return grid
