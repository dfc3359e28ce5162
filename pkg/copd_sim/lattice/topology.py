"""COPD Simulator Module"""
# standard library
from functools import lru_cache

# third-party
import numpy as np

# Moore offsets (row, col) in the fixed neighbor order NW, N, NE, W, E, SW, S, SE
OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))
DIRECTIONS = ('NW', 'N', 'NE', 'W', 'E', 'SW', 'S', 'SE')

# edge slots owned by a cell: its E, S, SE and SW edges
OWNED_SLOTS = {(0, 1): 0, (1, 0): 1, (1, 1): 2, (1, -1): 3}
EDGES_PER_CELL = len(OWNED_SLOTS)


@lru_cache(maxsize=16)
def tables(side: int) -> tuple[np.ndarray, np.ndarray]:
    """Return the (N, 8) neighbor and edge-index tables of a side x side torus.

    neighbor[x, k] is the k-th Moore neighbor of x in OFFSETS order and edge[x, k] is the
    index into the flat 4N weight array of the undirected edge between them. The edge
    towards an owned direction lives at x * 4 + slot; any other edge lives with the
    neighbor, under the slot of the opposite direction. Both arrays are read-only and
    shared between grids of the same side.
    """
    n = side * side
    index = np.arange(n, dtype=np.int64)
    rows, cols = np.divmod(index, side)

    neighbor = np.empty((n, 8), dtype=np.int64)
    edge = np.empty((n, 8), dtype=np.int64)
    for k, (dr, dc) in enumerate(OFFSETS):
        neighbor[:, k] = ((rows + dr) % side) * side + (cols + dc) % side
        if (dr, dc) in OWNED_SLOTS:
            edge[:, k] = index * EDGES_PER_CELL + OWNED_SLOTS[(dr, dc)]
        else:
            edge[:, k] = neighbor[:, k] * EDGES_PER_CELL + OWNED_SLOTS[(-dr, -dc)]

    neighbor.setflags(write=False)
    edge.setflags(write=False)
    return neighbor, edge
