"""COPD Simulator Module"""

# third-party
import numpy as np
from numba import njit


MASK_64 = 0xFFFFFFFFFFFFFFFF
_GAMMA = 0x9E3779B97F4A7C15
_GAMMA_INVERSE = pow(_GAMMA, -1, 2**64)
_MIX_1 = 0xBF58476D1CE4E5B9
_MIX_2 = 0x94D049BB133111EB

# numba constants (uint64 shift counts keep the arithmetic in uint64)
GOLDEN_GAMMA = np.uint64(_GAMMA)
MIX_1 = np.uint64(_MIX_1)
MIX_2 = np.uint64(_MIX_2)
SHIFT_11 = np.uint64(11)
SHIFT_27 = np.uint64(27)
SHIFT_30 = np.uint64(30)
SHIFT_31 = np.uint64(31)
FLOAT_SCALE = 1.0 / 9007199254740992.0  # 2**-53


@njit(cache=True, nogil=True)
def next_u64(state: np.ndarray) -> np.uint64:
    """Advance the one-element uint64 state and return the next output."""
    z = state[0] + GOLDEN_GAMMA
    state[0] = z
    z = (z ^ (z >> SHIFT_30)) * MIX_1
    z = (z ^ (z >> SHIFT_27)) * MIX_2
    return z ^ (z >> SHIFT_31)


@njit(cache=True, nogil=True)
def next_float(state: np.ndarray) -> float:
    """Return a uniform float in [0, 1) built from the top 53 bits."""
    return np.float64(next_u64(state) >> SHIFT_11) * FLOAT_SCALE


@njit(cache=True, nogil=True)
def next_below(state: np.ndarray, n: int) -> int:
    """Return floor(next_float * n), a uniform integer in [0, n)."""
    return np.int64(next_float(state) * n)


@njit(cache=True, nogil=True)
def shuffle(state: np.ndarray, values: np.ndarray):
    """Shuffle values in place (Fisher-Yates, top index down, one draw per swap)."""
    for i in range(values.shape[0] - 1, 0, -1):
        j = next_below(state, i + 1)
        tmp = values[i]
        values[i] = values[j]
        values[j] = tmp


def mix64(z: int) -> int:
    """Return the splitmix64 output for state z (z + gamma, then the finalizer)."""
    z = (z + _GAMMA) & MASK_64
    z = ((z ^ (z >> 30)) * _MIX_1) & MASK_64
    z = ((z ^ (z >> 27)) * _MIX_2) & MASK_64
    return z ^ (z >> 31)


def derive_seed(base_seed: int, point_index: int = 0, replicate_index: int = 0) -> int:
    """Return the seed of one replicate at one sweep point.

    derive_seed(s, p, k) = mix64(mix64(mix64(s) ^ p) ^ k)
    """
    return mix64(mix64(mix64(base_seed & MASK_64) ^ point_index) ^ replicate_index)


class SplitMix64:
    """Seeded splitmix64 stream shared by lattice seeding and the update kernels."""

    def __init__(self, seed: int):
        """Initialize instance properties."""
        self.seed = seed & MASK_64
        self.state = np.array([self.seed], dtype=np.uint64)

    @property
    def draw_count(self) -> int:
        """Return how many 64-bit outputs have been drawn since seeding."""
        return ((int(self.state[0]) - self.seed) * _GAMMA_INVERSE) & MASK_64

    def next_u64(self) -> int:
        """Return the next raw 64-bit output."""
        return int(next_u64(self.state))

    def next_float(self) -> float:
        """Return a uniform float in [0, 1)."""
        return float(next_float(self.state))

    def next_below(self, n: int) -> int:
        """Return a uniform integer in [0, n)."""
        return int(next_below(self.state, n))

    def shuffle(self, values: np.ndarray):
        """Shuffle an int64 array in place."""
        shuffle(self.state, values)
