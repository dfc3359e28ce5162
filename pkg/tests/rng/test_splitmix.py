"""Test Module"""
# third-party
import numpy as np
import pytest

# first-party
from copd_sim.rng import SplitMix64, derive_seed, mix64


class TestSplitMix64:
    """Test Module"""

    def test_reference_outputs(self):
        """Test Case"""
        # published splitmix64 outputs for seed 0
        rng = SplitMix64(0)
        assert rng.next_u64() == 0xE220A8397B1DCDAF
        assert rng.next_u64() == 0x6E789E6AA1B965F4
        assert rng.next_u64() == 0x06C45D188009454F

    def test_mix64_matches_first_output(self):
        """Test Case"""
        for seed in (0, 1, 2**63, 2**64 - 1):
            assert SplitMix64(seed).next_u64() == mix64(seed)

    def test_draw_count(self):
        """Test Case"""
        rng = SplitMix64(12345)
        assert rng.draw_count == 0
        for _ in range(5):
            rng.next_float()
        rng.next_below(8)
        assert rng.draw_count == 6

    def test_next_float_range(self):
        """Test Case"""
        rng = SplitMix64(3)
        values = [rng.next_float() for _ in range(1000)]
        assert min(values) >= 0.0
        assert max(values) < 1.0

    def test_next_below_range(self):
        """Test Case"""
        rng = SplitMix64(4)
        values = {rng.next_below(8) for _ in range(2000)}
        assert values == set(range(8))

    def test_same_seed_same_stream(self):
        """Test Case"""
        a, b = SplitMix64(99), SplitMix64(99)
        assert [a.next_u64() for _ in range(10)] == [b.next_u64() for _ in range(10)]

    def test_shuffle_is_a_permutation(self):
        """Test Case"""
        rng = SplitMix64(5)
        values = np.arange(50, dtype=np.int64)
        rng.shuffle(values)
        assert sorted(values.tolist()) == list(range(50))
        assert values.tolist() != list(range(50))
        # one draw per swap, top index down to 1
        assert rng.draw_count == 49


class TestDeriveSeed:
    """Test Module"""

    def test_definition(self):
        """Test Case"""
        assert derive_seed(7, 2, 3) == mix64(mix64(mix64(7) ^ 2) ^ 3)

    def test_defaults(self):
        """Test Case"""
        assert derive_seed(7) == derive_seed(7, 0, 0)

    @pytest.mark.parametrize('base_seed', [0, 1, 2**64 - 1])
    def test_distinct_per_point_and_replicate(self, base_seed: int):
        """Test Case"""
        seeds = {derive_seed(base_seed, p, k) for p in range(10) for k in range(10)}
        assert len(seeds) == 100
        assert all(0 <= s < 2**64 for s in seeds)
