"""Test Module"""
# third-party
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

# first-party
from copd_sim.exception import StateSpaceOverflow
from copd_sim.model import CoevParamsModel
from copd_sim.statespace import count_states, is_closed, reachable_weights


def coev(big_delta: float, small_delta: float) -> CoevParamsModel:
    """Return link-weight parameters."""
    return CoevParamsModel(big_delta=big_delta, small_delta=small_delta)


class TestReachableWeights:
    """Test Module"""

    def test_seven_states(self):
        """Test Case"""
        states = reachable_weights(coev(0.2, 0.3))
        assert states.count == 7
        assert states.values == pytest.approx([0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3])

    @pytest.mark.parametrize('small_delta', [0.0, 0.3, 1.0])
    def test_static_weights(self, small_delta: float):
        """Test Case"""
        states = reachable_weights(coev(0.0, small_delta))
        assert states.values == [1.0]
        assert states.count == 1

    def test_zero_range(self):
        """Test Case"""
        assert count_states(coev(0.0, 0.0)) == 1

    @pytest.mark.parametrize('delta', [0.05, 0.2, 0.8, 1.0])
    def test_step_equal_to_range(self, delta: float):
        """Test Case"""
        states = reachable_weights(coev(delta, delta))
        assert states.count == 3
        assert states.values == pytest.approx([1.0 - delta, 1.0, 1.0 + delta])

    def test_values_sorted_and_bounded(self):
        """Test Case"""
        params = coev(0.72, 0.8)
        states = reachable_weights(params)
        assert states.values == sorted(states.values)
        assert 1.0 in states.values
        assert all(params.lower <= w <= params.upper for w in states.values)

    @pytest.mark.parametrize(
        'big_delta,small_delta', [(0.2, 0.3), (0.72, 0.8), (0.35, 0.9), (0.07, 0.5)]
    )
    def test_closed(self, big_delta: float, small_delta: float):
        """Test Case"""
        params = coev(big_delta, small_delta)
        assert is_closed(reachable_weights(params), params)

    def test_overflow(self):
        """Test Case"""
        with pytest.raises(StateSpaceOverflow):
            reachable_weights(coev(0.2, 0.3), cap=3)

    def test_fine_step(self):
        """Test Case"""
        params = coev(1e-4, 1.0)
        states = reachable_weights(params)
        assert states.count == 20_001
        assert states.values[0] == pytest.approx(0.0, abs=1e-9)
        assert states.values[-1] == pytest.approx(2.0, abs=1e-9)
        assert is_closed(states, params)

    def test_overflow_on_tiny_step(self):
        """Test Case"""
        with pytest.raises(StateSpaceOverflow):
            reachable_weights(coev(1e-6, 1.0), cap=200_000)


class TestRatioProperty:
    """Test Module"""

    def test_headline_pair(self):
        """Test Case"""
        assert count_states(coev(0.72, 0.8)) == count_states(coev(0.36, 0.4))

    @given(
        st.integers(1, 12),
        st.integers(1, 12),
        st.floats(0.05, 1.0),
        st.floats(0.05, 1.0),
    )
    @settings(max_examples=100, deadline=None)
    def test_equal_ratios_equal_counts(self, p: int, q: int, delta_1: float, delta_2: float):
        """Test Case"""
        ratio = min(p, q) / max(p, q)
        assert count_states(coev(ratio * delta_1, delta_1)) == count_states(
            coev(ratio * delta_2, delta_2)
        )
