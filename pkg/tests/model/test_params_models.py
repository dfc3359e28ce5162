"""Test Module"""
# third-party
import pytest
from pydantic import ValidationError

# first-party
from copd_sim.model import (
    CoevParamsModel,
    GameParamsModel,
    Placement,
    SeedingMode,
    SeedingSpecModel,
    Strategy,
)


class TestStrategy:
    """Test Module"""

    def test_codes_are_stable(self):
        """Test Case"""
        assert [int(s) for s in Strategy] == [0, 1, 2]
        assert [s.code for s in Strategy] == ['C', 'D', 'A']

    def test_from_code(self):
        """Test Case"""
        assert Strategy.from_code('A') is Strategy.ABSTAINER

        with pytest.raises(ValueError):
            Strategy.from_code('X')


class TestGameParamsModel:
    """Test Module"""

    def test_payoff_constants(self):
        """Test Case"""
        game = GameParamsModel(b=1.9, l=0.6)
        assert (game.T, game.R, game.P, game.S) == (1.9, 1.0, 0.0, 0.0)
        assert game.T > game.R > game.P >= game.S

    @pytest.mark.parametrize('b', [1.0, 2.0, 0.5, 2.5])
    def test_b_bounds(self, b: float):
        """Test Case"""
        with pytest.raises(ValidationError) as ex:
            GameParamsModel(b=b, l=0.6)
        assert 'b must be' in str(ex.value)

    def test_l_zero_is_allowed(self):
        """Test Case"""
        assert GameParamsModel(b=1.5, l=0.0).l == 0.0

    @pytest.mark.parametrize('l', [-0.1, 1.0])
    def test_l_bounds(self, l: float):  # noqa: E741
        """Test Case"""
        with pytest.raises(ValidationError):
            GameParamsModel(b=1.5, l=l)

    def test_immutable(self):
        """Test Case"""
        game = GameParamsModel(b=1.9, l=0.6)
        with pytest.raises(TypeError):
            game.b = 1.5


class TestCoevParamsModel:
    """Test Module"""

    def test_headline_values(self):
        """Test Case"""
        coev = CoevParamsModel(big_delta=0.72, small_delta=0.8)
        assert coev.lower == pytest.approx(0.2)
        assert coev.upper == pytest.approx(1.8)
        assert coev.ratio == pytest.approx(0.9)

    def test_big_delta_above_small_delta(self):
        """Test Case"""
        with pytest.raises(ValidationError) as ex:
            CoevParamsModel(big_delta=0.9, small_delta=0.8)
        assert 'big_delta must be less than or equal to small_delta 0.8' in str(ex.value)

    def test_static_network_reductions(self):
        """Test Case"""
        assert CoevParamsModel(big_delta=0.0, small_delta=0.8).ratio == 0.0
        assert CoevParamsModel(big_delta=0.0, small_delta=0.0).ratio == 0.0

    @pytest.mark.parametrize('small_delta', [-0.1, 1.1])
    def test_small_delta_bounds(self, small_delta: float):
        """Test Case"""
        with pytest.raises(ValidationError):
            CoevParamsModel(big_delta=0.0, small_delta=small_delta)


class TestSeedingSpecModel:
    """Test Module"""

    def test_default_is_unbiased(self):
        """Test Case"""
        seeding = SeedingSpecModel()
        assert seeding.mode == SeedingMode.UNBIASED
        assert seeding.label == 'unbiased'

    def test_biased_requires_fraction(self):
        """Test Case"""
        with pytest.raises(ValidationError) as ex:
            SeedingSpecModel(mode=SeedingMode.BIASED_FRACTION)
        assert 'abstainer_fraction is required' in str(ex.value)

    def test_biased_fraction_range(self):
        """Test Case"""
        with pytest.raises(ValidationError):
            SeedingSpecModel(mode=SeedingMode.BIASED_FRACTION, abstainer_fraction=1.5)

    def test_biased_label(self):
        """Test Case"""
        seeding = SeedingSpecModel(mode='biased_fraction', abstainer_fraction=0.05)
        assert seeding.label == 'biased_fraction:0.05'

    def test_single_abstainer_defaults_to_center(self):
        """Test Case"""
        seeding = SeedingSpecModel(mode=SeedingMode.SINGLE_ABSTAINER)
        assert seeding.placement == Placement.CENTER_CELL
        assert seeding.label == 'single_abstainer:center_cell'
