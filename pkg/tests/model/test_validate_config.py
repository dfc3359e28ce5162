"""Test Module"""
# standard library
from pathlib import Path

# third-party
import pytest
import yaml
from hypothesis import given, settings
from hypothesis import strategies as st

# first-party
from copd_sim.config import (
    Profile,
    dump_config,
    load_config,
    resolve_config,
    to_flat,
    validate_config,
)
from copd_sim.config.model.profile_settings_model import ProfileSettingsModel
from copd_sim.exception import ConfigValidationError
from copd_sim.model import SeedingMode
from tests.conftest import BASE_CONFIG, make_config


@st.composite
def valid_flat_configs(draw) -> dict:
    """Draw a flat config that passes validation."""
    small_delta = draw(st.floats(0.0, 1.0))
    steps = draw(st.integers(1, 10_000))
    data = {
        'side': draw(st.integers(3, 200)),
        'b': draw(st.floats(1.0, 2.0, exclude_min=True, exclude_max=True)),
        'l': draw(st.floats(0.0, 1.0, exclude_max=True)),
        'small_delta': small_delta,
        'big_delta': draw(st.floats(0.0, small_delta)),
        'steps': steps,
        'tail_window': draw(st.integers(1, steps)),
        'rng_seed': draw(st.integers(0, 2**64 - 1)),
        'replicates': draw(st.integers(1, 20)),
        'snapshot_steps': draw(st.lists(st.integers(0, steps), max_size=5)),
    }
    mode = draw(st.sampled_from(list(SeedingMode)))
    data['seeding.mode'] = mode.value
    if mode == SeedingMode.BIASED_FRACTION:
        data['seeding.abstainer_fraction'] = draw(st.floats(0.0, 1.0))
    if mode == SeedingMode.SINGLE_ABSTAINER:
        data['seeding.placement'] = draw(
            st.sampled_from(['random_cell', 'center_cell', 'defector_cluster'])
        )
    return data


class TestValidateConfig:
    """Test Module"""

    def test_headline_config_is_valid(self):
        """Test Case"""
        config = make_config(side=102, b=1.9, l=0.6, big_delta=0.72, small_delta=0.8)
        assert config.n == 102 * 102
        assert config.game.b == 1.9
        assert config.coev.big_delta == 0.72

    def test_b_at_one_names_the_bound(self):
        """Test Case"""
        with pytest.raises(ConfigValidationError) as ex:
            make_config(b=1.0)
        assert [v.field_name for v in ex.value.violations] == ['b']
        assert 'b must be greater than 1' in str(ex.value)

    def test_big_delta_above_small_delta(self):
        """Test Case"""
        with pytest.raises(ConfigValidationError) as ex:
            make_config(big_delta=0.9, small_delta=0.8)
        assert [v.field_name for v in ex.value.violations] == ['big_delta']

    def test_reports_every_violation(self):
        """Test Case"""
        with pytest.raises(ConfigValidationError) as ex:
            make_config(b=2.5, l=1.2, side=2, steps=10, tail_window=11)
        fields = {v.field_name for v in ex.value.violations}
        assert fields == {'b', 'l', 'side', 'tail_window'}

    def test_unknown_key(self):
        """Test Case"""
        with pytest.raises(ConfigValidationError) as ex:
            make_config(temperature=0.1)
        assert 'temperature is not a configuration key' in str(ex.value)

    def test_rng_seed_range(self):
        """Test Case"""
        assert make_config(rng_seed=2**64 - 1).rng_seed == 2**64 - 1
        with pytest.raises(ConfigValidationError):
            make_config(rng_seed=2**64)

    def test_snapshot_steps_comma_string(self):
        """Test Case"""
        config = make_config(snapshot_steps='20, 0,5,5')
        assert config.snapshot_steps == [0, 5, 20]

    def test_snapshot_steps_beyond_steps(self):
        """Test Case"""
        with pytest.raises(ConfigValidationError) as ex:
            make_config(snapshot_steps=[21])
        assert ex.value.violations[0].field_name == 'snapshot_steps'

    def test_nested_seeding_mapping(self):
        """Test Case"""
        data = {k: v for k, v in BASE_CONFIG.items() if not k.startswith('seeding')}
        data['seeding'] = {'mode': 'biased_fraction', 'abstainer_fraction': 0.05}
        config = validate_config(data)
        assert config.seeding.mode == SeedingMode.BIASED_FRACTION
        assert config.seeding.abstainer_fraction == 0.05

    @given(valid_flat_configs())
    @settings(max_examples=50, deadline=None)
    def test_idempotent(self, data: dict):
        """Test Case"""
        config = validate_config(data)
        assert validate_config(config) == config

    @given(valid_flat_configs())
    @settings(max_examples=50, deadline=None)
    def test_round_trip_through_yaml(self, data: dict):
        """Test Case"""
        config = validate_config(data)
        assert validate_config(yaml.safe_load(dump_config(config))) == config


class TestConfigFile:
    """Test Module"""

    def test_dump_and_load(self, tmp_path: Path):
        """Test Case"""
        config = make_config(snapshot_steps=[0, 10])
        path = tmp_path / 'config.yml'
        dump_config(config, path)
        assert load_config(path) == config
        assert 'big_delta: 0.72' in path.read_text()

    def test_load_rejects_non_mapping(self, tmp_path: Path):
        """Test Case"""
        path = tmp_path / 'config.yml'
        path.write_text('- 1\n- 2\n')
        with pytest.raises(ConfigValidationError):
            load_config(path)

    def test_flat_keys(self, small_config):
        """Test Case"""
        assert list(to_flat(small_config)) == list(BASE_CONFIG)


class TestResolveConfig:
    """Test Module"""

    def test_profiles(self, monkeypatch: pytest.MonkeyPatch):
        """Test Case"""
        monkeypatch.delenv('COPD_SEED', raising=False)
        desk = resolve_config(Profile.DESK)
        paper = resolve_config('paper')
        assert (desk.side, desk.steps, desk.tail_window, desk.replicates) == (50, 20_000, 1000, 5)
        assert (paper.side, paper.steps, paper.tail_window, paper.replicates) == (
            102,
            100_000,
            1000,
            10,
        )
        assert desk.game == paper.game
        assert desk.coev == paper.coev

    def test_precedence(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
        """Test Case"""
        monkeypatch.setenv('COPD_SEED', '11')
        path = tmp_path / 'config.yml'
        path.write_text('b: 1.5\nl: 0.3\n')

        config = resolve_config('desk', path, {'l': 0.2, 'side': None})
        assert config.rng_seed == 11
        assert config.game.b == 1.5
        assert config.game.l == 0.2
        assert config.side == 50

    def test_file_overrides_env_seed(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
        """Test Case"""
        monkeypatch.setenv('COPD_SEED', '11')
        path = tmp_path / 'config.yml'
        path.write_text('rng_seed: 3\n')
        assert resolve_config('desk', path).rng_seed == 3
        assert resolve_config('desk', path, {'rng_seed': 4}).rng_seed == 4

    def test_settings_read_only_the_seed(self, monkeypatch: pytest.MonkeyPatch):
        """Test Case"""
        monkeypatch.setenv('COPD_SEED', '21')
        monkeypatch.setenv('COPD_LOG_LEVEL', 'info')
        assert ProfileSettingsModel().dict() == {'copd_seed': 21}
