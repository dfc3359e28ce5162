"""COPD Simulator Module

The config file is a flat YAML mapping. Nested mappings (``seeding: {mode: ...}``) are
accepted and flattened with ``.`` before validation.
"""
# standard library
import logging
from collections.abc import Mapping
from pathlib import Path
from typing import Any

# third-party
import yaml
from pydantic import ValidationError

# first-party
from copd_sim.config.model.profile_settings_model import ProfileSettingsModel
from copd_sim.config.profile import Profile, profile_defaults
from copd_sim.exception import ConfigValidationError, ConstraintViolation, OutputError
from copd_sim.model.sim_config_model import SimConfigModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])

# flat key -> location in SimConfigModel
CONFIG_KEYS: dict[str, tuple[str, ...]] = {
    'side': ('side',),
    'b': ('game', 'b'),
    'l': ('game', 'l'),
    'big_delta': ('coev', 'big_delta'),
    'small_delta': ('coev', 'small_delta'),
    'steps': ('steps',),
    'tail_window': ('tail_window',),
    'seeding.mode': ('seeding', 'mode'),
    'seeding.abstainer_fraction': ('seeding', 'abstainer_fraction'),
    'seeding.placement': ('seeding', 'placement'),
    'rng_seed': ('rng_seed',),
    'replicates': ('replicates',),
    'snapshot_steps': ('snapshot_steps',),
}
_FLAT_NAMES = {location: key for key, location in CONFIG_KEYS.items()}


def _flatten(data: Mapping, prefix: str = '') -> dict[str, Any]:
    """Flatten nested mappings into dotted keys."""
    flat = {}
    for key, value in data.items():
        name = f'{prefix}{key}'
        if isinstance(value, Mapping):
            flat.update(_flatten(value, f'{name}.'))
        else:
            flat[name] = value
    return flat


def _parse_snapshot_steps(value: Any) -> Any:
    """Accept a YAML list or a comma separated string."""
    if isinstance(value, str):
        try:
            return [int(v) for v in value.split(',') if v.strip()]
        except ValueError as ex:
            raise ConstraintViolation(
                'snapshot_steps', 'snapshot_steps must be a comma separated list of integers'
            ) from ex
    return value


def _nest(flat: Mapping[str, Any]) -> tuple[dict, list[ConstraintViolation]]:
    """Return the nested model input and a violation for every unknown key."""
    nested: dict[str, Any] = {}
    violations = []
    for key, value in _flatten(flat).items():
        if key not in CONFIG_KEYS:
            violations.append(ConstraintViolation(key, f'{key} is not a configuration key'))
            continue
        if value is None:
            continue
        if key == 'snapshot_steps':
            try:
                value = _parse_snapshot_steps(value)
            except ConstraintViolation as ex:
                violations.append(ex)
                continue
        *parents, leaf = CONFIG_KEYS[key]
        target = nested
        for parent in parents:
            target = target.setdefault(parent, {})
        target[leaf] = value
    return nested, violations


def constraint_violations(ex: ValidationError) -> list[ConstraintViolation]:
    """Translate pydantic errors into named constraint violations."""
    violations = []
    for error in ex.errors():
        location = tuple(str(loc) for loc in error.get('loc', ()))
        field_name = _FLAT_NAMES.get(location, '.'.join(location))
        message = error.get('msg', 'invalid value')
        if error.get('type', '').startswith('value_error.missing'):
            message = f'{field_name} is required'
        elif not error.get('type', '').startswith('value_error'):
            # type errors: prefix with the field so the message stands alone
            message = f'{field_name}: {message}'
        violations.append(ConstraintViolation(field_name, message))
    return violations


def validate_config(data: SimConfigModel | Mapping[str, Any]) -> SimConfigModel:
    """Return a validated config, or raise with every violated constraint."""
    flat = to_flat(data) if isinstance(data, SimConfigModel) else data
    nested, violations = _nest(flat)
    try:
        config = SimConfigModel(**nested)
    except ValidationError as ex:
        violations.extend(constraint_violations(ex))
        config = None

    if violations:
        _logger.error(
            f'event=config-invalid, violations="{"; ".join(v.message for v in violations)}"'
        )
        raise ConfigValidationError(violations)
    return config  # type: ignore


def to_flat(config: SimConfigModel) -> dict[str, Any]:
    """Return the flat key-value form of a config."""
    flat: dict[str, Any] = {
        'side': config.side,
        'b': config.game.b,
        'l': config.game.l,
        'big_delta': config.coev.big_delta,
        'small_delta': config.coev.small_delta,
        'steps': config.steps,
        'tail_window': config.tail_window,
        'seeding.mode': config.seeding.mode.value,
    }
    if config.seeding.abstainer_fraction is not None:
        flat['seeding.abstainer_fraction'] = config.seeding.abstainer_fraction
    if config.seeding.placement is not None:
        flat['seeding.placement'] = config.seeding.placement.value
    flat['rng_seed'] = config.rng_seed
    flat['replicates'] = config.replicates
    flat['snapshot_steps'] = list(config.snapshot_steps)
    return flat


def dump_config(config: SimConfigModel, path: Path | None = None) -> str:
    """Return the YAML text of a config, writing it to path when given."""
    text = yaml.safe_dump(to_flat(config), sort_keys=False, default_flow_style=None)
    if path is not None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(text, encoding='utf-8')
        except OSError as ex:
            raise OutputError(path, ex) from ex
    return text


def read_config_file(path: Path) -> dict[str, Any]:
    """Return the flat mapping stored in a YAML config file."""
    with path.open(encoding='utf-8') as fh:
        try:
            data = yaml.safe_load(fh)
        except yaml.YAMLError as ex:
            raise ConfigValidationError(
                [ConstraintViolation('config', f'{path} is not valid YAML: {ex}')]
            ) from ex

    if data is None:
        return {}
    if not isinstance(data, Mapping):
        raise ConfigValidationError(
            [ConstraintViolation('config', f'{path} must contain a key-value mapping')]
        )
    return _flatten(data)


def load_config(path: Path) -> SimConfigModel:
    """Read and validate a config file."""
    return validate_config(read_config_file(path))


def resolve_config(
    profile: Profile | str = Profile.DESK,
    config_file: Path | None = None,
    overrides: Mapping[str, Any] | None = None,
) -> SimConfigModel:
    """Merge profile defaults, COPD_SEED, the config file and overrides, in that order."""
    flat = profile_defaults(profile)

    settings = ProfileSettingsModel()
    if settings.copd_seed is not None:
        flat['rng_seed'] = settings.copd_seed

    if config_file is not None:
        flat.update(read_config_file(config_file))

    flat.update({k: v for k, v in (overrides or {}).items() if v is not None})
    _logger.debug(f'event=resolve-config, profile={Profile(profile).value}, file={config_file}')
    return validate_config(flat)
