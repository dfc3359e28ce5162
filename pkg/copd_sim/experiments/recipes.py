"""COPD Simulator Module

Named sweeps that regenerate the data behind each experiment family: the game-variant
comparison, the b x Δ/δ phase diagram, Δ/δ curves, ternary grids over (b, l, Δ/δ),
biased seeding, and time courses with snapshots.
"""
# standard library
from collections.abc import Iterable
from enum import Enum

# first-party
from copd_sim.config.config import to_flat, validate_config
from copd_sim.exception import ConfigValidationError, ConstraintViolation
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.model.sweep_model import AxisName, SweepAxisModel, SweepSpecModel


class Recipe(str, Enum):
    """Named sweep recipes."""

    GAME_COMPARISON = 'game-comparison'
    PHASE_DIAGRAM = 'phase-diagram'
    RATIO_CURVES = 'ratio-curves'
    TERNARY = 'ternary'
    BIASED_SEEDING = 'biased-seeding'
    TIME_COURSES = 'time-courses'


# snapshot steps of the time-course recipe (the final step is added per config)
TIME_COURSE_SNAPSHOTS = [0, 45, 1113]


def value_grid(start: float, stop: float, step: float) -> list[float]:
    """Return start, start + step, ..., stop (inclusive) without float drift."""
    count = int(round((stop - start) / step))
    return [round(start + i * step, 10) for i in range(count + 1)]


RATIOS = value_grid(0.0, 1.0, 0.1)


def _axes(**axes: list[float]) -> list[SweepAxisModel]:
    return [SweepAxisModel(name=AxisName(name), values=values) for name, values in axes.items()]


# flat config keys each axis writes
AXIS_KEYS = {
    AxisName.B: ('b',),
    AxisName.L: ('l',),
    AxisName.BIG_DELTA: ('big_delta',),
    AxisName.SMALL_DELTA: ('small_delta',),
    AxisName.ABSTAINER_FRACTION: ('seeding.mode', 'seeding.abstainer_fraction'),
    AxisName.RATIO: ('big_delta',),
}


def build_recipe(
    recipe: Recipe | str,
    base: SimConfigModel,
    replicates: int | None = None,
    pinned: Iterable[str] = (),
) -> SweepSpecModel:
    """Return the sweep spec of a named recipe around base (steps, side, seed, seeding).

    pinned lists the flat keys the caller set explicitly; a recipe that fixes or sweeps
    one of them raises ConfigValidationError instead of overwriting it.
    """
    replicates = replicates or base.replicates
    match Recipe(recipe):
        case Recipe.GAME_COMPARISON:
            # l=0/0.6 x Δ=0/0.72: PD, CPD, OPD and COPD
            fixed = {'b': 1.9, 'small_delta': 0.8, 'big_delta': 0.0}
            axes = _axes(l=[0.0, 0.6], big_delta=[0.0, 0.72])
        case Recipe.PHASE_DIAGRAM:
            fixed = {'l': 0.6, 'small_delta': 0.8, 'big_delta': 0.0}
            axes = _axes(b=value_grid(1.05, 1.95, 0.05), ratio=RATIOS)
        case Recipe.RATIO_CURVES:
            fixed = {'small_delta': 0.8, 'big_delta': 0.0}
            axes = _axes(l=[0.0, 0.6], b=[1.1, 1.34, 1.5, 1.7, 1.9], ratio=RATIOS)
        case Recipe.TERNARY:
            fixed = {'small_delta': 0.8, 'big_delta': 0.0}
            axes = _axes(
                b=[1.1, 1.3, 1.5, 1.7, 1.9], l=value_grid(0.0, 0.9, 0.1), ratio=RATIOS
            )
        case Recipe.BIASED_SEEDING:
            fixed = {'b': 1.9, 'big_delta': 0.72, 'small_delta': 0.8}
            axes = _axes(l=[0.2, 0.6, 0.8], abstainer_fraction=[0.05, 0.33, 0.9])
        case Recipe.TIME_COURSES:
            snapshots = [s for s in TIME_COURSE_SNAPSHOTS if s <= base.steps] + [base.steps]
            fixed = {
                'b': 1.9,
                'l': 0.6,
                'small_delta': 0.8,
                'big_delta': 0.0,
                'snapshot_steps': snapshots,
            }
            axes = _axes(ratio=[0.0, 0.2, 1.0])

    controlled = set(fixed).union(*(AXIS_KEYS[axis.name] for axis in axes))
    conflicts = sorted(controlled.intersection(pinned))
    if conflicts:
        raise ConfigValidationError(
            [
                ConstraintViolation(key, f'{key} is set by the {Recipe(recipe).value} recipe')
                for key in conflicts
            ]
        )

    flat = to_flat(base)
    flat.update(fixed)
    return SweepSpecModel(axes=axes, base=validate_config(flat), replicates_per_point=replicates)
