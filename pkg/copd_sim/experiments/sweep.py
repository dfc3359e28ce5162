"""COPD Simulator Module"""
# standard library
import itertools
import logging
from collections import defaultdict

# first-party
from copd_sim.config.config import to_flat, validate_config
from copd_sim.exception import ConfigValidationError
from copd_sim.experiments.classify import classify_fractions
from copd_sim.experiments.replicates import ResultCallback, replicate_tasks
from copd_sim.experiments.runner import RunTask, execute
from copd_sim.metrics.fractions import aggregate_replicates
from copd_sim.model.run_result_model import AggregateModel, RunResultModel
from copd_sim.model.sweep_model import AxisName, SweepPointModel, SweepRowModel, SweepSpecModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


def _apply(flat: dict, values: dict[AxisName, float]) -> dict:
    """Return flat config keys with one grid point's axis values applied."""
    flat = dict(flat)
    for name, value in values.items():
        match name:
            case AxisName.RATIO:
                continue
            case AxisName.ABSTAINER_FRACTION:
                flat['seeding.mode'] = 'biased_fraction'
                flat['seeding.abstainer_fraction'] = value
                flat.pop('seeding.placement', None)
            case _:
                flat[name.value] = value

    # the ratio needs the final small_delta
    if AxisName.RATIO in values:
        flat['big_delta'] = values[AxisName.RATIO] * flat['small_delta']
    return flat


def expand_points(spec: SweepSpecModel) -> list[SweepPointModel]:
    """Return the Cartesian product of the axes, first axis slowest, as indexed points."""
    base = to_flat(spec.base)
    base['replicates'] = spec.replicates_per_point
    names = [axis.name for axis in spec.axes]

    points = []
    for index, combo in enumerate(itertools.product(*(axis.values for axis in spec.axes))):
        flat = _apply(base, dict(zip(names, combo)))
        try:
            points.append(SweepPointModel(index=index, flat=flat, config=validate_config(flat)))
        except ConfigValidationError as ex:
            _logger.warning(f'event=sweep-point-invalid, point={index}, error="{ex}"')
            points.append(SweepPointModel(index=index, flat=flat, error=str(ex)))
    return points


def summary_row(point: SweepPointModel, aggregate: AggregateModel) -> SweepRowModel:
    """Return the summary row of a point whose replicates all finished."""
    return point.row(
        mean_rho_c=aggregate.mean.rho_c,
        sd_rho_c=aggregate.sd.rho_c,
        mean_rho_d=aggregate.mean.rho_d,
        sd_rho_d=aggregate.sd.rho_d,
        mean_rho_a=aggregate.mean.rho_a,
        sd_rho_a=aggregate.sd.rho_a,
        replicates=aggregate.replicates,
        outcome=classify_fractions(aggregate.mean),
    )


def run_sweep(
    spec: SweepSpecModel,
    base_seed: int | None = None,
    jobs: int | None = None,
    check_invariants: bool = False,
    on_result: ResultCallback | None = None,
) -> list[SweepRowModel]:
    """Run replicates_per_point replicates at every point and return one row per point.

    Invalid points and failed runs are reported in the row's error column. Rows come back
    in point order whatever order the runs complete in.
    """
    base_seed = spec.base.rng_seed if base_seed is None else base_seed
    points = expand_points(spec)

    tasks: list[RunTask] = []
    for point in points:
        if point.config is not None:
            tasks.extend(
                replicate_tasks(point.config, base_seed, spec.replicates_per_point, point.index)
            )

    finished: dict[int, list[RunResultModel]] = defaultdict(list)
    errors: dict[int, str] = {}
    for task, outcome in execute(tasks, jobs, check_invariants):
        if isinstance(outcome, Exception):
            errors.setdefault(task.point, f'replicate {task.replicate}: {outcome}')
            continue
        if on_result is not None:
            on_result(task, outcome)
        # drop the series; only final fractions are aggregated
        finished[task.point].append(outcome.copy(update={'series': [], 'snapshots': {}}))

    rows = []
    for point in points:
        if point.config is None:
            rows.append(point.row())
        elif point.index in errors:
            rows.append(point.row(error=errors[point.index]))
        else:
            rows.append(summary_row(point, aggregate_replicates(finished[point.index])))
        _logger.debug(f'event=sweep-point, point={point.index}, error="{rows[-1].error}"')

    _logger.info(
        f'event=sweep-complete, points={len(points)}, '
        f'failed={sum(1 for row in rows if row.error)}'
    )
    return rows
