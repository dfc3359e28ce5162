"""COPD Simulator Module"""
# standard library
import logging
from collections.abc import Callable

# first-party
from copd_sim.experiments.runner import RunTask, execute
from copd_sim.metrics.fractions import aggregate_replicates
from copd_sim.model.run_result_model import AggregateModel, RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.rng.splitmix import derive_seed

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])

ResultCallback = Callable[[RunTask, RunResultModel], None]


def replicate_tasks(
    config: SimConfigModel, base_seed: int, n: int, point_index: int = 0
) -> list[RunTask]:
    """Return the n tasks of one config; replicate k runs with derive_seed(base, point, k)."""
    return [
        RunTask(point_index, k, derive_seed(base_seed, point_index, k), config) for k in range(n)
    ]


def run_replicates(
    config: SimConfigModel,
    base_seed: int | None = None,
    n: int | None = None,
    jobs: int | None = None,
    point_index: int = 0,
    check_invariants: bool = False,
    on_result: ResultCallback | None = None,
) -> tuple[list[RunResultModel], AggregateModel]:
    """Run n independent replicates of config and aggregate their final fractions.

    base_seed defaults to config.rng_seed and n to config.replicates. Results are returned
    in replicate order whatever order they complete in; the first failure is re-raised.
    """
    base_seed = config.rng_seed if base_seed is None else base_seed
    n = config.replicates if n is None else n
    if n < 1:
        raise ValueError(f'replicate count must be at least 1 (got {n})')

    results: dict[int, RunResultModel] = {}
    for task, outcome in execute(
        replicate_tasks(config, base_seed, n, point_index), jobs, check_invariants
    ):
        if isinstance(outcome, Exception):
            raise outcome
        if on_result is not None:
            on_result(task, outcome)
        results[task.replicate] = outcome

    ordered = [results[k] for k in sorted(results)]
    _logger.info(f'event=replicates-complete, point={point_index}, replicates={n}')
    return ordered, aggregate_replicates(ordered)
