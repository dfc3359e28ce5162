"""COPD Simulator Module"""
# standard library
import logging
import os
from collections.abc import Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import NamedTuple

# first-party
from copd_sim.experiments.simulation import run_simulation
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class RunTask(NamedTuple):
    """One unit of work: a config at a sweep point, run with one replicate seed."""

    point: int
    replicate: int
    seed: int
    config: SimConfigModel


def default_jobs() -> int:
    """Return the available hardware parallelism."""
    return os.cpu_count() or 1


def execute(
    tasks: Iterable[RunTask], jobs: int | None = None, check_invariants: bool = False
) -> Iterator[tuple[RunTask, RunResultModel | Exception]]:
    """Run tasks on a bounded thread pool and yield (task, result or error) as they finish.

    The update kernels release the GIL, so threads run simulations in parallel. Callers
    must not rely on completion order.
    """
    tasks = list(tasks)
    max_workers = max(1, jobs or default_jobs())
    _logger.debug(f'event=execute, tasks={len(tasks)}, jobs={max_workers}')
    with ThreadPoolExecutor(max_workers=max_workers, thread_name_prefix='copd') as executor:
        futures = {
            executor.submit(run_simulation, task.config, task.seed, check_invariants): task
            for task in tasks
        }
        for future in as_completed(futures):
            # a consumed result is released as soon as the caller lets go of it
            task = futures.pop(future)
            try:
                yield task, future.result()
            except Exception as ex:  # pylint: disable=broad-except
                _logger.exception(
                    f'event=run-failed, point={task.point}, replicate={task.replicate}, '
                    f'seed={task.seed}'
                )
                yield task, ex
