"""COPD Simulator Module"""
# standard library
import logging
from collections.abc import Sequence

# third-party
import numpy as np

# first-party
from copd_sim.exception import MixedConfigs, WindowTooLarge
from copd_sim.lattice.grid import Grid
from copd_sim.model.fraction_model import FractionSampleModel, FractionsModel
from copd_sim.model.run_result_model import AggregateModel, RunResultModel

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


def record_fractions(grid: Grid, step: int) -> FractionSampleModel:
    """Return exact strategy counts over N, plus the mean edge weight."""
    counts = grid.counts()
    return FractionSampleModel(
        step=step,
        rho_c=counts[0] / grid.n,
        rho_d=counts[1] / grid.n,
        rho_a=counts[2] / grid.n,
        mean_w=float(grid.weights.mean()),
    )


def tail_average(series: Sequence[FractionsModel], tail_window: int) -> FractionsModel:
    """Return the componentwise mean of the last tail_window samples."""
    if tail_window > len(series) or tail_window < 1:
        raise WindowTooLarge(tail_window, len(series))
    tail = np.array([s.as_tuple() for s in series[-tail_window:]], dtype=np.float64)
    rho_c, rho_d, rho_a = tail.mean(axis=0)
    return FractionsModel(rho_c=rho_c, rho_d=rho_d, rho_a=rho_a)


def aggregate_fractions(
    fractions: Sequence[FractionsModel],
) -> tuple[FractionsModel, FractionsModel]:
    """Return the componentwise mean and sample standard deviation (0 for one value)."""
    data = np.array([f.as_tuple() for f in fractions], dtype=np.float64)
    mean = data.mean(axis=0)
    sd = data.std(axis=0, ddof=1) if len(fractions) > 1 else np.zeros(3)
    return (
        FractionsModel(rho_c=mean[0], rho_d=mean[1], rho_a=mean[2]),
        FractionsModel(rho_c=sd[0], rho_d=sd[1], rho_a=sd[2]),
    )


def aggregate_replicates(results: Sequence[RunResultModel]) -> AggregateModel:
    """Aggregate the final fractions of replicate runs of one configuration."""
    digests = {r.config_digest for r in results}
    if len(digests) != 1:
        raise MixedConfigs(digests)

    # sort by seed so the float reduction does not depend on completion order
    ordered = sorted(results, key=lambda r: r.seed)
    mean, sd = aggregate_fractions([r.final_fractions for r in ordered])
    _logger.debug(
        f'event=aggregate-replicates, replicates={len(results)}, '
        f'mean_rho_c={mean.rho_c:.6f}, mean_rho_d={mean.rho_d:.6f}, mean_rho_a={mean.rho_a:.6f}'
    )
    return AggregateModel(mean=mean, sd=sd, replicates=len(results), config_digest=digests.pop())
