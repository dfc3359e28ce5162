"""COPD Simulator Module"""
# standard library
import logging
import math
import time

# third-party
import numpy as np

# first-party
from copd_sim.dynamics.dynamics import mc_step
from copd_sim.exception import InvariantViolation
from copd_sim.lattice.grid import Grid, build_lattice
from copd_sim.metrics.fractions import record_fractions, tail_average
from copd_sim.model.fraction_model import FractionSampleModel
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.rng.splitmix import SplitMix64

# get logger
_logger = logging.getLogger(__name__.split('.', maxsplit=1)[0])


class Simulation:
    """A seeded grid plus its generator, advanced one MC step at a time.

    The generator seeds the lattice first and then drives every update, so a
    (config, seed) pair fixes the whole trajectory.
    """

    def __init__(self, config: SimConfigModel, seed: int | None = None, check_invariants=False):
        """Initialize instance properties."""
        self.config = config
        self.seed = config.rng_seed if seed is None else seed
        self.check = check_invariants
        self.rng = SplitMix64(self.seed)
        self.grid: Grid = build_lattice(
            config.side, config.seeding, self.rng, config.coev.small_delta
        )
        self.step = 0
        self.series: list[FractionSampleModel] = []
        self.snapshots: dict[int, np.ndarray] = {}
        self._snapshot_steps = set(config.snapshot_steps)
        self._record()

    def _record(self) -> FractionSampleModel:
        """Sample the fractions of the current step and keep a snapshot if requested."""
        sample = record_fractions(self.grid, self.step)
        self.series.append(sample)
        if self.check:
            self.check_invariants(sample)
        if self.step in self._snapshot_steps:
            self.snapshots[self.step] = self.grid.strategies.copy()
        return sample

    def advance(self) -> FractionSampleModel:
        """Run one MC step and return its sample."""
        mc_step(self.grid, self.config.game, self.config.coev, self.rng)
        self.step += 1
        sample = self._record()
        _logger.trace(  # type: ignore
            'event=mc-step, seed=%s, step=%s, rho_c=%.6f, rho_d=%.6f, rho_a=%.6f, mean_w=%.6f',
            self.seed,
            self.step,
            sample.rho_c,
            sample.rho_d,
            sample.rho_a,
            sample.mean_w,
        )
        return sample

    def check_invariants(self, sample: FractionSampleModel):
        """Raise InvariantViolation on out-of-bound weights, fractions or population."""
        if not self.grid.weights_in_bounds():
            raise InvariantViolation(
                self.step,
                f'weights outside [{self.grid.lower}, {self.grid.upper}] '
                f'(min={self.grid.weights.min()}, max={self.grid.weights.max()})',
            )
        total = sample.rho_c + sample.rho_d + sample.rho_a
        if not math.isclose(total, 1.0, rel_tol=0.0, abs_tol=1e-12):
            raise InvariantViolation(self.step, f'fractions sum to {total!r}')
        counts = self.grid.counts()
        if counts.size != 3 or int(counts.sum()) != self.grid.n:
            raise InvariantViolation(
                self.step, f'population {counts.tolist()} does not cover N={self.grid.n}'
            )

    def run(self, steps: int | None = None) -> 'Simulation':
        """Advance the given number of MC steps (default: up to config.steps)."""
        remaining = self.config.steps - self.step if steps is None else steps
        for _ in range(remaining):
            self.advance()
        return self

    def result(self) -> RunResultModel:
        """Return the run result at the current step."""
        return RunResultModel(
            config=self.config,
            config_digest=self.config.digest,
            seed=self.seed,
            series=self.series,
            final_fractions=tail_average(self.series, self.config.tail_window),
            snapshots=dict(self.snapshots),
        )


def run_simulation(
    config: SimConfigModel, seed: int | None = None, check_invariants: bool = False
) -> RunResultModel:
    """Seed a lattice, run config.steps MC steps and tail-average the fractions."""
    start = time.perf_counter()
    simulation = Simulation(config, seed, check_invariants).run()
    result = simulation.result()
    _logger.info(
        f'event=run-complete, seed={simulation.seed}, side={config.side}, steps={config.steps}, '
        f'rho_c={result.final_fractions.rho_c:.6f}, rho_d={result.final_fractions.rho_d:.6f}, '
        f'rho_a={result.final_fractions.rho_a:.6f}, elapsed={time.perf_counter() - start:.2f}s'
    )
    return result
