"""COPD Simulator Module"""
# standard library
from pathlib import Path

# first-party
from copd_sim.cli.cli_abc import CliABC
from copd_sim.config.config import to_flat
from copd_sim.experiments.output import OutputTree
from copd_sim.experiments.replicates import run_replicates
from copd_sim.experiments.runner import RunTask
from copd_sim.experiments.sweep import summary_row
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.model.sweep_model import SweepPointModel, SweepRowModel
from copd_sim.render.render import Render


class RunCli(CliABC):
    """Run the replicates of one configuration and write the output tree."""

    def __init__(self, out: Path, jobs: int | None, check_invariants: bool):
        """Initialize instance properties."""
        super().__init__()
        self.check_invariants = check_invariants
        self.jobs = jobs
        self.tree = OutputTree(out)

    def run(self, config: SimConfigModel) -> SweepRowModel:
        """Run config.replicates replicates and return the summary row."""
        self.tree.write_config(config)
        with Render.progress_bar() as progress:
            progress_task = progress.add_task('Replicates', total=config.replicates)

            def on_result(task: RunTask, result: RunResultModel):
                self.tree.write_result(task, result)
                progress.advance(progress_task)

            _, aggregate = run_replicates(
                config,
                jobs=self.jobs,
                check_invariants=self.check_invariants,
                on_result=on_result,
            )

        row = summary_row(SweepPointModel(index=0, flat=to_flat(config), config=config), aggregate)
        self.tree.write_summary([row])
        return row

    def summary(self, row: SweepRowModel) -> str:
        """Return the one-line result summary."""
        return (
            f'rho_c={row.mean_rho_c:.6f} rho_d={row.mean_rho_d:.6f} rho_a={row.mean_rho_a:.6f} '
            f'outcome={row.outcome} replicates={row.replicates} out={self.tree.root}'
        )
