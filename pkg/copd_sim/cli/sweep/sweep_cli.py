"""COPD Simulator Module"""
# standard library
from pathlib import Path

# third-party
from pydantic import ValidationError

# first-party
from copd_sim.cli.cli_abc import CliABC
from copd_sim.config.config import constraint_violations
from copd_sim.exception import ConfigValidationError, ConstraintViolation
from copd_sim.experiments.output import OutputTree
from copd_sim.experiments.recipes import Recipe, build_recipe
from copd_sim.experiments.runner import RunTask
from copd_sim.experiments.sweep import run_sweep
from copd_sim.model.run_result_model import RunResultModel
from copd_sim.model.sim_config_model import SimConfigModel
from copd_sim.model.sweep_model import AxisName, SweepAxisModel, SweepRowModel, SweepSpecModel
from copd_sim.render.render import Render


class SweepCli(CliABC):
    """Run a parameter sweep and write the output tree."""

    def __init__(self, out: Path, jobs: int | None, check_invariants: bool):
        """Initialize instance properties."""
        super().__init__()
        self.check_invariants = check_invariants
        self.jobs = jobs
        self.tree = OutputTree(out)

    @staticmethod
    def parse_axis(text: str) -> SweepAxisModel:
        """Parse NAME=V1,V2,... into an axis."""
        name, sep, values = text.partition('=')
        try:
            if not sep:
                raise ValueError('missing "="')
            return SweepAxisModel(
                name=AxisName(name.strip()),
                values=[float(v) for v in values.split(',') if v.strip()],
            )
        except (ValueError, ValidationError) as ex:
            names = ', '.join(a.value for a in AxisName)
            message = f'invalid axis "{text}" (NAME=V1,V2 with NAME in {names})'
            raise ConfigValidationError([ConstraintViolation('axes', message)]) from ex

    def build_spec(
        self,
        config: SimConfigModel,
        recipe: Recipe | None,
        axes: list[str],
        pinned: list[str] | None = None,
    ) -> SweepSpecModel:
        """Return the recipe's sweep, or one built from --axis options."""
        if recipe is not None and axes:
            raise ConfigValidationError(
                [ConstraintViolation('axes', '--recipe and --axis cannot be combined')]
            )
        if recipe is not None:
            return build_recipe(recipe, config, pinned=pinned or [])

        try:
            return SweepSpecModel(
                axes=[self.parse_axis(a) for a in axes],
                base=config,
                replicates_per_point=config.replicates,
            )
        except ValidationError as ex:
            raise ConfigValidationError(constraint_violations(ex)) from ex

    def run(self, spec: SweepSpecModel) -> list[SweepRowModel]:
        """Run the sweep and write summary.csv and manifest.csv."""
        self.tree.write_config(spec.base)
        with Render.progress_bar() as progress:
            progress_task = progress.add_task(
                'Sweep', total=spec.point_count * spec.replicates_per_point
            )

            def on_result(task: RunTask, result: RunResultModel):
                self.tree.write_result(task, result)
                progress.advance(progress_task)

            rows = run_sweep(
                spec, jobs=self.jobs, check_invariants=self.check_invariants, on_result=on_result
            )

        self.tree.write_summary(rows)
        return rows

    def summary(self, rows: list[SweepRowModel]) -> str:
        """Return the one-line result summary."""
        failed = sum(1 for row in rows if row.error)
        return f'rows={len(rows)} failed={failed} out={self.tree.root}'
