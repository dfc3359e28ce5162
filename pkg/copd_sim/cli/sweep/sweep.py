"""COPD Simulator Module"""
# standard library
from pathlib import Path
from typing import Optional

# third-party
import typer

# first-party
from copd_sim.cli.options import (
    FloatOrNone,
    IntOrNone,
    PathOrNone,
    PlacementOrNone,
    SeedingOrNone,
    StrList,
    StrOrNone,
    abstainer_fraction_option,
    b_option,
    big_delta_option,
    check_invariants_option,
    config_option,
    jobs_option,
    l_option,
    out_option,
    overrides,
    placement_option,
    print_config_option,
    profile_option,
    replicates_option,
    seed_option,
    seeding_option,
    side_option,
    small_delta_option,
    snapshot_steps_option,
    steps_option,
    tail_window_option,
)
from copd_sim.cli.sweep.sweep_cli import SweepCli
from copd_sim.config.profile import Profile
from copd_sim.exception import ConfigValidationError
from copd_sim.experiments.recipes import Recipe
from copd_sim.render.render import Render

RecipeOrNone = Optional[Recipe]


def command(
    recipe: RecipeOrNone = typer.Option(None, '--recipe', help='A named experiment sweep.'),
    axis: StrList = typer.Option(
        [], '--axis', help='A sweep axis as NAME=V1,V2,... (repeatable, first is slowest).'
    ),
    config: PathOrNone = config_option,
    profile: Profile = profile_option,
    side: IntOrNone = side_option,
    b: FloatOrNone = b_option,
    l: FloatOrNone = l_option,  # noqa: E741
    big_delta: FloatOrNone = big_delta_option,
    small_delta: FloatOrNone = small_delta_option,
    steps: IntOrNone = steps_option,
    tail_window: IntOrNone = tail_window_option,
    seed: IntOrNone = seed_option,
    replicates: IntOrNone = replicates_option,
    seeding: SeedingOrNone = seeding_option,
    abstainer_fraction: FloatOrNone = abstainer_fraction_option,
    placement: PlacementOrNone = placement_option,
    snapshot_steps: StrOrNone = snapshot_steps_option,
    out: Path = out_option,
    jobs: IntOrNone = jobs_option,
    print_config: bool = print_config_option,
    check_invariants: bool = check_invariants_option,
):
    """Run a parameter sweep (one summary.csv row per grid point).

    Axes: b, l, big_delta, small_delta, abstainer_fraction, ratio (Δ/δ). Invalid grid points
    are reported in the error column and do not stop the sweep.
    """
    cli = SweepCli(out, jobs, check_invariants)
    flags = overrides(
        side,
        b,
        l,
        big_delta,
        small_delta,
        steps,
        tail_window,
        seed,
        replicates,
        seeding,
        abstainer_fraction,
        placement,
        snapshot_steps,
    )
    try:
        base = cli.resolve(profile, config, flags, print_config)
        pinned = [key for key, value in flags.items() if value is not None]
        rows = cli.run(cli.build_spec(base, recipe, axis, pinned))
        Render.summary(cli.summary(rows))
    except ConfigValidationError as ex:
        cli.render_violations(ex)
    except Exception as ex:
        cli.log.exception('Failed to run "copd sweep" command.')
        Render.panel.failure(f'Exception: {ex}')
