"""COPD Simulator Module"""
# standard library
from pathlib import Path

# first-party
from copd_sim.cli.options import (
    FloatOrNone,
    IntOrNone,
    PathOrNone,
    PlacementOrNone,
    SeedingOrNone,
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
from copd_sim.cli.run.run_cli import RunCli
from copd_sim.config.profile import Profile
from copd_sim.exception import ConfigValidationError
from copd_sim.render.render import Render


def command(
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
    """Run the replicates of one configuration.

    Writes config.yml, summary.csv, manifest.csv and one timeseries.csv (plus snapshots)
    per replicate under --out, then prints the mean final fractions.
    """
    cli = RunCli(out, jobs, check_invariants)
    try:
        sim_config = cli.resolve(
            profile,
            config,
            overrides(
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
            ),
            print_config,
        )
        row = cli.run(sim_config)
        Render.summary(cli.summary(row))
    except ConfigValidationError as ex:
        cli.render_violations(ex)
    except Exception as ex:
        cli.log.exception('Failed to run "copd run" command.')
        Render.panel.failure(f'Exception: {ex}')
