"""COPD Simulator Module"""

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
    config_option,
    l_option,
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
from copd_sim.cli.validate.validate_cli import ValidateCli
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
    print_config: bool = print_config_option,
):
    """Validate a configuration and report every violated constraint."""
    cli = ValidateCli()
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
        cli.render(sim_config)
        Render.summary(cli.summary(sim_config))
    except ConfigValidationError as ex:
        cli.render_violations(ex)
    except Exception as ex:
        cli.log.exception('Failed to run "copd validate" command.')
        Render.panel.failure(f'Exception: {ex}')
