"""COPD Simulator Module"""
# standard library
from pathlib import Path
from typing import List, Optional

# third-party
import typer

# first-party
from copd_sim.config.profile import Profile
from copd_sim.model.seeding_model import Placement, SeedingMode

# typer does not yet support PEP 604, but pyupgrade will enforce
# PEP 604. this is a temporary workaround until support is added.
FloatOrNone = Optional[float]
FloatList = List[float]
IntOrNone = Optional[int]
PathOrNone = Optional[Path]
PlacementOrNone = Optional[Placement]
SeedingOrNone = Optional[SeedingMode]
StrOrNone = Optional[str]
StrList = List[str]

# config overrides (each maps to one flat config key)
side_option = typer.Option(None, '--side', help='Lattice side s (N = s * s).')
b_option = typer.Option(None, '--b', help='Temptation to defect, 1 < b < 2.')
l_option = typer.Option(None, '--l', help="Loner's payoff, 0 <= l < 1.")
big_delta_option = typer.Option(None, '--big-delta', help='Link-weight step Δ.')
small_delta_option = typer.Option(None, '--small-delta', help='Link-weight bound δ.')
steps_option = typer.Option(None, '--steps', help='Number of MC steps.')
tail_window_option = typer.Option(
    None, '--tail-window', help='Final MC steps averaged for the outcome.'
)
seed_option = typer.Option(
    None, '--seed', help='Base seed (falls back to COPD_SEED, then the profile).'
)
replicates_option = typer.Option(None, '--replicates', help='Independent runs per config.')
seeding_option = typer.Option(None, '--seeding', help='Initial population layout.')
abstainer_fraction_option = typer.Option(
    None, '--abstainer-fraction', help='Initial abstainer share for biased_fraction seeding.'
)
placement_option = typer.Option(
    None, '--placement', help='Lone abstainer placement for single_abstainer seeding.'
)
snapshot_steps_option = typer.Option(
    None, '--snapshot-steps', help='Comma separated MC steps at which to store snapshots.'
)

# workflow
config_option = typer.Option(None, '--config', help='A YAML config file (flat keys).')
profile_option = typer.Option(Profile.DESK, '--profile', help='Default parameter set.')
out_option = typer.Option(Path('copd-out'), '--out', help='Output directory.')
jobs_option = typer.Option(
    None, '--jobs', help='Worker pool size (default: available hardware parallelism).'
)
print_config_option = typer.Option(
    False, '--print-config', help='Print the resolved config (YAML) before running.'
)
check_invariants_option = typer.Option(
    False, '--check-invariants', help='Check weight, fraction and population invariants.'
)


def overrides(
    side: int | None,
    b: float | None,
    l: float | None,  # noqa: E741
    big_delta: float | None,
    small_delta: float | None,
    steps: int | None,
    tail_window: int | None,
    seed: int | None,
    replicates: int | None,
    seeding: SeedingMode | None,
    abstainer_fraction: float | None,
    placement: Placement | None,
    snapshot_steps: str | None,
) -> dict:
    """Return the flat config keys set on the command line."""
    return {
        'side': side,
        'b': b,
        'l': l,
        'big_delta': big_delta,
        'small_delta': small_delta,
        'steps': steps,
        'tail_window': tail_window,
        'rng_seed': seed,
        'replicates': replicates,
        'seeding.mode': seeding.value if seeding is not None else None,
        'seeding.abstainer_fraction': abstainer_fraction,
        'seeding.placement': placement.value if placement is not None else None,
        'snapshot_steps': snapshot_steps,
    }
