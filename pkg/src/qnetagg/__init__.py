"""Reliability engine and planner for multiplexed qudit packets on lossy channels."""

from .closed_form import (
    ps6,
    ps15,
    ps_single,
    ps_single_withheld,
    ps_two_channel,
)
from .engine import (
    block_success,
    brute_force,
    cluster_decompose,
    loss_distribution,
    success_probability,
)
from .model import (
    Channel,
    InvalidConfiguration,
    MultiplexConfiguration,
    Photon,
    QrsCode,
    shared7_configuration,
    load_config,
    save_config,
    uniform_configuration,
    validate,
    violations,
)
from .montecarlo import McEstimate, estimate
from .planner import (
    AllocationProblem,
    AllocationResult,
    ChannelSpec,
    EmptyCurve,
    Infeasible,
    Scenario,
    ThresholdCurve,
    allocate,
    grid_points,
    shared_photon_7_scenario,
    shared_photon_11_scenario,
    single_channel_scenario,
    single_channel_solutions,
    solve_p1,
    sweep_curve,
    two_channel_scenario,
)
from .wiring import search_shared_photon_wiring

__version__ = "0.1.0"

__all__ = [
    "Channel",
    "InvalidConfiguration",
    "MultiplexConfiguration",
    "Photon",
    "QrsCode",
    "shared7_configuration",
    "load_config",
    "save_config",
    "uniform_configuration",
    "validate",
    "violations",
    "ps6",
    "ps15",
    "ps_single",
    "ps_single_withheld",
    "ps_two_channel",
    "block_success",
    "brute_force",
    "cluster_decompose",
    "loss_distribution",
    "success_probability",
    "McEstimate",
    "estimate",
    "AllocationProblem",
    "AllocationResult",
    "ChannelSpec",
    "EmptyCurve",
    "Infeasible",
    "Scenario",
    "ThresholdCurve",
    "allocate",
    "grid_points",
    "shared_photon_7_scenario",
    "shared_photon_11_scenario",
    "single_channel_scenario",
    "single_channel_solutions",
    "solve_p1",
    "sweep_curve",
    "two_channel_scenario",
    "search_shared_photon_wiring",
]
