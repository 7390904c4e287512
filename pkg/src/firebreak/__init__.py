"""Firefighter containment toolkit: hexagonal-grid strategy simulation and
birth-sequence tree/forest decisions."""

from .engine import (
    Contained,
    ExplicitGraph,
    HexGraph,
    IllegalMove,
    IllegalMoveError,
    NotContainedByMaxTurn,
    ProtectionSchedule,
    SimState,
    actively_burning,
    initial_state,
    protect,
    run_schedule,
    spread,
    vulnerable,
    write_trace_jsonl,
)
from .forest import (
    BirthSequence,
    Containable,
    ExplicitForest,
    ForestSpec,
    NotContainableWithinHorizon,
    ProvablyNotContainable,
    SavableResult,
    StateGraph,
    brute_force_hot_oracle,
    budget_vectors,
    build_state_graph,
    explicit_forest,
    forest_fire_counts,
    game_tree_oracle,
    leaves_savable,
    tree_containable,
    tree_fire_count_closed_form,
    tree_fire_counts,
)
from .hexgrid import (
    DistanceShell,
    ball,
    dist_from,
    dist_from_origin,
    is_vertex,
    neighbors,
    shell,
)
from .strategy import (
    ContainmentReport,
    SpiralSegments,
    StrategyParams,
    VerificationReport,
    build_schedule,
    contain,
    placements,
    spiral_closure_vertex,
    spiral_segments,
    verify_active_ring,
    verify_observation_distances,
    verify_strip_lemma,
)

__version__ = "0.1.0"
