"""Minimum-weight doubly resolving sets for diffusion-source localization.

A vertex set S doubly resolves a graph when every vertex pair u,v has
observers x,y in S with d(u,x)-d(u,y) != d(v,x)-d(v,y); these are exactly
the observer placements that deterministically localize a shortest-path
diffusion source whose start time is unknown.  The package provides a
logarithmic-ratio greedy for general graphs, exact polynomial solvers for
trees, cycles, k-edge-augmented trees and wheels, brute-force oracles, and
instance generators.
"""

from .graph import (
    DistanceMatrix,
    GraphClass,
    GraphFormatError,
    WeightedGraph,
    all_pairs_distances,
    classify,
    parse_graph,
    serialize_graph,
)
from .greedy import (
    GreedyTrace,
    greedy_mwdrs,
    greedy_weighted_md,
    information_content,
    solve_mwsts,
)
from .generators import GenSpec, generate, generate_reduction, random_connected
from .oracle import (
    InstanceTooLarge,
    brute_min_dominating_set,
    brute_min_drs,
    brute_min_resolving_set,
    brute_mwsts,
)
from .resolving import (
    LocalizationResult,
    Partition,
    SuperTest,
    ambiguous_witness,
    doubly_resolves,
    entropy,
    is_drs,
    is_resolving,
    locate_source,
    refine_partition,
    simulate_times,
    single_class_partition,
)
from .result import SolveResult
from .solver import solve
from .trees import (
    BaseGraphReduction,
    PathDecomposition,
    WrongGraphClass,
    base_graph,
    is_drs_cycle,
    path_decomposition,
    solve_cycle,
    solve_kaug,
    solve_tree,
)
from .wheel import (
    WheelGeometry,
    check_wheel_drs,
    rim_windows_feasible,
    solve_complete_wheel,
    solve_general_wheel,
    wheel_geometry,
)

__version__ = "0.1.0"
