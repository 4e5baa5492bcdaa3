"""Routing front door: classify the instance and run the right solver."""

from __future__ import annotations

from .graph import WeightedGraph, classify
from .greedy import greedy_mwdrs
from .oracle import DEFAULT_SUBSET_LIMIT, brute_min_drs
from .result import SolveResult
from .trees import DEFAULT_KAUG_BUDGET, solve_cycle, solve_kaug, solve_tree
from .wheel import solve_complete_wheel, solve_general_wheel

ALGORITHMS = (
    "auto", "greedy", "tree", "cycle", "ktree", "wheel", "complete-wheel", "oracle",
)


def solve(
    g: WeightedGraph,
    algorithm: str = "auto",
    budget: int = DEFAULT_KAUG_BUDGET,
    oracle_limit: int = DEFAULT_SUBSET_LIMIT,
    threads: int = 1,
) -> SolveResult:
    """Solve the minimum-weight DRS problem, exactly where the class allows.

    ``algorithm`` overrides the classification routing; "auto" picks the
    exact solver for recognized classes and falls back to the greedy on
    general graphs.
    """
    if algorithm == "auto":
        tag = classify(g).tag
        if tag == "cycle":
            return solve_cycle(g)
        if tag == "tree":
            return solve_tree(g)
        if tag == "complete-wheel":
            return solve_complete_wheel(g)
        if tag == "wheel":
            return solve_general_wheel(g, budget=budget, oracle_limit=oracle_limit)
        if tag == "kaug-tree":
            return solve_kaug(g, budget=budget)
        return greedy_mwdrs(g, threads=threads)
    if algorithm == "greedy":
        return greedy_mwdrs(g, threads=threads)
    if algorithm == "tree":
        return solve_tree(g)
    if algorithm == "cycle":
        return solve_cycle(g)
    if algorithm == "ktree":
        return solve_kaug(g, budget=budget)
    if algorithm == "wheel":
        return solve_general_wheel(g, budget=budget, oracle_limit=oracle_limit)
    if algorithm == "complete-wheel":
        return solve_complete_wheel(g)
    if algorithm == "oracle":
        return brute_min_drs(g, limit=oracle_limit)
    raise ValueError(f"unknown algorithm {algorithm!r}")
