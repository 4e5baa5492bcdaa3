"""Brute-force ground-truth solvers for small instances.

These enumerate candidate sets in a deterministic (weight, cardinality,
lexicographic) order so results are reproducible; they back the acceptance
suite and serve as fallbacks on tiny inputs.
"""

from __future__ import annotations

from itertools import combinations

from .graph import DistanceMatrix, WeightedGraph, all_pairs_distances
from .resolving import is_drs, is_resolving, signature_matrix
from .result import SolveResult

DEFAULT_SUBSET_LIMIT = 1 << 20


class InstanceTooLarge(ValueError):
    """Raised when 2^n exceeds the subset enumeration cap."""


def _check_limit(n: int, limit: int) -> None:
    if (1 << n) > limit:
        raise InstanceTooLarge(f"2^{n} subsets exceed limit {limit}")


def _subsets_by_weight(g: WeightedGraph, min_size: int):
    """All vertex subsets of size >= min_size ordered by (weight, size, lex)."""
    n = g.n
    order = []
    for size in range(min_size, n + 1):
        for combo in combinations(range(n), size):
            order.append((g.weight_of(combo), size, combo))
    order.sort()
    for _, _, combo in order:
        yield combo


def brute_min_drs(
    g: WeightedGraph,
    dm: DistanceMatrix | None = None,
    limit: int = DEFAULT_SUBSET_LIMIT,
) -> SolveResult:
    """Minimum-weight doubly resolving set by exhaustive search.

    Unit-weight instances are scanned in increasing cardinality (equivalent
    order, no sort needed); weighted instances in increasing weight.
    """
    _check_limit(g.n, limit)
    if dm is None:
        dm = all_pairs_distances(g)
    if g.unit_weights():
        for size in range(2, g.n + 1):
            for combo in combinations(range(g.n), size):
                if is_drs(dm, combo):
                    return SolveResult(
                        set=frozenset(combo),
                        weight=float(size),
                        algorithm="oracle",
                        optimal=True,
                    )
    else:
        for combo in _subsets_by_weight(g, min_size=2):
            if is_drs(dm, combo):
                return SolveResult(
                    set=frozenset(combo),
                    weight=g.weight_of(combo),
                    algorithm="oracle",
                    optimal=True,
                )
    raise AssertionError("V itself is always a DRS; unreachable")


def brute_mwsts(
    g: WeightedGraph,
    x: int,
    dm: DistanceMatrix | None = None,
    limit: int = DEFAULT_SUBSET_LIMIT,
) -> SolveResult:
    """Minimum-weight set of super tests {x, v} whose refinement isolates
    every vertex.  The returned set holds the probe vertices."""
    _check_limit(g.n - 1, limit)
    if dm is None:
        dm = all_pairs_distances(g)
    probes_all = [v for v in range(g.n) if v != x]
    order = []
    for size in range(1, len(probes_all) + 1):
        for combo in combinations(probes_all, size):
            order.append((g.weight_of(combo), size, combo))
    order.sort()
    for w, _, combo in order:
        sig = dm.a[:, [x]].astype("int64") - dm.a[:, list(combo)]
        if len({row.tobytes() for row in sig}) == g.n:
            return SolveResult(
                set=frozenset(combo),
                weight=w,
                algorithm="oracle-mwsts",
                optimal=True,
                metadata={"anchor": x},
            )
    raise AssertionError("the full probe set always works; unreachable")


def brute_min_dominating_set(g: WeightedGraph, limit: int = DEFAULT_SUBSET_LIMIT) -> list[int]:
    """Minimum-cardinality dominating set, lexicographically least among minimums."""
    _check_limit(g.n, limit)
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            covered = set(combo)
            for v in combo:
                covered.update(g.adjacency[v])
            if len(covered) == g.n:
                return list(combo)
    raise AssertionError("V dominates itself; unreachable")


def brute_min_resolving_set(
    g: WeightedGraph,
    dm: DistanceMatrix | None = None,
    limit: int = DEFAULT_SUBSET_LIMIT,
) -> SolveResult:
    """Minimum-weight resolving set (single-vertex tests), exhaustively."""
    _check_limit(g.n, limit)
    if dm is None:
        dm = all_pairs_distances(g)
    order = []
    for size in range(1, g.n + 1):
        for combo in combinations(range(g.n), size):
            order.append((g.weight_of(combo), size, combo))
    order.sort()
    for w, _, combo in order:
        if is_resolving(dm, combo):
            return SolveResult(
                set=frozenset(combo),
                weight=w,
                algorithm="oracle-md",
                optimal=True,
            )
    raise AssertionError("V resolves itself; unreachable")


def minimal_under_inclusion(dm: DistanceMatrix, S: frozenset[int]) -> bool:
    """True when no proper subset of S is still doubly resolving."""
    return all(not is_drs(dm, S - {v}) for v in S)


__all__ = [
    "DEFAULT_SUBSET_LIMIT",
    "InstanceTooLarge",
    "brute_min_drs",
    "brute_mwsts",
    "brute_min_dominating_set",
    "brute_min_resolving_set",
    "minimal_under_inclusion",
    "signature_matrix",
]
