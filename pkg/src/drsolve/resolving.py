"""Double resolvability, distance-difference partitions, and source localization.

A set S doubly resolves the graph when every vertex pair u,v admits x,y in S
with d(u,x)-d(u,y) != d(v,x)-d(v,y).  Such sets are exactly the observer
placements that pin down a unit-delay diffusion source with unknown start
time; `locate_source` implements that reading.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import DistanceMatrix

_LOG2_FACT_CACHE: list[float] = [0.0, 0.0]


def _log2_factorial(k: int) -> float:
    while len(_LOG2_FACT_CACHE) <= k:
        i = len(_LOG2_FACT_CACHE)
        _LOG2_FACT_CACHE.append(_LOG2_FACT_CACHE[-1] + math.log2(i))
    return _LOG2_FACT_CACHE[k]


@dataclass(frozen=True)
class SuperTest:
    """A pair {anchor, probe}; its cost is the probe's weight only."""

    anchor: int
    probe: int
    weight: float


@dataclass(frozen=True)
class Partition:
    """Equivalence classes of vertices under a set of distance-difference tests.

    entropy = sum(log2(|class|!)); zero iff every class is a singleton.
    """

    class_of: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]
    entropy: float

    @property
    def discrete(self) -> bool:
        """Structural all-singletons check (never decided by the float entropy)."""
        return len(self.classes) == len(self.class_of)


def partition_entropy(class_sizes) -> float:
    return float(sum(_log2_factorial(s) for s in class_sizes))


def single_class_partition(n: int) -> Partition:
    return Partition(
        class_of=tuple([0] * n),
        classes=(tuple(range(n)),),
        entropy=_log2_factorial(n),
    )


def _partition_from_class_of(class_of: list[int]) -> Partition:
    buckets: dict[int, list[int]] = {}
    for v, c in enumerate(class_of):
        buckets.setdefault(c, []).append(v)
    classes = tuple(tuple(b) for b in buckets.values())
    return Partition(
        class_of=tuple(class_of),
        classes=classes,
        entropy=partition_entropy(len(c) for c in classes),
    )


def entropy(p: Partition) -> float:
    """Entropy of a partition: sum of log2(|class|!) over its classes."""
    return partition_entropy(len(c) for c in p.classes)


def doubly_resolves(dm: DistanceMatrix, x: int, y: int, u: int, v: int) -> bool:
    """True iff the pair {x,y} doubly resolves the pair {u,v}."""
    a = dm.a
    return int(a[u, x]) - int(a[u, y]) != int(a[v, x]) - int(a[v, y])


def refine_partition(dm: DistanceMatrix, p: Partition, test: SuperTest) -> Partition:
    """Split every class of ``p`` by the signature d(v, anchor) - d(v, probe)."""
    diff = dm.a[:, test.anchor].astype(np.int64) - dm.a[:, test.probe]
    class_of = list(p.class_of)
    next_id = 0
    relabel: dict[tuple[int, int], int] = {}
    for v in range(dm.n):
        key = (class_of[v], int(diff[v]))
        if key not in relabel:
            relabel[key] = next_id
            next_id += 1
        class_of[v] = relabel[key]
    return _partition_from_class_of(class_of)


def signature_matrix(dm: DistanceMatrix, S: list[int]) -> np.ndarray:
    """Per-vertex signatures d(v,s) - d(v,s0) for s in S, anchored at S[0].

    Equality of all pairwise distance differences over S is equivalent to
    equality against the fixed anchor, so grouping rows of this matrix yields
    the equivalence classes under all super tests {s0, s}.
    """
    cols = dm.a[:, S].astype(np.int64)
    return cols - cols[:, :1]


def is_drs(dm: DistanceMatrix, S) -> bool:
    """True iff S (|S| >= 2) doubly resolves every vertex pair."""
    S = sorted(set(S))
    if len(S) < 2:
        return False
    sig = signature_matrix(dm, S)
    return len({row.tobytes() for row in sig}) == dm.n


def is_resolving(dm: DistanceMatrix, S) -> bool:
    """True iff every vertex pair differs in distance to some vertex of S."""
    S = sorted(set(S))
    if not S:
        return dm.n == 1
    rows = dm.a[:, S]
    return len({row.tobytes() for row in rows}) == dm.n


def ambiguous_witness(dm: DistanceMatrix, S) -> tuple[int, int] | None:
    """A pair of vertices S cannot tell apart, or None when S is a DRS.

    Returns the lexicographically smallest such pair.
    """
    S = sorted(set(S))
    if len(S) < 2:
        return (0, 1)
    sig = signature_matrix(dm, S)
    first_seen: dict[bytes, int] = {}
    best: tuple[int, int] | None = None
    for v in range(dm.n):
        key = sig[v].tobytes()
        if key in first_seen:
            pair = (first_seen[key], v)
            if best is None or pair < best:
                best = pair
        else:
            first_seen[key] = v
    return best


@dataclass(frozen=True)
class LocalizationResult:
    """Outcome of source localization from observer report times.

    outcome is "unique", "ambiguous", or "inconsistent"; ``candidates`` maps
    each feasible source to its inferred start time.
    """

    outcome: str
    candidates: tuple[tuple[int, int], ...] = ()

    @property
    def source(self) -> int | None:
        return self.candidates[0][0] if self.outcome == "unique" else None

    @property
    def start_time(self) -> int | None:
        return self.candidates[0][1] if self.outcome == "unique" else None


def locate_source(dm: DistanceMatrix, S, times: dict[int, int]) -> LocalizationResult:
    """Infer the diffusion source from the times observers first saw it.

    A vertex u is a candidate when t_x - d(u,x) is the same constant c for
    every observer x; c is the inferred start time.  Non-integer report times
    are rejected as inconsistent rather than rounded.
    """
    S = sorted(set(S))
    if not S:
        raise ValueError("empty observer set")
    for x in S:
        if not (0 <= x < dm.n):
            raise ValueError(f"observer {x} not in graph")
    if set(times) != set(S):
        raise ValueError("times must be keyed exactly by the observer set")
    vals = list(times.values())
    if any(float(t) != int(t) for t in vals):
        return LocalizationResult(outcome="inconsistent")
    candidates = []
    for u in range(dm.n):
        offsets = {int(times[x]) - dm.d(u, x) for x in S}
        if len(offsets) == 1:
            candidates.append((u, offsets.pop()))
    if not candidates:
        return LocalizationResult(outcome="inconsistent")
    outcome = "unique" if len(candidates) == 1 else "ambiguous"
    return LocalizationResult(outcome=outcome, candidates=tuple(candidates))


def simulate_times(dm: DistanceMatrix, S, source: int, start_time: int = 0) -> dict[int, int]:
    """Report times seen by observers when ``source`` starts at ``start_time``."""
    return {x: start_time + dm.d(source, x) for x in S}
