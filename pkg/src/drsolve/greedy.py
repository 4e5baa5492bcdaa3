"""Greedy observer selection with a logarithmic approximation guarantee.

For a fixed root x, candidate tests are the pairs {x, v}; each test splits the
current vertex partition by the signature d(.,x) - d(.,v), and the greedy
repeatedly takes the test with the best entropy-drop-per-weight until every
vertex sits in its own class.  Running the loop from every root and keeping
the lightest result gives a (ln n + ln log2 n + 1)-approximation for the
minimum-weight doubly resolving set; the same skeleton with single-vertex
tests approximates the weighted metric dimension.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .graph import DistanceMatrix, WeightedGraph, all_pairs_distances
from .resolving import (
    Partition,
    SuperTest,
    _log2_factorial,
    refine_partition,
)
from .result import SolveResult


@dataclass(frozen=True)
class GreedyTrace:
    """One root's greedy run: tests in pick order with the entropy after each."""

    root: int
    chosen: tuple[SuperTest, ...]
    entropy_after: tuple[float, ...]

    def drs(self) -> frozenset[int]:
        return frozenset({self.root} | {t.probe for t in self.chosen})


def information_content(dm: DistanceMatrix, p: Partition, test: SuperTest) -> float:
    """Entropy drop from adding one test to the partition's test set."""
    return p.entropy - refine_partition(dm, p, test).entropy


def _log2fact_table(n: int) -> np.ndarray:
    _log2_factorial(n)
    from .resolving import _LOG2_FACT_CACHE

    return np.asarray(_LOG2_FACT_CACHE[: n + 1], dtype=np.float64)


def _entropies_after_split(cls: np.ndarray, sig: np.ndarray, lf: np.ndarray) -> np.ndarray:
    """Entropy of the partition refined by each signature column, vectorized.

    ``cls`` holds current class ids (n,), ``sig`` is an n x T integer matrix
    whose column t is candidate t's signature.  Runs in O(n*T log n).
    """
    n, t = sig.shape
    span = int(sig.max()) - int(sig.min()) + 1 if n else 1
    keys = cls.astype(np.int64)[:, None] * span + (sig - sig.min())
    keys.sort(axis=0)
    step = int(keys.max()) + 1 if n else 1
    flat = (keys + np.arange(t, dtype=np.int64)[None, :] * step).ravel(order="F")
    starts = np.concatenate(([0], np.flatnonzero(flat[1:] != flat[:-1]) + 1))
    lens = np.diff(np.append(starts, flat.size))
    out = np.zeros(t, dtype=np.float64)
    np.add.at(out, starts // n, lf[lens])
    return out


def _greedy_core(
    sig: np.ndarray, probe_weights: np.ndarray
) -> tuple[list[int], list[float]]:
    """Shared greedy loop: pick signature columns until all classes are singletons.

    Selection order: zero-weight tests with positive entropy drop first, then
    drop/weight descending, then drop descending, then probe index ascending.
    Returns (picked column indices, entropy after each pick).
    """
    n, t = sig.shape
    lf = _log2fact_table(n)
    cls = np.zeros(n, dtype=np.int64)
    n_classes = 1
    h_cur = lf[n]
    used = np.zeros(t, dtype=bool)
    picked: list[int] = []
    entropy_after: list[float] = []
    while n_classes < n:
        h_after = _entropies_after_split(cls, sig, lf)
        ic = h_cur - h_after
        ratio = np.where(
            probe_weights > 0,
            ic / np.where(probe_weights > 0, probe_weights, 1.0),
            np.where(ic > 0, np.inf, 0.0),
        )
        ratio[used] = -1.0
        order = np.lexsort((np.arange(t), -ic, -ratio))
        best = int(order[0])
        if ic[best] <= 1e-9:
            raise AssertionError("no remaining test reduces entropy; cannot happen")
        used[best] = True
        picked.append(best)
        _, cls = np.unique(cls * (sig[:, best].max() - sig[:, best].min() + 1)
                           + sig[:, best], return_inverse=True)
        n_classes = int(cls.max()) + 1
        h_cur = float(h_after[best])
        entropy_after.append(h_cur)
    return picked, entropy_after


def solve_mwsts(g: WeightedGraph, dm: DistanceMatrix, x: int) -> GreedyTrace:
    """Greedy super-test selection for root x; the union of chosen test
    vertices together with x is a doubly resolving set."""
    probes = [v for v in range(g.n) if v != x]
    sig = dm.a[:, [x]].astype(np.int64) - dm.a[:, probes]
    w = np.asarray([g.weights[v] for v in probes], dtype=np.float64)
    picked, entropy_after = _greedy_core(sig, w)
    chosen = tuple(SuperTest(anchor=x, probe=probes[i], weight=float(w[i])) for i in picked)
    return GreedyTrace(root=x, chosen=chosen, entropy_after=tuple(entropy_after))


def max_initial_ic(dm: DistanceMatrix) -> float:
    """max over vertex pairs {u,v} of the entropy drop of that single test."""
    n = dm.n
    lf = _log2fact_table(n)
    zero = np.zeros(n, dtype=np.int64)
    best = 0.0
    for u in range(n):
        sig = dm.a[:, [u]].astype(np.int64) - dm.a
        h_after = _entropies_after_split(zero, sig, lf)
        best = max(best, float(lf[n] - h_after.min()))
    return best


def ratio_bounds(dm: DistanceMatrix) -> dict[str, float]:
    """Instance-dependent and uniform approximation-ratio bounds."""
    n = dm.n
    return {
        "instance_ratio_bound": math.log(max_initial_ic(dm)) + 1.0 if n > 1 else 1.0,
        "uniform_ratio_bound": math.log(n) + math.log(math.log2(n)) + 1.0,
    }


def greedy_mwdrs(
    g: WeightedGraph,
    dm: DistanceMatrix | None = None,
    threads: int = 1,
    with_bounds: bool = True,
) -> SolveResult:
    """Run the greedy from every root and keep the lightest resulting DRS.

    Roots are independent given the shared distance matrix; ties between
    equal-weight results go to the smaller root id.
    """
    if dm is None:
        dm = all_pairs_distances(g)
    roots = range(g.n)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            traces = list(pool.map(lambda x: solve_mwsts(g, dm, x), roots))
    else:
        traces = [solve_mwsts(g, dm, x) for x in roots]
    best_key = None
    best: GreedyTrace | None = None
    for trace in traces:
        s = trace.drs()
        key = (g.weight_of(s), trace.root)
        if best_key is None or key < best_key:
            best_key = key
            best = trace
    assert best is not None
    meta: dict = {"root": best.root}
    if with_bounds:
        meta.update(ratio_bounds(dm))
    return SolveResult(
        set=best.drs(),
        weight=best_key[0],
        algorithm="greedy",
        optimal=False,
        metadata=meta,
    )


def greedy_weighted_md(
    g: WeightedGraph, dm: DistanceMatrix | None = None
) -> SolveResult:
    """Greedy weighted resolving set: same loop with single-vertex tests."""
    if dm is None:
        dm = all_pairs_distances(g)
    sig = dm.a.astype(np.int64)
    w = np.asarray(g.weights, dtype=np.float64)
    picked, _ = _greedy_core(sig, w)
    chosen = frozenset(picked)
    return SolveResult(
        set=chosen,
        weight=g.weight_of(chosen),
        algorithm="greedy-md",
        optimal=False,
    )
