"""Exact solvers: trees, cycles, and trees with k extra edges.

Trees have a unique minimal doubly resolving set (their leaves).  Cycles are
solved in linear time by scanning a prefix-minimum index list.  For k extra
edges, the instance is reduced to its leafless base graph (roots weighted
zero), the base is decomposed into chains between branching vertices, and a
bounded per-chain enumeration finds the optimum, which is then recombined
with the leaf set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from .graph import WeightedGraph, all_pairs_distances
from .greedy import greedy_mwdrs
from .resolving import is_drs
from .result import SolveResult

DEFAULT_KAUG_BUDGET = 50_000_000


class WrongGraphClass(ValueError):
    """Raised when a solver receives a graph outside its class."""


def solve_tree(g: WeightedGraph) -> SolveResult:
    """The leaf set: it is contained in every DRS of a tree and suffices."""
    if g.m != g.n - 1:
        raise WrongGraphClass("not a tree")
    leaves = frozenset(g.leaves())
    return SolveResult(
        set=leaves,
        weight=g.weight_of(leaves),
        algorithm="tree",
        optimal=True,
    )


def is_drs_cycle(n: int, S) -> bool:
    """Arc-length test on a cycle: S is doubly resolving iff no arc between
    consecutive chosen vertices exceeds ceil(n/2) and some arc is shorter
    than n/2."""
    S = sorted(set(S))
    if not S:
        return False
    arcs = [S[i + 1] - S[i] for i in range(len(S) - 1)]
    arcs.append(n - S[-1] + S[0])
    return max(arcs) <= (n + 1) // 2 and min(arcs) * 2 < n


def _cycle_order(g: WeightedGraph) -> list[int]:
    order = [0]
    prev, cur = -1, 0
    while len(order) < g.n:
        nxt = min(v for v in g.adjacency[cur] if v != prev)
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def _cycle_scan(ws: list[float], order: list[int]) -> tuple[float, frozenset[int]]:
    """One directed pass of the prefix-minimum scan.

    ``order`` lists original vertex ids around the cycle; it must be rotated
    so the minimum weight sits at 1-based position p = ceil(n/2).  Considers
    all antipodal-ish pairs (odd n) and the triples {v_p, v_i[j], u_j} built
    from the prefix-minimum index list.
    """
    n = len(ws)
    p = (n + 1) // 2

    def w(pos: int) -> float:  # 1-based position
        return ws[(pos - 1) % n]

    def vid(pos: int) -> int:
        return order[(pos - 1) % n]

    best_w = math.inf
    best: frozenset[int] = frozenset()

    def consider(positions) -> None:
        nonlocal best_w, best
        slots = {(q - 1) % n for q in positions}
        if not is_drs_cycle(n, slots):
            raise AssertionError(f"candidate at {sorted(slots)} is not doubly resolving")
        total = sum(ws[i] for i in slots)
        if total < best_w:
            best_w, best = total, frozenset(order[i] for i in slots)

    if n % 2 == 1:
        for i in range(1, n + 1):
            consider((i, i + p - 1))

    ilist = [1]
    omega = w(1)
    for h in range(2, p + 1):
        if w(h) < omega:
            ilist.append(h)
            omega = w(h)
    if ilist[-1] != p:
        ilist.append(p)
    for j in range(len(ilist) - 1):
        lo, hi = ilist[j] + p, ilist[j + 1] + p
        u = min(range(lo, hi + 1), key=lambda q: (w(q), q))
        consider((p, ilist[j], u))
    return best_w, best


def solve_cycle(g: WeightedGraph) -> SolveResult:
    """Minimum-weight DRS of a cycle in O(n).

    The scan's prefix-minimum argument fixes one orientation, and the
    canonical candidate form is not mirror-symmetric, so the pass runs on
    both orientations and keeps the better result.
    """
    if not (g.m == g.n and all(g.degree(v) == 2 for v in range(g.n))):
        raise WrongGraphClass("not a cycle")
    n = g.n
    p = (n + 1) // 2
    order_cw = _cycle_order(g)
    target = min(range(n), key=lambda v: (g.weights[v], v))
    best_w = math.inf
    best: frozenset[int] = frozenset()
    for order in (order_cw, list(reversed(order_cw))):
        idx = order.index(target)
        rotated = [order[(idx - (p - 1) + i) % n] for i in range(n)]
        ws = [g.weights[v] for v in rotated]
        cand_w, cand = _cycle_scan(ws, rotated)
        if cand_w < best_w:
            best_w, best = cand_w, cand
    return SolveResult(set=best, weight=best_w, algorithm="cycle", optimal=True)


@dataclass(frozen=True)
class BaseGraphReduction:
    """Leafless core of a graph, with zero weight on the attachment roots.

    ``embed`` maps base-local vertex ids to original ids; ``roots`` are
    base-local; ``leaves`` are original ids of degree-1 vertices of g.
    """

    base: WeightedGraph
    embed: tuple[int, ...]
    roots: frozenset[int]
    leaves: frozenset[int]

    def recombine(self, base_set) -> frozenset[int]:
        """Lift a base DRS back to the original graph: drop roots, add leaves."""
        kept = {self.embed[v] for v in base_set if v not in self.roots}
        return frozenset(kept | self.leaves)


def base_graph(g: WeightedGraph) -> BaseGraphReduction:
    """Iterated leaf deletion; errors on trees (nothing would remain)."""
    if g.m == g.n - 1:
        raise WrongGraphClass("tree has an empty base graph; use solve_tree")
    deg = [g.degree(v) for v in range(g.n)]
    removed = [False] * g.n
    stack = [v for v in range(g.n) if deg[v] == 1]
    while stack:
        v = stack.pop()
        removed[v] = True
        for u in g.adjacency[v]:
            if not removed[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    kept = [v for v in range(g.n) if not removed[v]]
    local = {v: i for i, v in enumerate(kept)}
    roots = frozenset(
        local[v] for v in kept if any(removed[u] for u in g.adjacency[v])
    )
    weights = [0.0 if local[v] in roots else g.weights[v] for v in kept]
    edges = [
        (local[u], local[v])
        for u, v in g.edges
        if not removed[u] and not removed[v]
    ]
    base = WeightedGraph.build(len(kept), edges, weights)
    return BaseGraphReduction(
        base=base,
        embed=tuple(kept),
        roots=roots,
        leaves=frozenset(g.leaves()),
    )


@dataclass(frozen=True)
class PathDecomposition:
    """Edge-disjoint chains covering the base graph.

    Every chain runs between branching vertices (degree >= 3) through
    degree-2 interiors; a cycle attached at a single branching vertex
    appears as one closed chain with equal endpoints.
    """

    paths: tuple[tuple[int, ...], ...]

    @property
    def q(self) -> int:
        return len(self.paths)


def path_decomposition(gb: WeightedGraph) -> PathDecomposition:
    branching = [v for v in range(gb.n) if gb.degree(v) >= 3]
    if not branching:
        raise WrongGraphClass("no branching vertex; base graph is a cycle")
    used: set[tuple[int, int]] = set()

    def mark(u: int, v: int) -> None:
        used.add((u, v) if u < v else (v, u))

    def is_used(u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in used

    paths: list[tuple[int, ...]] = []
    for b in branching:
        for nb in gb.adjacency[b]:
            if is_used(b, nb):
                continue
            chain = [b]
            mark(b, nb)
            prev, cur = b, nb
            while gb.degree(cur) == 2:
                chain.append(cur)
                nxt = next(u for u in gb.adjacency[cur] if u != prev)
                mark(cur, nxt)
                prev, cur = cur, nxt
            chain.append(cur)
            paths.append(tuple(chain))
    return PathDecomposition(paths=tuple(paths))


def _enumeration_units(decomp: PathDecomposition, max_per_path: int = 4) -> list[list[int]]:
    """Vertex pools to draw from, splitting closed chains at a middle interior
    vertex so each half obeys the per-path cap independently."""
    units: list[list[int]] = []
    for path in decomp.paths:
        if path[0] == path[-1]:
            interior = list(path[1:-1])
            mid = len(interior) // 2
            units.append([path[0]] + interior[: mid + 1])
            units.append(interior[mid:] + [path[0]])
        else:
            units.append(list(path))
    return units


def _subset_pool(gb: WeightedGraph, unit: list[int], cap: int) -> list[tuple[float, frozenset[int]]]:
    verts = sorted(set(unit))
    pool = [(0.0, frozenset())]
    for size in range(1, min(cap, len(verts)) + 1):
        for combo in combinations(verts, size):
            pool.append((gb.weight_of(combo), frozenset(combo)))
    pool.sort(key=lambda t: (t[0], sorted(t[1])))
    return pool


def enumeration_size(g: WeightedGraph) -> int:
    """Upper bound on candidate sets solve_kaug would enumerate for g."""
    red = base_graph(g)
    decomp = path_decomposition(red.base)
    total = 1
    for unit in _enumeration_units(decomp):
        verts = len(set(unit))
        total *= sum(math.comb(verts, s) for s in range(0, min(4, verts) + 1))
    return total


def solve_kaug(g: WeightedGraph, budget: int = DEFAULT_KAUG_BUDGET) -> SolveResult:
    """Exact minimum-weight DRS of a tree plus k extra edges.

    k = 0 and k = 1 delegate to the tree and cycle solvers (via the base
    reduction); k >= 2 enumerates at most four chosen vertices per chain of
    the base decomposition.  If the enumeration would exceed ``budget``
    candidate sets, falls back to the greedy with optimal=False.
    """
    k = g.m - g.n + 1
    if k == 0:
        res = solve_tree(g)
        return SolveResult(set=res.set, weight=res.weight, algorithm="ktree",
                           optimal=True, metadata={"k": 0})
    red = base_graph(g)
    if k == 1:
        base_res = solve_cycle(red.base)
        s = red.recombine(base_res.set)
        return SolveResult(
            set=s, weight=g.weight_of(s), algorithm="ktree", optimal=True,
            metadata={"k": 1},
        )
    decomp = path_decomposition(red.base)
    units = _enumeration_units(decomp)
    est = 1
    for unit in units:
        verts = len(set(unit))
        est *= sum(math.comb(verts, s) for s in range(0, min(4, verts) + 1))
    if est > budget:
        res = greedy_mwdrs(g)
        meta = dict(res.metadata)
        meta.update({"k": k, "fallback": "greedy", "enumeration_estimate": est})
        return SolveResult(set=res.set, weight=res.weight, algorithm="greedy",
                           optimal=False, metadata=meta)

    units.sort(key=lambda u: -len(set(u)))
    pools = [_subset_pool(red.base, u, 4) for u in units]
    base_dm = all_pairs_distances(red.base)

    best_w = math.inf
    best_set: frozenset[int] | None = None

    def dfs(i: int, cur: frozenset[int], cur_w: float) -> None:
        nonlocal best_w, best_set
        if cur_w >= best_w:
            return
        if is_drs(base_dm, cur):
            best_w, best_set = cur_w, cur
            return
        if i == len(pools):
            return
        for _, sub in pools[i]:
            add = sub - cur
            add_w = red.base.weight_of(add)
            if cur_w + add_w < best_w:
                dfs(i + 1, cur | add, cur_w + add_w)

    dfs(0, frozenset(), 0.0)
    if best_set is None:
        raise AssertionError("per-chain enumeration found no doubly resolving set")
    s = red.recombine(best_set)
    return SolveResult(
        set=s, weight=g.weight_of(s), algorithm="ktree", optimal=True,
        metadata={"k": k, "q": decomp.q, "enumeration_estimate": est},
    )
