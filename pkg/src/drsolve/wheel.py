"""Exact minimum-weight DRS on wheels (a cycle plus a hub joined to some rim).

Complete wheels reduce to a circular covering condition: at least one chosen
vertex in every 3 consecutive rim vertices and at least two in every 5, solved
by a linear dynamic program over gap patterns.

General wheels with at least 13 connectors use the closeness geometry: each
rim vertex s is "close" to the rim arc P_s it can reach without routing
through the hub.  A rim set is doubly resolving iff every rim vertex is close
to it, each observer's minimal bad pair is covered by a consecutive observer,
and the set is left- and right-continuous at every observer
(`check_wheel_drs`).  The DP sweeps the rim clockwise from a forced anchor
observer, carrying those conditions in two table pairs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .graph import DistanceMatrix, WeightedGraph, all_pairs_distances, classify
from .greedy import greedy_mwdrs
from .oracle import DEFAULT_SUBSET_LIMIT, brute_min_drs
from .result import SolveResult
from .trees import DEFAULT_KAUG_BUDGET, WrongGraphClass, enumeration_size, solve_kaug

LEFT, RIGHT = 0, 1
_MIN_CONNECTORS_FOR_DP = 13


@dataclass(frozen=True)
class WheelGeometry:
    """Closeness geometry of a wheel, on 0-based rim positions.

    ``rim[i]`` is the original vertex id at clockwise position i; ``rd`` and
    ``hd`` are rim-rim and rim-hub hop distances.  ``ext_ccw``/``ext_cw``
    give the reach of the closeness arc P_i on each side, and ``min_bad[i]``
    is the offset of position i's minimal bad pair (None when it has none).
    """

    hub: int
    rim: tuple[int, ...]
    connectors: frozenset[int]
    rd: np.ndarray = field(repr=False)
    hd: np.ndarray = field(repr=False)
    ext_ccw: tuple[int, ...]
    ext_cw: tuple[int, ...]
    min_bad: tuple[int | None, ...]

    def __post_init__(self):
        # plain-list mirrors: scalar indexing in the hot loops below is far
        # cheaper on lists than on numpy arrays
        object.__setattr__(self, "_rd", self.rd.tolist())
        object.__setattr__(self, "_hd", self.hd.tolist())

    @property
    def n_rim(self) -> int:
        return len(self.rim)

    def cw(self, i: int, j: int) -> int:
        return (j - i) % self.n_rim

    def close(self, i: int, j: int) -> bool:
        return self._rd[i][j] < self._hd[i] + self._hd[j]

    def close_from_left(self, x: int, s: int) -> bool:
        """x is close to s and a clockwise rim walk from x realizes d(x,s)."""
        return self.close(x, s) and self._rd[x][s] == self.cw(x, s)

    def close_from_right(self, x: int, s: int) -> bool:
        return self.close(x, s) and self._rd[x][s] == self.cw(s, x)

    def arc_size(self, i: int) -> int:
        return self.ext_ccw[i] + self.ext_cw[i] + 1

    def position_of(self, vertex: int) -> int:
        return self.rim.index(vertex)


def _rim_cycle_order(g: WeightedGraph, hub: int) -> list[int]:
    start = min(v for v in range(g.n) if v != hub)
    order = [start]
    prev, cur = -1, start
    while len(order) < g.n - 1:
        choices = [v for v in g.adjacency[cur] if v != hub and v != prev]
        if len(choices) != 1 and prev == -1:
            nxt = min(choices)
        elif len(choices) == 1:
            nxt = choices[0]
        else:
            raise WrongGraphClass("rim is not a single cycle")
        order.append(nxt)
        prev, cur = cur, nxt
    return order


def wheel_geometry(g: WeightedGraph, hub: int, dm: DistanceMatrix | None = None) -> WheelGeometry:
    """Compute closeness arcs, and minimal bad pairs, for every rim vertex."""
    if dm is None:
        dm = all_pairs_distances(g)
    rim = _rim_cycle_order(g, hub)
    n_rim = len(rim)
    idx = np.asarray(rim, dtype=np.intp)
    rd = dm.a[np.ix_(idx, idx)].astype(np.int64)
    hd = dm.a[idx, hub].astype(np.int64)
    connectors = frozenset(v for v in g.adjacency[hub])

    close = rd < (hd[:, None] + hd[None, :])
    ext_ccw = []
    ext_cw = []
    for s in range(n_rim):
        t = 0
        while t < n_rim - 1 and close[(s - t - 1) % n_rim, s]:
            t += 1
        ext_ccw.append(t)
        t = 0
        while t < n_rim - 1 and close[(s + t + 1) % n_rim, s]:
            t += 1
        ext_cw.append(t)

    geom = WheelGeometry(
        hub=hub,
        rim=tuple(rim),
        connectors=connectors,
        rd=rd,
        hd=hd,
        ext_ccw=tuple(ext_ccw),
        ext_cw=tuple(ext_cw),
        min_bad=(),
    )
    min_bad: list[int | None] = []
    for s in range(n_rim):
        found: int | None = None
        for j in range(1, n_rim - 1):
            x, y = (s - j) % n_rim, (s + j) % n_rim
            if x == y:
                continue
            if (
                geom.close_from_left(x, s)
                and geom.close_from_right(y, s)
                and hd[x] == hd[y]
            ):
                found = j
                break
        min_bad.append(found)
    object.__setattr__(geom, "min_bad", tuple(min_bad))
    return geom


def _left_continuous_at(geom: WheelGeometry, s: int, sm: int) -> bool:
    """Every rim vertex between sm and s whose distances to both s and the hub
    drop by exactly one at the next clockwise step must be close to sm."""
    n = geom.n_rim
    for t in range(geom.cw(sm, s)):
        x = (sm + t) % n
        x1 = (x + 1) % n
        if (
            geom.close_from_left(x, s)
            and geom._rd[x][s] - geom._rd[x1][s] == 1
            and geom._hd[x] - geom._hd[x1] == 1
            and not geom.close_from_right(x, sm)
        ):
            return False
    return True


def _right_continuous_at(geom: WheelGeometry, s: int, sp: int) -> bool:
    n = geom.n_rim
    for t in range(geom.cw(s, sp)):
        x = (s + 1 + t) % n
        x1 = (x - 1) % n
        if (
            geom.close_from_right(x, s)
            and geom._rd[x][s] - geom._rd[x1][s] == 1
            and geom._hd[x] - geom._hd[x1] == 1
            and not geom.close_from_left(x, sp)
        ):
            return False
    return True


def _covers_bad_pair(geom: WheelGeometry, s: int, other: int) -> bool:
    j = geom.min_bad[s]
    if j is None:
        return True
    n = geom.n_rim
    x, y = (s - j) % n, (s + j) % n
    return geom.close(other, x) or geom.close(other, y)


def check_wheel_drs(geom: WheelGeometry, S) -> bool:
    """Closeness/coverage/continuity characterization of rim DRSs.

    S holds original vertex ids, all on the rim; the hub is rejected.  Only
    meaningful on wheels with at least 13 connectors.
    """
    S = set(S)
    if geom.hub in S:
        raise ValueError("hub may not be an observer here; use the generic verifier")
    pos = sorted(geom.position_of(v) for v in S)
    if len(pos) < 2:
        return False
    n = geom.n_rim
    close_any = [False] * n
    for s in pos:
        for t in range(-geom.ext_ccw[s], geom.ext_cw[s] + 1):
            close_any[(s + t) % n] = True
    if not all(close_any):
        return False
    for i, s in enumerate(pos):
        sm = pos[i - 1]
        sp = pos[(i + 1) % len(pos)]
        if not (_covers_bad_pair(geom, s, sm) or _covers_bad_pair(geom, s, sp)):
            return False
        if not _left_continuous_at(geom, s, sm):
            return False
        if not _right_continuous_at(geom, s, sp):
            return False
    return True


def rim_windows_feasible(n_rim: int, positions) -> bool:
    """Complete-wheel condition: >=1 chosen in every 3 consecutive rim
    vertices and >=2 in every 5 consecutive."""
    chosen = [False] * n_rim
    for p in positions:
        chosen[p] = True
    for start in range(n_rim):
        if not any(chosen[(start + t) % n_rim] for t in range(3)):
            return False
        if sum(chosen[(start + t) % n_rim] for t in range(5)) < 2:
            return False
    return True


def _complete_wheel_dp(weights: list[float]) -> tuple[float, list[int]]:
    """Minimum-weight circular selection with all gaps <= 3 and no two
    adjacent gaps both equal to 3 (equivalent to the window conditions)."""
    n = len(weights)
    best_w = math.inf
    best: list[int] = []
    for first in range(min(3, n)):
        # state: (offset since last chosen, last gap was 3, first gap was 3)
        start_state = (0, False, None)
        dp: dict[tuple, tuple[float, tuple]] = {start_state: (weights[first], (first,))}
        for q in range(first + 1, n):
            nxt: dict[tuple, tuple[float, tuple]] = {}

            def push(state, w, sel):
                cur = nxt.get(state)
                if cur is None or w < cur[0]:
                    nxt[state] = (w, sel)

            for (d, last3, first3), (w, sel) in dp.items():
                if d + 1 <= 2:
                    push((d + 1, last3, first3), w, sel)
                gap = d + 1
                if not (gap == 3 and last3):
                    f3 = (gap == 3) if first3 is None else first3
                    push((0, gap == 3, f3), w + weights[q], sel + (q,))
            dp = nxt
        for (d, last3, first3), (w, sel) in dp.items():
            wrap = d + 1 + first
            if wrap > 3 or first3 is None:
                continue
            if wrap == 3 and (last3 or first3):
                continue
            if w < best_w:
                best_w, best = w, list(sel)
    return best_w, best


def solve_complete_wheel(g: WeightedGraph, hub: int | None = None) -> SolveResult:
    """Linear DP over rim gap patterns; delegates to brute force below n=7.

    The window characterization needs a rim of at least 6: on the 5-rim
    wheel, positions {0,3} satisfy both windows yet leave the hub and the
    doubly-dominated rim vertex unresolved.
    """
    cls = classify(g)
    if cls.tag != "complete-wheel":
        raise WrongGraphClass("not a complete wheel")
    if hub is None:
        hub = cls.hub
    if g.n < 7:
        res = brute_min_drs(g)
        return SolveResult(set=res.set, weight=res.weight, algorithm="complete-wheel",
                           optimal=True, metadata={"delegated": "oracle"})
    rim = _rim_cycle_order(g, hub)
    weights = [g.weights[v] for v in rim]
    best_w, positions = _complete_wheel_dp(weights)
    chosen = frozenset(rim[p] for p in positions)
    return SolveResult(
        set=chosen, weight=best_w, algorithm="complete-wheel", optimal=True,
        metadata={"hub": hub},
    )


class _AnchoredTables:
    """Trimmed closeness ranges and continuity offsets after rotating the rim
    so a candidate anchor observer sits at 1-based position 1.

    Positions 2..N use ranges cut at the position-1 boundary; position 1
    keeps its full circular arc, with left-side quantities expressed as the
    high position values n - delta.
    """

    def __init__(self, geom: WheelGeometry, anchor: int):
        self.geom = geom
        self.anchor = anchor
        n = geom.n_rim
        self.n = n
        self.rimpos = [(anchor + q - 1) % n for q in range(n + 1)]  # 1-based
        self.l = [0] * (n + 1)
        self.r = [0] * (n + 1)
        self.dl: list[float] = [math.inf] * (n + 1)
        self.dr: list[float] = [math.inf] * (n + 1)
        self.dd: list[float] = [math.inf] * (n + 1)
        for q in range(1, n + 1):
            rp = self.rimpos[q]
            if q == 1:
                span_l, span_r = geom.ext_ccw[rp], geom.ext_cw[rp]
                self.l[1] = n - span_l + 1 if span_l else 1
                self.r[1] = 1 + span_r
            else:
                span_l = min(geom.ext_ccw[rp], q - 1)
                span_r = min(geom.ext_cw[rp], n - q)
                self.l[q] = q - span_l
                self.r[q] = q + span_r
            self.dl[q] = self._delta_left(rp, span_l)
            self.dr[q] = self._delta_right(rp, span_r)
            self.dd[q] = self._delta_bad(rp, span_l, span_r)

    def _delta_left(self, rp: int, span: int) -> float:
        geom, n = self.geom, self.n
        for j in range(1, min(span, n - 2) + 1):
            x, x1 = (rp - j) % n, (rp - j + 1) % n
            if geom._rd[x][rp] - geom._rd[x1][rp] == 1 and geom._hd[x] - geom._hd[x1] == 1:
                return j
        return math.inf

    def _delta_right(self, rp: int, span: int) -> float:
        geom, n = self.geom, self.n
        for j in range(1, min(span, n - 2) + 1):
            x, x1 = (rp + j) % n, (rp + j - 1) % n
            if geom._rd[x][rp] - geom._rd[x1][rp] == 1 and geom._hd[x] - geom._hd[x1] == 1:
                return j
        return math.inf

    def _delta_bad(self, rp: int, span_l: int, span_r: int) -> float:
        geom, n = self.geom, self.n
        for j in range(1, min(span_l, span_r, n - 2) + 1):
            x, y = (rp - j) % n, (rp + j) % n
            if x == y:
                continue
            if (
                geom.close_from_left(x, rp)
                and geom.close_from_right(y, rp)
                and geom._hd[x] == geom._hd[y]
            ):
                return j
        return math.inf


def _wheel_dp_one_anchor(
    geom: WheelGeometry, weights: list[float], anchor: int, return_tables: bool = False
):
    """One clockwise sweep assuming the rim vertex ``anchor`` is an observer.

    F tracks states whose newest observer already has its bad pair handled
    on the left (or deferred to the right); the primed table additionally
    defers the anchor's own bad pair to the closing step.  Returns
    (weight, rim positions) or (inf, empty) when no feasible set contains
    the anchor.
    """
    tab = _AnchoredTables(geom, anchor)
    n = tab.n
    c = [0.0] + [weights[tab.rimpos[q]] for q in range(1, n + 1)]

    INF = math.inf
    F = [[INF, INF] for _ in range(n + 1)]
    Fp = [[INF, INF] for _ in range(n + 1)]
    parent: dict[tuple[int, int, int], tuple[int, int, int] | None] = {}
    F[1][RIGHT] = Fp[1][LEFT] = Fp[1][RIGHT] = c[1]
    parent[(1, 0, RIGHT)] = None
    parent[(1, 1, LEFT)] = None
    parent[(1, 1, RIGHT)] = None

    def in_alpha(sp: int, s: int) -> bool:
        return (
            tab.r[sp] >= tab.l[s] - 1
            and tab.r[sp] >= s - tab.dl[s]
            and sp + tab.dr[sp] >= tab.l[s]
        )

    def best_over(table: list[list[float]], side: int, pool: list[int], ti: int):
        val, arg = INF, None
        for sp in pool:
            if table[sp][side] < val:
                val, arg = table[sp][side], (sp, ti, side)
        return val, arg

    for s in range(2, n + 1):
        alpha = [sp for sp in range(1, s) if in_alpha(sp, s)]
        beta = [sp for sp in alpha if tab.r[sp] >= s - tab.dd[s]]
        gamma = [sp for sp in alpha if tab.l[s] <= sp + tab.dd[sp]]
        bg = [sp for sp in beta if tab.l[s] <= sp + tab.dd[sp]]

        for ti, table in ((0, F), (1, Fp)):
            v_left, a_left = best_over(table, LEFT, beta, ti)
            v2, a2 = best_over(table, RIGHT, bg, ti)
            if v2 < v_left:
                v_left, a_left = v2, a2
            if v_left < INF:
                table[s][LEFT] = v_left + c[s]
                parent[(s, ti, LEFT)] = a_left

        v, a = best_over(F, LEFT, alpha, 0)
        v2, a2 = best_over(F, RIGHT, gamma, 0)
        if v2 < v:
            v, a = v2, a2
        if v < INF:
            F[s][RIGHT] = v + c[s]
            parent[(s, 0, RIGHT)] = a

        if 1 in alpha:
            Fp[s][RIGHT] = c[1] + c[s]
            parent[(s, 1, RIGHT)] = (1, 1, RIGHT)
        else:
            v, a = best_over(Fp, LEFT, alpha, 1)
            v2, a2 = best_over(Fp, RIGHT, gamma, 1)
            if v2 < v:
                v, a = v2, a2
            if v < INF:
                Fp[s][RIGHT] = v + c[s]
                parent[(s, 1, RIGHT)] = a

    # closing conditions at the anchor; left-side offsets wrap to n+1 - delta
    npos = n + 1
    alpha1 = [
        s
        for s in range(2, n + 1)
        if tab.r[s] >= tab.l[1] - 1
        and tab.r[s] >= npos - tab.dl[1]
        and s + tab.dr[s] >= tab.l[1]
    ]
    beta1 = [s for s in alpha1 if tab.r[s] >= npos - tab.dd[1]]
    gamma1 = [s for s in alpha1 if tab.l[1] <= s + tab.dd[s]]
    bg1 = [s for s in beta1 if tab.l[1] <= s + tab.dd[s]]

    best = INF
    best_key: tuple[int, int, int] | None = None
    for pool, table, ti, side in (
        (alpha1, F, 0, LEFT),
        (beta1, Fp, 1, LEFT),
        (gamma1, F, 0, RIGHT),
        (bg1, Fp, 1, RIGHT),
    ):
        for s in pool:
            if table[s][side] < best:
                best = table[s][side]
                best_key = (s, ti, side)
    if best_key is None:
        return (INF, frozenset(), F, Fp) if return_tables else (INF, frozenset())
    chosen: set[int] = set()
    key: tuple[int, int, int] | None = best_key
    while key is not None:
        chosen.add(key[0])
        key = parent[key]
    positions = frozenset(tab.rimpos[q] for q in chosen)
    return (best, positions, F, Fp) if return_tables else (best, positions)


def solve_general_wheel(
    g: WeightedGraph,
    hub: int | None = None,
    budget: int = DEFAULT_KAUG_BUDGET,
    oracle_limit: int = DEFAULT_SUBSET_LIMIT,
) -> SolveResult:
    """Cubic-time DP for wheels with >= 13 connectors.

    Wheels below the connector threshold are outside the DP's validity:
    they are k-edge-augmented trees, so this routes them to the chain
    enumeration when it fits the budget, then the subset oracle, then the
    greedy (optimal flag False only in the last case).
    """
    cls = classify(g)
    if cls.tag not in ("wheel", "complete-wheel"):
        raise WrongGraphClass("not a wheel")
    if hub is None:
        hub = cls.hub
    if g.degree(hub) < _MIN_CONNECTORS_FOR_DP:
        return _small_wheel_fallback(g, budget, oracle_limit)
    dm = all_pairs_distances(g)
    geom = wheel_geometry(g, hub, dm)
    rim_weights = [g.weights[v] for v in geom.rim]
    a = min(range(geom.n_rim), key=lambda s: (geom.arc_size(s), s))
    anchors = [
        (a + t) % geom.n_rim
        for t in range(-geom.ext_ccw[a], geom.ext_cw[a] + 1)
    ]
    best_w = math.inf
    best_positions: frozenset[int] = frozenset()
    for anchor in anchors:
        w, positions = _wheel_dp_one_anchor(geom, rim_weights, anchor)
        if w < best_w:
            best_w, best_positions = w, positions
    if not best_positions:
        raise AssertionError("no anchor produced a feasible observer set")
    chosen = frozenset(geom.rim[p] for p in best_positions)
    return SolveResult(
        set=chosen, weight=best_w, algorithm="wheel", optimal=True,
        metadata={"hub": hub, "anchors_tried": len(anchors)},
    )


def _small_wheel_fallback(g: WeightedGraph, budget: int, oracle_limit: int) -> SolveResult:
    try:
        if enumeration_size(g) <= budget:
            res = solve_kaug(g, budget)
            meta = dict(res.metadata)
            meta["routed_from"] = "wheel"
            return SolveResult(set=res.set, weight=res.weight, algorithm=res.algorithm,
                               optimal=res.optimal, metadata=meta)
    except WrongGraphClass:
        pass
    if (1 << g.n) <= oracle_limit:
        res = brute_min_drs(g)
        meta = dict(res.metadata)
        meta["routed_from"] = "wheel"
        return SolveResult(set=res.set, weight=res.weight, algorithm="oracle",
                           optimal=True, metadata=meta)
    res = greedy_mwdrs(g)
    meta = dict(res.metadata)
    meta["routed_from"] = "wheel"
    return SolveResult(set=res.set, weight=res.weight, algorithm="greedy",
                       optimal=False, metadata=meta)
