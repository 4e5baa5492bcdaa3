"""Deterministic generators for test families and the reduction gadget.

Every generator is a pure function of its spec, so identical specs produce
identical graphs.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass

from .graph import WeightedGraph
from .oracle import brute_min_dominating_set

FAMILIES = ("tree", "comb", "cycle", "kaug", "wheel", "complete-wheel")


@dataclass(frozen=True)
class GenSpec:
    """Parameters for one generated instance.

    ``n`` is the vertex count (for comb: must be even, n = 2h teeth+spine);
    ``k`` extra edges for kaug; ``rim``/``connectors``/``pattern`` describe
    wheels.  ``weights`` is "unit" or "uniform" (integers in [wmin, wmax]
    drawn with wseed).
    """

    family: str
    n: int = 0
    k: int = 0
    rim: int = 0
    connectors: int = 0
    pattern: str = "even"
    seed: int = 0
    weights: str = "unit"
    wmin: int = 1
    wmax: int = 10
    wseed: int = 0


def _random_tree_edges(n: int, rng: random.Random) -> list[tuple[int, int]]:
    return [(rng.randrange(v), v) for v in range(1, n)]


def gen_tree(n: int, seed: int = 0) -> list[tuple[int, int]]:
    if n < 2:
        raise ValueError("tree needs n >= 2")
    return _random_tree_edges(n, random.Random(seed))


def gen_comb(n: int) -> list[tuple[int, int]]:
    """Caterpillar with h = n/2 spine vertices, each carrying one pendant leaf."""
    if n < 2 or n % 2:
        raise ValueError("comb needs even n = 2h")
    h = n // 2
    edges = [(i, i + 1) for i in range(h - 1)]          # spine r_1..r_h
    edges += [(i, h + i) for i in range(h)]             # teeth s_i
    return edges


def gen_cycle(n: int) -> list[tuple[int, int]]:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return [(i, (i + 1) % n) for i in range(n)]


def gen_kaug(n: int, k: int, seed: int = 0) -> list[tuple[int, int]]:
    """Random tree plus k extra edges (a k-edge-augmented tree)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    max_extra = n * (n - 1) // 2 - (n - 1)
    if k > max_extra:
        raise ValueError(f"k={k} exceeds available non-tree edges ({max_extra})")
    rng = random.Random(seed)
    edges = set(_random_tree_edges(n, rng))
    non_edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in edges
    ]
    extra = rng.sample(non_edges, k)
    return sorted(edges | set(extra))


def _connector_positions(rim: int, connectors: int, pattern: str, rng: random.Random) -> list[int]:
    if not (3 <= connectors <= rim):
        raise ValueError("need 3 <= connectors <= rim")
    if pattern == "even":
        skipped = {(j * rim) // (rim - connectors) for j in range(rim - connectors)} if connectors < rim else set()
        return [i for i in range(rim) if i not in skipped]
    if pattern == "random":
        return sorted(rng.sample(range(rim), connectors))
    raise ValueError(f"unknown connector pattern {pattern!r}")


def gen_wheel(rim: int, connectors: int, pattern: str = "even", seed: int = 0) -> list[tuple[int, int]]:
    """Rim cycle 0..rim-1 plus hub vertex ``rim`` joined to chosen connectors."""
    if rim < 3:
        raise ValueError("wheel rim needs >= 3 vertices")
    rng = random.Random(seed)
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(c, rim) for c in _connector_positions(rim, connectors, pattern, rng)]
    return edges


def _apply_weights(n: int, spec: GenSpec) -> list[float]:
    if spec.weights == "unit":
        return [1.0] * n
    if spec.weights == "uniform":
        rng = random.Random(spec.wseed)
        return [float(rng.randint(spec.wmin, spec.wmax)) for _ in range(n)]
    raise ValueError(f"unknown weight mode {spec.weights!r}")


def generate(spec: GenSpec) -> WeightedGraph:
    if spec.family == "tree":
        edges, n = gen_tree(spec.n, spec.seed), spec.n
    elif spec.family == "comb":
        edges, n = gen_comb(spec.n), spec.n
    elif spec.family == "cycle":
        edges, n = gen_cycle(spec.n), spec.n
    elif spec.family == "kaug":
        edges, n = gen_kaug(spec.n, spec.k, spec.seed), spec.n
    elif spec.family == "wheel":
        edges, n = gen_wheel(spec.rim, spec.connectors, spec.pattern, spec.seed), spec.rim + 1
    elif spec.family == "complete-wheel":
        edges, n = gen_wheel(spec.rim, spec.rim, "even", spec.seed), spec.rim + 1
    else:
        raise ValueError(f"unknown family {spec.family!r}")
    return WeightedGraph.build(n, edges, _apply_weights(n, spec))


def random_connected(n: int, extra_edges: int, seed: int = 0,
                     weights: str = "unit", wmin: int = 1, wmax: int = 10) -> WeightedGraph:
    """Random tree plus ``extra_edges`` random chords; general-purpose fuzz input."""
    rng = random.Random(seed)
    edges = set(_random_tree_edges(n, rng))
    non_edges = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra_edges = min(extra_edges, len(non_edges))
    edges |= set(rng.sample(non_edges, extra_edges))
    if weights == "unit":
        ws = [1.0] * n
    else:
        ws = [float(rng.randint(wmin, wmax)) for _ in range(n)]
    return WeightedGraph.build(n, sorted(edges), ws)


def generate_reduction(g: WeightedGraph) -> tuple[WeightedGraph, frozenset[int]]:
    """Lift ``g`` to the gadget graph whose doubly resolving sets encode
    dominating sets of ``g``, returning it with a witness DRS of size
    ds(g) + ceil(log2 n) + 3.

    Layout (0-based): v_i^0 = 2i, v_i^1 = 2i+1 for i < n; then pairs
    u_1..u_{d+1}, u_a, u_b (each as 0/1 twins), then the universal vertex c.
    """
    n = g.n
    d = math.ceil(math.log2(n))
    num_u_pairs = d + 3  # u_1..u_{d+1}, u_a, u_b

    def v0(i: int) -> int:  # i is 1-based as in the binary rule
        return 2 * (i - 1)

    def v1(i: int) -> int:
        return 2 * (i - 1) + 1

    def u0(k: int) -> int:  # k in 0..d for u_1..u_{d+1}; d+1 = u_a; d+2 = u_b
        return 2 * n + 2 * k

    def u1(k: int) -> int:
        return 2 * n + 2 * k + 1

    ua0, ua1 = u0(d + 1), u1(d + 1)
    ub0, ub1 = u0(d + 2), u1(d + 2)
    c = 2 * n + 2 * num_u_pairs
    total = c + 1

    edges: set[tuple[int, int]] = set()

    def add(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    for x in range(c):
        add(x, c)
    for u, v in g.edges:
        add(v1(u + 1), v1(v + 1))
    for k in range(d + 1):  # twin edges for u_1..u_{d+1}
        add(u0(k), u1(k))
    add(ub0, ub1)  # and u_b; u_a twins are linked only through their v-neighbors
    for i in range(1, n + 1):
        add(v0(i), ua0)
        add(v0(i), ua1)
        add(v1(i), ua0)
        add(v1(i), ua1)
        for k in range(d + 1):
            if (i >> k) & 1:  # bit k+1 of i, least-significant bit = position 1
                add(v0(i), u0(k))
                add(v0(i), u1(k))
                add(v1(i), u0(k))
                add(v1(i), u1(k))

    gprime = WeightedGraph.build(total, sorted(edges), [1.0] * total)
    ds = brute_min_dominating_set(g)
    witness = frozenset(
        [u1(k) for k in range(d + 1)] + [ua1, ub1] + [v1(i + 1) for i in ds]
    )
    return gprime, witness
