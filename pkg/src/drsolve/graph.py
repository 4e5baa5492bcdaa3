"""Weighted graph representation, text I/O, BFS distances, and structural classification.

Graphs are simple (no loops or parallel edges), undirected, connected, with a
nonnegative weight on every vertex.  Distances are hop counts.  Vertex ids are
0-based internally; the text format uses 1-based ids.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np


class GraphFormatError(ValueError):
    """Raised when graph text input is malformed or violates an invariant."""


@dataclass(frozen=True)
class WeightedGraph:
    """Simple connected undirected graph with nonnegative vertex weights.

    Immutable after construction and safe to share across threads.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]
    weights: tuple[float, ...]
    edges: tuple[tuple[int, int], ...]

    @staticmethod
    def build(n: int, edges, weights=None) -> "WeightedGraph":
        """Validate and construct a graph from an edge list (0-based ids)."""
        if n < 2:
            raise GraphFormatError(f"need at least 2 vertices, got {n}")
        if weights is None:
            weights = [1.0] * n
        weights = [float(w) for w in weights]
        if len(weights) != n:
            raise GraphFormatError(f"expected {n} weights, got {len(weights)}")
        for v, w in enumerate(weights):
            if w < 0:
                raise GraphFormatError(f"vertex {v + 1} has negative weight {w}")
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(f"edge ({u + 1},{v + 1}) out of range for n={n}")
            if u == v:
                raise GraphFormatError(f"loop at vertex {u + 1}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise GraphFormatError(f"parallel edge ({key[0] + 1},{key[1] + 1})")
            seen.add(key)
            norm.append(key)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in norm:
            adj[u].append(v)
            adj[v].append(u)
        g = WeightedGraph(
            n=n,
            adjacency=tuple(tuple(sorted(a)) for a in adj),
            weights=tuple(weights),
            edges=tuple(sorted(norm)),
        )
        if not g._connected():
            raise GraphFormatError("graph is not connected")
        return g

    def _connected(self) -> bool:
        seen = [False] * self.n
        seen[0] = True
        queue = deque([0])
        count = 1
        while queue:
            u = queue.popleft()
            for v in self.adjacency[u]:
                if not seen[v]:
                    seen[v] = True
                    count += 1
                    queue.append(v)
        return count == self.n

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def weight_of(self, vertices) -> float:
        return float(sum(self.weights[v] for v in vertices))

    def unit_weights(self) -> bool:
        return all(w == 1.0 for w in self.weights)

    def integral_weights(self) -> bool:
        return all(float(w).is_integer() for w in self.weights)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if self.degree(v) == 1]

    def with_weights(self, weights) -> "WeightedGraph":
        return WeightedGraph.build(self.n, self.edges, weights)


@dataclass(frozen=True)
class DistanceMatrix:
    """All-pairs hop distances; ``a[u, v]`` is the length of a shortest u-v path."""

    n: int
    a: np.ndarray = field(repr=False)

    def d(self, u: int, v: int) -> int:
        return int(self.a[u, v])


def all_pairs_distances(g: WeightedGraph) -> DistanceMatrix:
    """BFS from every vertex; O(n*(n+m)) total."""
    n = g.n
    a = np.zeros((n, n), dtype=np.int32)
    for s in range(n):
        dist = a[s]
        dist.fill(-1)
        dist[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            du = dist[u]
            for v in g.adjacency[u]:
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue.append(v)
    a.flags.writeable = False
    return DistanceMatrix(n=n, a=a)


@dataclass(frozen=True)
class GraphClass:
    """Structural class used to route an instance to a solver.

    tag is one of "cycle", "tree", "complete-wheel", "wheel", "kaug-tree",
    "general".  ``k`` is set for k-edge-augmented trees (k = m - n + 1);
    ``hub`` is set for wheels.
    """

    tag: str
    k: int | None = None
    hub: int | None = None


def _spanning_cycle_after_removal(g: WeightedGraph, hub: int) -> bool:
    """True if deleting ``hub`` leaves a single cycle on the other n-1 vertices."""
    rest = [v for v in range(g.n) if v != hub]
    if len(rest) < 3:
        return False
    deg = {v: 0 for v in rest}
    for u, v in g.edges:
        if u != hub and v != hub:
            deg[u] += 1
            deg[v] += 1
    if any(d != 2 for d in deg.values()):
        return False
    # 2-regular and connected <=> one cycle
    start = rest[0]
    seen = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in g.adjacency[u]:
            if v != hub and v not in seen:
                seen.add(v)
                queue.append(v)
    return len(seen) == len(rest)


def classify(g: WeightedGraph, kaug_cap: int = 12) -> GraphClass:
    """Classify ``g``; detection order: cycle, tree, complete wheel, general
    wheel, k-edge-augmented tree (k <= kaug_cap), general."""
    n, m = g.n, g.m
    if m == n and all(g.degree(v) == 2 for v in range(n)):
        return GraphClass(tag="cycle", k=1)
    if m == n - 1:
        return GraphClass(tag="tree", k=0)
    hubs = [v for v in range(n) if g.degree(v) >= 3 and _spanning_cycle_after_removal(g, v)]
    if len(hubs) == 1:
        hub = hubs[0]
        if g.degree(hub) == n - 1:
            return GraphClass(tag="complete-wheel", hub=hub, k=m - n + 1)
        return GraphClass(tag="wheel", hub=hub, k=m - n + 1)
    k = m - n + 1
    if k <= kaug_cap:
        return GraphClass(tag="kaug-tree", k=k)
    return GraphClass(tag="general", k=k)


def parse_graph(text: str) -> WeightedGraph:
    """Parse the graph text format.

    Line 1: ``n m``; then n lines ``id weight``; then m lines ``u v``.
    Ids are 1-based.  Lines starting with ``#`` are comments.
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise GraphFormatError("empty input")

    def syntax(lineno: int, msg: str) -> GraphFormatError:
        return GraphFormatError(f"line {lineno}: {msg}")

    lineno, head = rows[0]
    if len(head) != 2:
        raise syntax(lineno, "expected header 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise syntax(lineno, "expected integers in header") from None
    if len(rows) != 1 + n + m:
        raise GraphFormatError(
            f"expected {1 + n + m} data lines for n={n}, m={m}, got {len(rows)}"
        )
    weights: list[float | None] = [None] * n
    for lineno, parts in rows[1 : 1 + n]:
        if len(parts) != 2:
            raise syntax(lineno, "expected 'id weight'")
        try:
            vid, w = int(parts[0]), float(parts[1])
        except ValueError:
            raise syntax(lineno, "malformed vertex line") from None
        if not (1 <= vid <= n):
            raise syntax(lineno, f"vertex id {vid} out of range 1..{n}")
        if weights[vid - 1] is not None:
            raise syntax(lineno, f"duplicate weight for vertex {vid}")
        weights[vid - 1] = w
    edges: list[tuple[int, int]] = []
    for lineno, parts in rows[1 + n :]:
        if len(parts) != 2:
            raise syntax(lineno, "expected 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise syntax(lineno, "malformed edge line") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise syntax(lineno, f"edge ({u},{v}) out of range 1..{n}")
        edges.append((u - 1, v - 1))
    return WeightedGraph.build(n, edges, weights)


def serialize_graph(g: WeightedGraph) -> str:
    """Emit the text format accepted by :func:`parse_graph` (1-based ids)."""
    out = [f"{g.n} {g.m}"]
    for v in range(g.n):
        w = g.weights[v]
        out.append(f"{v + 1} {int(w) if w.is_integer() else w}")
    for u, v in g.edges:
        out.append(f"{u + 1} {v + 1}")
    return "\n".join(out) + "\n"
