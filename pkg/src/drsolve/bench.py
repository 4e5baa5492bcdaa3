"""Benchmark harness: timings and solution quality across instance families.

Writes one CSV row per (instance, algorithm) and, unless disabled, renders
summary figures next to the CSV.
"""

from __future__ import annotations

import csv
import time
from dataclasses import dataclass
from pathlib import Path

from .generators import GenSpec, generate, random_connected
from .graph import WeightedGraph
from .greedy import greedy_mwdrs
from .oracle import brute_min_drs
from .solver import solve

CSV_FIELDS = ["family", "n", "algorithm", "weight", "oracle_weight", "seconds"]

DEFAULT_FAMILIES = ["tree", "cycle", "comb", "kaug", "complete-wheel", "wheel", "random"]

_SIZES = {
    "tree": [10, 20, 40, 80],
    "cycle": [10, 20, 40, 80],
    "comb": [10, 20, 40, 80],
    "kaug": [10, 14, 18, 24],
    "complete-wheel": [10, 20, 40, 80],
    "wheel": [16, 24, 40, 80],
    "random": [10, 14, 18, 24],
}


@dataclass
class BenchRow:
    family: str
    n: int
    algorithm: str
    weight: float
    oracle_weight: float | None
    seconds: float


def _instance(family: str, n: int, seed: int) -> WeightedGraph:
    if family == "random":
        return random_connected(n, extra_edges=n // 2, seed=seed, weights="uniform")
    if family == "wheel":
        rim = n - 1
        return generate(GenSpec(family="wheel", rim=rim, connectors=max(13, rim * 3 // 4),
                                pattern="even", seed=seed,
                                weights="uniform", wseed=seed))
    if family == "complete-wheel":
        return generate(GenSpec(family="complete-wheel", rim=n - 1,
                                weights="uniform", wseed=seed))
    if family == "comb":
        return generate(GenSpec(family="comb", n=n if n % 2 == 0 else n + 1,
                                weights="uniform", wseed=seed))
    if family == "kaug":
        return generate(GenSpec(family="kaug", n=n, k=2, seed=seed,
                                weights="uniform", wseed=seed))
    return generate(GenSpec(family=family, n=n, seed=seed, weights="uniform", wseed=seed))


def run_bench(
    families: list[str] | None = None,
    seeds: int = 3,
    max_oracle_n: int = 16,
) -> list[BenchRow]:
    families = families or DEFAULT_FAMILIES
    rows: list[BenchRow] = []
    for family in families:
        for n in _SIZES.get(family, [10, 20]):
            for seed in range(seeds):
                g = _instance(family, n, seed)
                oracle_w: float | None = None
                if g.n <= max_oracle_n:
                    oracle_w = brute_min_drs(g).weight
                for algo in ("auto", "greedy"):
                    t0 = time.perf_counter()
                    res = solve(g, algorithm="auto") if algo == "auto" else greedy_mwdrs(g)
                    dt = time.perf_counter() - t0
                    rows.append(BenchRow(
                        family=family, n=g.n,
                        algorithm=res.algorithm if algo == "auto" else "greedy",
                        weight=res.weight, oracle_weight=oracle_w, seconds=dt,
                    ))
    return rows


def write_csv(rows: list[BenchRow], path: Path) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", newline="") as fh:
        w = csv.DictWriter(fh, fieldnames=CSV_FIELDS)
        w.writeheader()
        for r in rows:
            w.writerow({
                "family": r.family, "n": r.n, "algorithm": r.algorithm,
                "weight": r.weight,
                "oracle_weight": "" if r.oracle_weight is None else r.oracle_weight,
                "seconds": f"{r.seconds:.6f}",
            })


def render_figures(rows: list[BenchRow], out_dir: Path) -> list[Path]:
    """Render runtime and quality figures; returns the written paths."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    out_dir.mkdir(parents=True, exist_ok=True)
    written: list[Path] = []

    fig, ax = plt.subplots(figsize=(7, 4.5))
    series: dict[tuple[str, str], dict[int, list[float]]] = {}
    for r in rows:
        series.setdefault((r.family, r.algorithm), {}).setdefault(r.n, []).append(r.seconds)
    for (family, algo), by_n in sorted(series.items()):
        ns = sorted(by_n)
        ts = [sum(by_n[n]) / len(by_n[n]) for n in ns]
        ax.plot(ns, ts, marker="o", label=f"{family}/{algo}")
    ax.set_xlabel("n")
    ax.set_ylabel("seconds")
    ax.set_yscale("log")
    ax.set_title("solve time by family and algorithm")
    ax.legend(fontsize=7, ncol=2)
    fig.tight_layout()
    p = out_dir / "bench_times.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    written.append(p)

    fig, ax = plt.subplots(figsize=(7, 4.5))
    by_family: dict[str, list[tuple[int, float]]] = {}
    for r in rows:
        if r.algorithm == "greedy" and r.oracle_weight:
            by_family.setdefault(r.family, []).append((r.n, r.weight / r.oracle_weight))
    for family, pts in sorted(by_family.items()):
        pts.sort()
        ax.scatter([p0 for p0, _ in pts], [p1 for _, p1 in pts], label=family, s=18)
    ax.axhline(1.0, color="grey", lw=0.8, ls="--")
    ax.set_xlabel("n")
    ax.set_ylabel("greedy weight / optimal weight")
    ax.set_title("greedy solution quality (instances with oracle)")
    ax.legend(fontsize=8)
    fig.tight_layout()
    p = out_dir / "bench_quality.png"
    fig.savefig(p, dpi=150)
    plt.close(fig)
    written.append(p)
    return written
