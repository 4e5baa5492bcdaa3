"""Command-line front end: solve, verify, locate, gen, bench.

solve/verify/locate print one JSON object on stdout by default (``--human``
for a readable layout).  Exit codes: 0 success, 2 infeasible or oversized
instance, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .generators import FAMILIES, GenSpec, generate, generate_reduction
from .graph import GraphFormatError, all_pairs_distances, parse_graph, serialize_graph
from .oracle import InstanceTooLarge
from .resolving import ambiguous_witness, is_drs, locate_source
from .solver import ALGORITHMS, solve
from .trees import DEFAULT_KAUG_BUDGET, WrongGraphClass

EXIT_OK = 0
EXIT_INFEASIBLE = 2
EXIT_INPUT = 3


def _read_graph(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GraphFormatError(f"cannot read {path}: {exc}") from exc
    return parse_graph(text)


def _parse_vertex_set(arg: str, n: int) -> list[int]:
    out = []
    for part in arg.split(","):
        part = part.strip()
        if not part:
            continue
        v = int(part)
        if not (1 <= v <= n):
            raise GraphFormatError(f"vertex id {v} out of range 1..{n}")
        out.append(v - 1)
    if not out:
        raise GraphFormatError("empty vertex set")
    return out


def _parse_times(arg: str, n: int) -> dict[int, int]:
    times: dict[int, int] = {}
    for part in arg.split(","):
        part = part.strip()
        if not part:
            continue
        key, _, val = part.partition("=")
        v = int(key)
        if not (1 <= v <= n):
            raise GraphFormatError(f"observer id {v} out of range 1..{n}")
        times[v - 1] = int(val)
    return times


def _emit(obj: dict, human: bool) -> None:
    if human:
        for k, v in obj.items():
            print(f"{k}: {v}")
    else:
        print(json.dumps(obj))


def _cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    res = solve(g, algorithm=args.algo, budget=args.budget,
                oracle_limit=1 << args.oracle_limit_exp, threads=args.threads)
    out = {
        "set": [v + 1 for v in res.sorted_set()],
        "weight": res.weight,
        "algorithm": res.algorithm,
        "optimal": res.optimal,
    }
    if "instance_ratio_bound" in res.metadata:
        out["ratio_bound"] = res.metadata["instance_ratio_bound"]
    _emit(out, args.human)
    return EXIT_OK


def _cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    S = _parse_vertex_set(args.set, g.n)
    dm = all_pairs_distances(g)
    ok = is_drs(dm, S)
    out: dict = {"is_drs": ok}
    if not ok:
        witness = ambiguous_witness(dm, S)
        if witness is not None:
            out["witness"] = [witness[0] + 1, witness[1] + 1]
    _emit(out, args.human)
    return EXIT_OK


def _cmd_locate(args) -> int:
    g = _read_graph(args.graph)
    S = _parse_vertex_set(args.set, g.n)
    try:
        times = _parse_times(args.times, g.n)
    except ValueError as exc:
        raise GraphFormatError(f"bad --times: {exc}") from exc
    if set(times) != set(S):
        raise GraphFormatError("--times must cover exactly the observer set")
    res = locate_source(all_pairs_distances(g), S, times)
    out: dict = {"outcome": res.outcome}
    if res.outcome == "unique":
        out["source"] = res.source + 1
        out["start"] = res.start_time
    elif res.outcome == "ambiguous":
        out["candidates"] = [[u + 1, c] for u, c in res.candidates]
    _emit(out, args.human)
    return EXIT_OK


def _cmd_gen(args) -> int:
    if args.family == "reduction":
        if not args.input:
            raise GraphFormatError("gen reduction requires --input BASE_GRAPH")
        base = _read_graph(args.input)
        gprime, witness = generate_reduction(base)
        text = serialize_graph(gprime)
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8")
            wpath = Path(args.output).with_suffix(Path(args.output).suffix + ".witness")
            wpath.write_text("".join(f"{v + 1}\n" for v in sorted(witness)), encoding="utf-8")
        else:
            sys.stdout.write(text)
            sys.stderr.write("witness: " + ",".join(str(v + 1) for v in sorted(witness)) + "\n")
        return EXIT_OK
    spec = GenSpec(
        family=args.family, n=args.n, k=args.k, rim=args.rim,
        connectors=args.connectors, pattern=args.pattern, seed=args.seed,
        weights=args.weights, wmin=args.wmin, wmax=args.wmax, wseed=args.wseed,
    )
    try:
        g = generate(spec)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc
    text = serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_bench(args) -> int:
    from .bench import render_figures, run_bench, write_csv

    rows = run_bench(families=args.families, seeds=args.seeds,
                     max_oracle_n=args.max_oracle_n)
    out = Path(args.out)
    write_csv(rows, out)
    print(f"wrote {out} ({len(rows)} rows)")
    if not args.no_plots:
        plot_dir = Path(args.plot_dir) if args.plot_dir else out.parent
        for p in render_figures(rows, plot_dir):
            print(f"wrote {p}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="drsolve",
        description="Minimum-weight doubly resolving sets: solve, verify, locate, generate, benchmark.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--human", action="store_true", help="human-readable output instead of JSON")

    p = sub.add_parser("solve", help="compute a minimum-weight (or greedy) doubly resolving set")
    p.add_argument("graph")
    p.add_argument("--algo", choices=ALGORITHMS, default="auto")
    p.add_argument("--budget", type=int, default=DEFAULT_KAUG_BUDGET,
                   help="candidate-set cap for the k-edge-augmented enumeration")
    p.add_argument("--oracle-limit-exp", type=int, default=20,
                   help="oracle handles up to 2^EXP subsets")
    p.add_argument("--threads", type=int, default=1)
    add_common(p)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("verify", help="check whether a vertex set is doubly resolving")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated 1-based vertex ids")
    add_common(p)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("locate", help="infer the diffusion source from observer times")
    p.add_argument("graph")
    p.add_argument("--set", required=True, help="comma-separated 1-based observer ids")
    p.add_argument("--times", required=True, help="id=time pairs, e.g. 1=2,4=3 (integers)")
    add_common(p)
    p.set_defaults(func=_cmd_locate)

    p = sub.add_parser("gen", help="generate an instance (graph file format on stdout or -o)")
    p.add_argument("--family", choices=list(FAMILIES) + ["reduction"], required=True)
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--rim", type=int, default=0)
    p.add_argument("--connectors", type=int, default=0)
    p.add_argument("--pattern", choices=["even", "random"], default="even")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weights", choices=["unit", "uniform"], default="unit")
    p.add_argument("--wmin", type=int, default=1)
    p.add_argument("--wmax", type=int, default=10)
    p.add_argument("--wseed", type=int, default=0)
    p.add_argument("--input", help="base graph for --family reduction")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("bench", help="benchmark solvers; CSV plus figures")
    p.add_argument("--out", default="drsolve-bench.csv")
    p.add_argument("--families", nargs="*", default=None)
    p.add_argument("--seeds", type=int, default=3)
    p.add_argument("--max-oracle-n", type=int, default=16)
    p.add_argument("--plot-dir", default=None)
    p.add_argument("--no-plots", action="store_true")
    p.set_defaults(func=_cmd_bench)
    return ap


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GraphFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (WrongGraphClass, InstanceTooLarge) as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
