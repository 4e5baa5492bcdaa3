"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as they
complete.  Weight comparisons against the brute-force oracle are exact
(integer weights summed in doubles); tolerances appear only where a
criterion states one.
"""

import math
import random
import time
from itertools import combinations

from drsolve import (
    GenSpec,
    SuperTest,
    ambiguous_witness,
    brute_min_dominating_set,
    brute_min_drs,
    brute_mwsts,
    all_pairs_distances,
    check_wheel_drs,
    classify,
    generate,
    generate_reduction,
    greedy_mwdrs,
    information_content,
    is_drs,
    is_drs_cycle,
    locate_source,
    random_connected,
    refine_partition,
    rim_windows_feasible,
    simulate_times,
    single_class_partition,
    solve_cycle,
    solve_general_wheel,
    solve_kaug,
    solve_complete_wheel,
    solve_tree,
    wheel_geometry,
)
from drsolve.generators import gen_comb, gen_cycle, gen_kaug
from conftest import build, cycle_graph, prism_graph


def report(num: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"[acceptance {num:02d}] {name}: {'PASS' if ok else 'FAIL'}"
    if detail:
        line += f" ({detail})"
    print(line, flush=True)
    assert ok, line


def test_01_cycles_match_oracle():
    t0 = time.perf_counter()
    checked = 0
    for n in range(3, 15):
        for seed in range(20):
            rng = random.Random(seed * 1009 + n)
            ws = [float(rng.randint(1, 10)) for _ in range(n)]
            g = build(n, gen_cycle(n), ws)
            assert solve_cycle(g).weight == brute_min_drs(g).weight, (n, seed)
            checked += 1
    dt = time.perf_counter() - t0
    report(1, "cycles equal oracle", checked == 240 and dt < 10,
           f"{checked} instances, {dt:.1f}s")


def test_02_trees_match_oracle_and_leaf_set():
    t0 = time.perf_counter()
    for i in range(50):
        rng = random.Random(i)
        n = rng.randint(2, 12)
        g = random_connected(n, 0, seed=i,
                             weights="uniform" if i % 2 else "unit")
        res = solve_tree(g)
        assert res.set == set(g.leaves()), i
        assert res.weight == brute_min_drs(g).weight, i
    dt = time.perf_counter() - t0
    report(2, "trees equal oracle, output is the leaf set", dt < 5, f"{dt:.1f}s")


def test_03_kaug_trees_match_oracle():
    t0 = time.perf_counter()
    checked = 0
    for k in (1, 2, 3):
        for seed in range(20):
            rng = random.Random(seed * 613 + k)
            n = rng.randint(max(4, k + 2), 12)
            g = build(n, gen_kaug(n, k, seed=seed * 613 + k),
                      [float(rng.randint(1, 10)) for _ in range(n)])
            assert solve_kaug(g).weight == brute_min_drs(g).weight, (k, seed)
            checked += 1
    dt = time.perf_counter() - t0
    report(3, "k-edge-augmented trees equal oracle", checked == 60 and dt < 60,
           f"{checked} instances, {dt:.1f}s")


def test_04_wheels_match_oracle():
    t0 = time.perf_counter()
    complete = 0
    for rim in range(7, 15):
        for ws_mode in ("unit", "uniform"):
            rng = random.Random(rim * 31)
            ws = ([1.0] * (rim + 1) if ws_mode == "unit"
                  else [float(rng.randint(1, 10)) for _ in range(rim + 1)])
            g = generate(GenSpec(family="complete-wheel", rim=rim))
            g = build(g.n, g.edges, ws)
            assert solve_complete_wheel(g).weight == brute_min_drs(g).weight, (rim, ws_mode)
            complete += 1
    general = 0
    for rim in (14, 15, 16):
        for seed in range(5):
            rng = random.Random(seed * 59 + rim)
            ws = ([1.0] * (rim + 1) if seed % 2 == 0
                  else [float(rng.randint(1, 10)) for _ in range(rim + 1)])
            base = generate(GenSpec(family="wheel", rim=rim, connectors=13,
                                    pattern="random", seed=seed))
            g = build(base.n, base.edges, ws)
            assert g.degree(classify(g).hub) == 13
            assert solve_general_wheel(g).weight == brute_min_drs(g).weight, (rim, seed)
            general += 1
    dt = time.perf_counter() - t0
    report(4, "wheel dynamic programs equal oracle",
           complete == 16 and general == 15 and dt < 120,
           f"{complete} complete + {general} general, {dt:.1f}s")


def test_05_characterizations_match_verifier():
    t0 = time.perf_counter()
    # cycles, exhaustively up to n = 14
    for n in range(3, 15):
        dm = all_pairs_distances(cycle_graph(n))
        for mask in range(1 << n):
            S = [v for v in range(n) if mask >> v & 1]
            assert is_drs_cycle(n, S) == is_drs(dm, S), (n, S)
    # window form on an 8-rim complete wheel
    g = generate(GenSpec(family="complete-wheel", rim=8))
    dm = all_pairs_distances(g)
    hub = classify(g).hub
    rim = [v for v in range(g.n) if v != hub]
    for size in range(0, 9):
        for S in combinations(rim, size):
            pos = [rim.index(v) for v in S]
            assert rim_windows_feasible(8, pos) == is_drs(dm, S), S
    # closeness characterization on a 14-rim wheel with 13 connectors
    g = generate(GenSpec(family="wheel", rim=14, connectors=13, pattern="even"))
    dm = all_pairs_distances(g)
    geom = wheel_geometry(g, classify(g).hub, dm)
    for size in range(0, 15):
        for S in combinations(geom.rim, size):
            assert check_wheel_drs(geom, S) == is_drs(dm, S), S
    dt = time.perf_counter() - t0
    report(5, "characterizations equal generic verifier", True,
           f"zero discrepancies, {dt:.1f}s")


def test_06_cardinality_facts():
    for n in range(4, 15):
        expect = 2 if n % 2 else 3
        assert brute_min_drs(cycle_graph(n)).weight == expect, n
    for h in (3, 4, 5, 6):
        g = build(2 * h, gen_comb(2 * h))
        assert brute_min_drs(g).weight == h, h
    for k in (3, 4):
        assert brute_min_drs(prism_graph(k)).weight in (3, 4), k
    report(6, "published cardinalities reproduced", True,
           "cycles, combs, prisms")


def test_07_greedy_ratio_and_validity():
    t0 = time.perf_counter()
    for i in range(300):
        rng = random.Random(i)
        n = rng.randint(2, 8)
        g = random_connected(n, rng.randint(0, n), seed=i,
                             weights="uniform" if i % 2 else "unit")
        dm = all_pairs_distances(g)
        res = greedy_mwdrs(g, dm)
        opt = brute_min_drs(g, dm)
        bound = math.log(n) + math.log(math.log2(n)) + 1
        assert res.weight <= bound * opt.weight + 1e-9, (i, n)
    mid = time.perf_counter()
    for i in range(500):
        rng = random.Random(10_000 + i)
        n = rng.randint(4, 60)
        g = random_connected(n, rng.randint(0, 2 * n), seed=10_000 + i,
                             weights="uniform" if i % 3 else "unit")
        dm = all_pairs_distances(g)
        assert is_drs(dm, greedy_mwdrs(g, dm).set), i
    dt = time.perf_counter() - t0
    report(7, "greedy ratio bound and validity", dt < 120,
           f"300 ratio checks {mid - t0:.1f}s + 500 validity checks {dt - (mid - t0):.1f}s")


def test_08_super_test_weight_bound():
    checked = 0
    for i in range(50):
        rng = random.Random(i * 7)
        n = rng.randint(2, 7)
        g = random_connected(n, rng.randint(0, n), seed=i * 7,
                             weights="uniform" if i % 2 else "unit")
        dm = all_pairs_distances(g)
        opt = brute_min_drs(g, dm)
        for a in sorted(opt.set):
            m = brute_mwsts(g, a, dm)
            assert m.weight <= opt.weight - g.weights[a], (i, a)
            checked += 1
    report(8, "anchored super-test optimum bounded by optimal set", True,
           f"{checked} anchors, exact")


def test_09_entropy_drop_properties():
    violations = 0
    for i in range(200):
        rng = random.Random(i * 37)
        n = rng.randint(3, 10)
        g = random_connected(n, rng.randint(0, n), seed=i * 37)
        dm = all_pairs_distances(g)
        x = rng.randrange(n)
        probes = [v for v in range(n) if v != x]
        rng.shuffle(probes)
        t = SuperTest(x, probes[0], 1.0)
        rest = probes[1:]
        cut = rng.randint(0, len(rest))
        p_small = single_class_partition(n)
        for v in rest[:cut]:
            p_small = refine_partition(dm, p_small, SuperTest(x, v, 1.0))
        p_big = p_small
        for v in rest[cut:]:
            p_big = refine_partition(dm, p_big, SuperTest(x, v, 1.0))
        ic_small = information_content(dm, p_small, t)
        ic_big = information_content(dm, p_big, t)
        if ic_small < ic_big - 1e-9:
            violations += 1
        for ic in (ic_small, ic_big):
            if ic > 1e-9 and ic < 1 - 1e-6:
                violations += 1
    report(9, "entropy drop monotone and integer-threshold", violations == 0,
           f"{violations} violations over 200 samples")


def test_10_localization_equivalence():
    violations = 0
    for i in range(100):
        rng = random.Random(i * 101)
        n = rng.randint(2, 10)
        g = random_connected(n, rng.randint(0, n), seed=i * 101)
        dm = all_pairs_distances(g)
        S = rng.sample(range(n), rng.randint(1, n))
        if is_drs(dm, S):
            for source in range(n):
                for t0 in (0, 3):
                    res = locate_source(dm, S, simulate_times(dm, S, source, t0))
                    if res.outcome != "unique" or (res.source, res.start_time) != (source, t0):
                        violations += 1
        else:
            u, v = ambiguous_witness(dm, S)
            tu = simulate_times(dm, S, u, 0)
            tv = simulate_times(dm, S, v, 0)
            offsets = {tu[x] - tv[x] for x in S}
            if len(offsets) != 1:
                violations += 1
    report(10, "observer sets localize exactly when doubly resolving",
           violations == 0, f"{violations} violations over 100 graphs")


def test_11_reduction_witness():
    t0 = time.perf_counter()
    for i in range(20):
        rng = random.Random(i * 11)
        n = rng.randint(2, 10)
        g = random_connected(n, rng.randint(0, n), seed=i * 11)
        gp, witness = generate_reduction(g)
        expected = len(brute_min_dominating_set(g)) + math.ceil(math.log2(n)) + 3
        assert len(witness) == expected, i
        assert is_drs(all_pairs_distances(gp), witness), i
    dt = time.perf_counter() - t0
    report(11, "reduction witness doubly resolves the gadget", dt < 30,
           f"20 instances, {dt:.1f}s")
