import random

import pytest

from drsolve import (
    WrongGraphClass,
    base_graph,
    brute_min_drs,
    is_drs,
    is_drs_cycle,
    path_decomposition,
    random_connected,
    solve_cycle,
    solve_kaug,
    solve_tree,
)
from drsolve.generators import gen_comb, gen_cycle, gen_kaug
from conftest import build, cycle_graph, distances, path_graph, star_graph


def test_tree_solution_is_leaf_set():
    g = star_graph(4)
    res = solve_tree(g)
    assert res.set == {1, 2, 3, 4} and res.optimal

    g = path_graph(5)
    assert solve_tree(g).set == {0, 4}


def test_comb_needs_half_the_vertices():
    for h in (2, 3, 4, 6):
        g = build(2 * h, gen_comb(2 * h))
        res = solve_tree(g)
        assert len(res.set) == h
        assert res.set == set(range(h, 2 * h))  # the teeth


def test_two_vertex_tree():
    assert solve_tree(path_graph(2)).set == {0, 1}


def test_solve_tree_rejects_non_tree():
    with pytest.raises(WrongGraphClass):
        solve_tree(cycle_graph(4))


def test_cycle_unit_weights_cardinalities():
    assert solve_cycle(cycle_graph(5)).weight == 2
    assert solve_cycle(cycle_graph(6)).weight == 3


def test_cycle_weighted_example_matches_oracle():
    g = build(7, gen_cycle(7), [1, 9, 9, 1, 9, 1, 9])
    res = solve_cycle(g)
    opt = brute_min_drs(g)
    assert res.weight == opt.weight
    assert is_drs(distances(g), res.set)


def test_cycle_matches_oracle_with_ties(rng):
    for n in range(3, 13):
        for seed in range(8):
            local = random.Random(seed * 97 + n)
            ws = [float(local.choice([1, 1, 2, 5])) for _ in range(n)]
            g = build(n, gen_cycle(n), ws)
            assert solve_cycle(g).weight == brute_min_drs(g).weight


def test_solve_cycle_rejects_non_cycle():
    with pytest.raises(WrongGraphClass):
        solve_cycle(path_graph(4))


def test_arc_condition_examples():
    assert not is_drs_cycle(6, [0, 3])
    assert is_drs_cycle(7, [0, 3])
    assert is_drs_cycle(6, [0, 2, 4])
    assert not is_drs_cycle(9, [0])


def test_arc_condition_matches_verifier_exhaustively():
    for n in range(3, 11):
        dm = distances(cycle_graph(n))
        for mask in range(1 << n):
            S = [v for v in range(n) if mask >> v & 1]
            assert is_drs_cycle(n, S) == is_drs(dm, S), (n, S)


def test_base_graph_of_cycle_with_pendant():
    g = build(6, gen_cycle(5) + [(0, 5)])
    red = base_graph(g)
    assert red.base.n == 5
    assert len(red.roots) == 1
    root_local = next(iter(red.roots))
    assert red.embed[root_local] == 0
    assert red.base.weights[root_local] == 0.0
    assert red.leaves == {5}


def test_base_graph_of_pure_cycle():
    red = base_graph(cycle_graph(6))
    assert red.base.n == 6 and red.roots == frozenset() and red.leaves == frozenset()


def test_base_graph_peels_tadpole_tail():
    g = build(8, gen_cycle(5) + [(0, 5), (5, 6), (6, 7)])
    red = base_graph(g)
    assert red.base.n == 5
    assert red.leaves == {7}
    assert {red.embed[v] for v in red.roots} == {0}


def test_base_graph_rejects_tree():
    with pytest.raises(WrongGraphClass):
        base_graph(path_graph(5))


def test_theta_graph_decomposes_into_three_paths():
    g = build(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)])
    dec = path_decomposition(g)
    assert dec.q == 3  # k = 2, bound 3k-3 = 3 is tight
    ends = {(p[0], p[-1]) for p in dec.paths}
    assert ends == {(0, 1)}


def test_k4_decomposes_into_six_edges():
    k4 = build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    dec = path_decomposition(k4)
    assert dec.q == 6
    assert all(len(p) == 2 for p in dec.paths)


def test_closed_chains_at_shared_vertex():
    bowtie = build(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
    dec = path_decomposition(bowtie)
    assert dec.q == 2
    assert all(p[0] == p[-1] == 0 for p in dec.paths)


def test_decomposition_covers_edges_disjointly(rng):
    for k in (2, 3):
        for seed in range(10):
            g = build(10, gen_kaug(10, k, seed=seed))
            try:
                red = base_graph(g)
            except WrongGraphClass:
                continue
            if max(red.base.degree(v) for v in range(red.base.n)) < 3:
                continue
            dec = path_decomposition(red.base)
            k_eff = red.base.m - red.base.n + 1
            assert dec.q <= 3 * k_eff - 3
            seen = set()
            for p in dec.paths:
                for u, v in zip(p, p[1:]):
                    e = (u, v) if u < v else (v, u)
                    assert e not in seen
                    seen.add(e)
            assert seen == set(red.base.edges)


def test_path_decomposition_rejects_cycle():
    with pytest.raises(WrongGraphClass):
        path_decomposition(cycle_graph(6))


def test_kaug_zero_delegates_to_tree():
    g = star_graph(4)
    assert solve_kaug(g).set == solve_tree(g).set


def test_kaug_one_matches_oracle():
    # cycle C5 with two pendant leaves
    g = build(7, gen_cycle(5) + [(0, 5), (2, 6)])
    res = solve_kaug(g)
    assert res.optimal and res.weight == brute_min_drs(g).weight
    assert res.set >= {5, 6}


def test_kaug_theta_matches_oracle():
    g = build(8, [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)])
    res = solve_kaug(g)
    assert res.weight == brute_min_drs(g).weight


def test_kaug_matches_oracle_small(rng):
    for k in (1, 2, 3):
        for seed in range(10):
            local = random.Random(seed * 13 + k)
            n = local.randint(max(4, k + 2), 11)
            g = build(n, gen_kaug(n, k, seed=seed * 13 + k),
                      [float(local.randint(1, 9)) for _ in range(n)])
            res = solve_kaug(g)
            assert res.weight == brute_min_drs(g).weight


def test_kaug_size_bounds(rng):
    # every DRS contains the leaves; the base-graph part adds at most 3
    # vertices for k = 1 (cycle base) and at most 12(k-1) for k >= 2
    for seed in range(12):
        local = random.Random(seed)
        k = local.choice([1, 2, 3])
        n = local.randint(max(4, k + 2), 12)
        g = build(n, gen_kaug(n, k, seed=seed))
        res = solve_kaug(g)
        leaves = set(g.leaves())
        cap = 3 if k == 1 else 12 * (k - 1)
        assert len(leaves) <= len(res.set) <= len(leaves) + cap


def test_base_recombination_weight_identity(rng):
    for seed in range(10):
        local = random.Random(77 + seed)
        k = local.choice([1, 2])
        n = local.randint(6, 12)
        g = build(n, gen_kaug(n, k, seed=77 + seed),
                  [float(local.randint(1, 9)) for _ in range(n)])
        red = base_graph(g)
        base_res = (solve_cycle(red.base) if k == 1 and red.base.m == red.base.n
                    else None)
        if base_res is None:
            continue
        combined = red.recombine(base_res.set)
        assert g.weight_of(combined) == base_res.weight + g.weight_of(red.leaves)


def test_kaug_budget_fallback_is_flagged():
    g = build(12, gen_kaug(12, 3, seed=5))
    res = solve_kaug(g, budget=1)
    assert not res.optimal and res.algorithm == "greedy"
    assert is_drs(distances(g), res.set)
