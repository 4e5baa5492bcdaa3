import numpy as np
import pytest

from drsolve import (
    GraphFormatError,
    WeightedGraph,
    all_pairs_distances,
    classify,
    parse_graph,
    random_connected,
    serialize_graph,
)
from conftest import build, cycle_graph, path_graph, star_graph

TRIANGLE = """\
3 3
1 1.0
2 1.0
3 1.0
1 2
2 3
3 1
"""


def test_parse_triangle():
    g = parse_graph(TRIANGLE)
    assert g.n == 3 and g.m == 3
    assert g.weights == (1.0, 1.0, 1.0)
    assert classify(g).tag == "cycle"


def test_parse_rejects_loop():
    text = TRIANGLE.replace("3 1\n", "1 1\n")
    with pytest.raises(GraphFormatError, match="loop"):
        parse_graph(text)


def test_parse_two_vertex_path_with_weights():
    g = parse_graph("2 1\n1 5\n2 7\n1 2\n")
    assert g.n == 2
    assert g.weight_of(range(2)) == 12


def test_parse_reports_line_numbers():
    with pytest.raises(GraphFormatError, match="line 3"):
        parse_graph("2 1\n1 1\nbroken line\n1 2\n")


@pytest.mark.parametrize("text,err", [
    ("2 1\n1 1\n2 -1\n1 2\n", "negative"),
    ("1 0\n1 1\n", "at least 2"),
    ("4 2\n1 1\n2 1\n3 1\n4 1\n1 2\n3 4\n", "connected"),
    ("2 2\n1 1\n2 1\n1 2\n2 1\n", "parallel"),
])
def test_parse_rejects_invalid(text, err):
    with pytest.raises(GraphFormatError, match=err):
        parse_graph(text)


def test_comments_and_blank_lines_ignored():
    g = parse_graph("# header\n\n2 1\n# weights\n1 1\n2 1\n1 2\n")
    assert g.n == 2


def test_roundtrip_identity(rng):
    for i in range(25):
        g = random_connected(rng.randint(2, 20), rng.randint(0, 10), seed=i,
                             weights="uniform")
        g2 = parse_graph(serialize_graph(g))
        assert g2.n == g.n and g2.edges == g.edges and g2.weights == g.weights


def test_distances_on_path():
    dm = all_pairs_distances(path_graph(4))
    assert dm.d(0, 3) == 3


def test_distances_on_even_cycle():
    dm = all_pairs_distances(cycle_graph(6))
    assert dm.d(0, 3) == 3


def test_complete_wheel_distances_are_one_or_two():
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, 8) for i in range(8)]
    dm = all_pairs_distances(build(9, edges))
    off_diag = dm.a[~np.eye(9, dtype=bool)]
    assert set(off_diag.tolist()) <= {1, 2}


def test_distance_matrix_invariants(rng):
    for i in range(1000):
        n = rng.randint(2, 60)
        g = random_connected(n, rng.randint(0, n), seed=i)
        a = all_pairs_distances(g).a.astype(np.int64)
        assert (a == a.T).all()
        assert (np.diag(a) == 0).all()
        if n > 2:
            assert (a[:, None, :] <= a[:, :, None] + a[None, :, :].transpose(1, 0, 2)).all()
        # unit distance exactly on edges
        assert {(u, v) for u in range(n) for v in range(n) if u < v and a[u, v] == 1} == set(g.edges)


def test_classify_families():
    assert classify(cycle_graph(7)).tag == "cycle"
    assert classify(star_graph(4)).tag == "tree"
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, 8) for i in range(8)]
    cls = classify(build(9, edges))
    assert cls.tag == "complete-wheel" and cls.hub == 8
    # hub joined to only some rim vertices
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(i, 8) for i in (0, 2, 5)]
    cls = classify(build(9, edges))
    assert cls.tag == "wheel" and cls.hub == 8
    # K4: every vertex removal leaves a triangle, so not a unique hub
    k4 = build(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert classify(k4).tag == "kaug-tree" and classify(k4).k == 3


def test_classify_kaug_cap():
    g = random_connected(20, 15, seed=1)
    k = g.m - g.n + 1
    assert classify(g, kaug_cap=k).k == k
    assert classify(g, kaug_cap=k - 1).tag == "general"


def _relabel(g: WeightedGraph, perm):
    inv = {v: i for i, v in enumerate(perm)}
    edges = [(inv[u], inv[v]) for u, v in g.edges]
    ws = [g.weights[perm[i]] for i in range(g.n)]
    return WeightedGraph.build(g.n, edges, ws)


def test_classify_stable_under_relabeling(rng):
    for i in range(40):
        n = rng.randint(3, 14)
        g = random_connected(n, rng.randint(0, 4), seed=100 + i)
        perm = list(range(n))
        rng.shuffle(perm)
        h = _relabel(g, perm)
        a, b = classify(g), classify(h)
        assert a.tag == b.tag and a.k == b.k
        if a.hub is not None:
            assert perm[b.hub] == a.hub
