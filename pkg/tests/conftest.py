"""Shared builders for the test suite."""

from __future__ import annotations

import random

import pytest

from drsolve import WeightedGraph, all_pairs_distances


def build(n, edges, ws=None):
    return WeightedGraph.build(n, edges, ws)


def path_graph(n, ws=None):
    return build(n, [(i, i + 1) for i in range(n - 1)], ws)


def cycle_graph(n, ws=None):
    return build(n, [(i, (i + 1) % n) for i in range(n)], ws)


def star_graph(k, ws=None):
    """Center 0 with k leaves."""
    return build(k + 1, [(0, i) for i in range(1, k + 1)], ws)


def prism_graph(k, ws=None):
    """Two concentric k-cycles joined by a perfect matching."""
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return build(2 * k, edges, ws)


def distances(g):
    return all_pairs_distances(g)


@pytest.fixture
def rng():
    return random.Random(0xD25)
