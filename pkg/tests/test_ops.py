import math
import random

import pytest

from expgraph import EmptyGraph, UnknownVertex, WrongDirectedness, from_edges
from expgraph import ops
from expgraph.generators import erdos_renyi
from expgraph.named import (complete_graph, cycle_graph, directed_cycle, empty_graph,
                            path_graph, star_graph)

import oracles


def test_min_degree_vertex():
    assert ops.min_degree_vertex(star_graph(3)) == 1
    assert ops.min_degree_vertex(complete_graph(5)) == 0
    assert ops.min_degree_vertex(path_graph(4)) == 0
    with pytest.raises(EmptyGraph):
        ops.min_degree_vertex(empty_graph(0))


def test_max_degree_vertex():
    assert ops.max_degree_vertex(star_graph(3)) == 0
    assert ops.max_degree_vertex(path_graph(4)) == 1


@pytest.mark.parametrize("g, expected", [
    (cycle_graph(5), True), (path_graph(4), False), (empty_graph(0), True),
])
def test_is_regular(g, expected):
    assert ops.is_regular(g) is expected


def test_diameter():
    assert ops.diameter(path_graph(4)) == 3
    assert ops.diameter(complete_graph(5)) == 1
    assert ops.diameter(empty_graph(2)) == ops.INFINITE == math.inf
    with pytest.raises(EmptyGraph):
        ops.diameter(empty_graph(0))


@pytest.mark.parametrize("seed", range(20))
def test_diameter_matches_floyd_warshall(seed):
    g = erdos_renyi(8, 0.35, seed=seed)
    d = oracles.distances(8, g.edges())
    assert ops.diameter(g) == max(max(row) for row in d)


def test_connected_components():
    assert ops.connected_components(path_graph(4)) == [[0, 1, 2, 3]]
    assert ops.connected_components(from_edges(4, [(0, 1), (2, 3)])) == [[0, 1], [2, 3]]
    assert ops.connected_components(empty_graph(0)) == []


def test_scc_examples():
    assert ops.strongly_connected_components(directed_cycle(3)) == [[0, 1, 2]]
    dag = from_edges(3, [(0, 1), (1, 2)], directed=True)
    assert ops.strongly_connected_components(dag) == [[0], [1], [2]]
    pendant = from_edges(4, [(0, 1), (1, 2), (2, 0), (2, 3)], directed=True)
    assert ops.strongly_connected_components(pendant) == [[0, 1, 2], [3]]
    with pytest.raises(WrongDirectedness):
        ops.strongly_connected_components(path_graph(3))


@pytest.mark.parametrize("seed", range(40))
def test_scc_matches_mutual_reachability(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 10)
    arcs = [(u, v) for u in range(n) for v in range(n) if u != v and rng.random() < 0.2]
    comps = ops.strongly_connected_components(from_edges(n, arcs, directed=True))
    mutual = oracles.mutually_reachable(n, arcs)
    assert sorted(v for c in comps for v in c) == list(range(n))
    where = {v: i for i, c in enumerate(comps) for v in c}
    for u in range(n):
        for v in range(n):
            assert mutual[u][v] == (where[u] == where[v])


def test_scc_deep_path_has_no_recursion_limit():
    n = 5000
    g = from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)], directed=True)
    assert len(ops.strongly_connected_components(g)) == 1


def test_is_acyclic():
    assert ops.is_acyclic(from_edges(3, [(0, 1), (1, 2)], directed=True))
    assert not ops.is_acyclic(directed_cycle(3))
    assert not ops.is_acyclic(from_edges(1, [(0, 0)], directed=True))


def test_copy_graph():
    k5 = complete_graph(5)
    c = ops.copy_graph(k5)
    assert (len(c), c.number_of_edges()) == (5, 10) and set(c.edges()) == set(k5.edges())
    c.remove_vertex(2)
    assert len(k5) == 5
    assert len(ops.copy_graph(empty_graph(0))) == 0


def test_induced_subgraph():
    k3 = ops.induced_subgraph(complete_graph(5), [0, 1, 2])
    assert (len(k3), k3.number_of_edges()) == (3, 3)
    two = ops.induced_subgraph(path_graph(4), [0, 2])
    assert (len(two), two.number_of_edges()) == (2, 0)
    assert len(ops.induced_subgraph(path_graph(4), [])) == 0
    with pytest.raises(UnknownVertex):
        ops.induced_subgraph(path_graph(4), [9])


@pytest.mark.parametrize("seed", range(10))
def test_induced_on_all_vertices_is_identity(seed):
    g = erdos_renyi(9, 0.4, seed=seed)
    assert ops.induced_subgraph(g, g.vertices()) == g


def test_merge_graphs():
    g = cycle_graph(5)
    assert ops.merge_graphs(g, empty_graph(0)) == g
    assert ops.merge_graphs(g, g) == g
    t1 = from_edges(3, [(0, 1), (1, 2), (0, 2)])
    t2 = from_edges(0, [])
    for v in (3, 4, 5):
        t2.add_vertex(vid=v)
    t2.add_edges_from([(3, 4), (4, 5), (3, 5)])
    m = ops.merge_graphs(t1, t2)
    assert (len(m), m.number_of_edges()) == (6, 6)
    with pytest.raises(WrongDirectedness):
        ops.merge_graphs(g, directed_cycle(3))


def test_kn_diameter_is_one():
    for n in range(2, 8):
        assert ops.diameter(complete_graph(n)) == 1
