import random
from itertools import combinations

import networkx as nx
import pytest

from biptw.extint import POS_INF
from biptw.flow import FlowNetwork, bipartite_min_vertex_cover, max_flow, min_vertex_cut
from biptw.graph import Graph, GraphError, complete_bipartite, cycle_graph, path_graph


def test_single_arc():
    net = FlowNetwork(2, 0, 1)
    net.add_arc(0, 1, 7)
    value, cut, side = max_flow(net)
    assert value == 7 and cut == [(0, 1, 7)] and side == {0}


def test_parallel_paths():
    net = FlowNetwork(4, 0, 3)
    net.add_arc(0, 1, 3)
    net.add_arc(1, 3, 3)
    net.add_arc(0, 2, 4)
    net.add_arc(2, 3, 4)
    assert max_flow(net)[0] == 7


def test_network_rejects_bad_terminals():
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 0)
    with pytest.raises(ValueError):
        FlowNetwork(2, 0, 1).add_arc(0, 1, -1)


def test_random_networks_match_cut_enumeration():
    rng = random.Random(11)
    for _ in range(40):
        n = 10
        net = FlowNetwork(n, 0, n - 1)
        arcs = []
        for _ in range(rng.randint(8, 30)):
            u, v = rng.sample(range(n), 2)
            c = rng.randint(0, 9)
            net.add_arc(u, v, c)
            arcs.append((u, v, c))
        value, cut, side = max_flow(net)
        best = None
        middle = list(range(1, n - 1))
        for r in range(len(middle) + 1):
            for extra in combinations(middle, r):
                s_side = {0, *extra}
                c = sum(cap for u, v, cap in arcs if u in s_side and v not in s_side)
                best = c if best is None else min(best, c)
        assert value == best
        assert sum(c for _, _, c in cut) == value
        assert 0 in side and n - 1 not in side


def test_vertex_cover_examples():
    cover, weight = bipartite_min_vertex_cover(complete_bipartite(3, 3))
    assert weight == 3 and len(cover) == 3
    assert bipartite_min_vertex_cover(path_graph(3), [1, 5, 1]) == ((0, 2), 2)
    with pytest.raises(GraphError):
        bipartite_min_vertex_cover(cycle_graph(3))


def test_vertex_cover_with_infinite_weights():
    assert bipartite_min_vertex_cover(path_graph(2), [POS_INF, POS_INF]) == (None, POS_INF)
    assert bipartite_min_vertex_cover(path_graph(3), [POS_INF, 4, POS_INF]) == ((1,), 4)


def random_bipartite(rng, n, p=0.5):
    side = [rng.randrange(2) for _ in range(n)]
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2)
                     if side[u] != side[v] and rng.random() < p])


def test_vertex_cover_matches_subsets_and_konig():
    rng = random.Random(3)
    for _ in range(60):
        n = rng.randint(1, 12)
        g = random_bipartite(rng, n)
        w = [rng.randint(0, 6) for _ in range(n)]
        cover, weight = bipartite_min_vertex_cover(g, w)
        best = min(sum(w[v] for v in range(n) if mask >> v & 1)
                   for mask in range(1 << n)
                   if all(mask >> u & 1 or mask >> v & 1 for u, v in g.edges))
        assert weight == best
        assert all(u in cover or v in cover for u, v in g.edges)
        # the complement is a maximum-weight independent set
        assert sum(w) - weight == sum(w[v] for v in range(n) if v not in cover)
        unit, size = bipartite_min_vertex_cover(g)
        matching = nx.max_weight_matching(nx.Graph(list(g.edges)), maxcardinality=True)
        assert size == len(matching)


def test_vertex_cut_examples():
    assert min_vertex_cut(path_graph(3), [0], [2]) == ((1,), 1)
    square = Graph(4, [(0, 1), (1, 3), (0, 2), (2, 3)])
    assert min_vertex_cut(square, [0], [3]) == ((1, 2), 2)
    with pytest.raises(GraphError):
        min_vertex_cut(path_graph(2), [0], [1])


def test_vertex_cut_matches_subsets():
    rng = random.Random(8)
    for _ in range(60):
        n = rng.randint(3, 12)
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.35])
        a = [0]
        b = [v for v in range(1, n) if v not in g.adj[0]][:1]
        if not b:
            continue
        w = [rng.randint(1, 5) for _ in range(n)]
        cut, weight = min_vertex_cut(g, a, b, w)
        inner = [v for v in range(n) if v not in a and v not in b]
        best = None
        for r in range(len(inner) + 1):
            for removed in combinations(inner, r):
                keep = [v for v in range(n) if v not in removed]
                h = nx.Graph()
                h.add_nodes_from(keep)
                h.add_edges_from(e for e in g.edges if e[0] in keep and e[1] in keep)
                if not nx.has_path(h, a[0], b[0]):
                    c = sum(w[v] for v in removed)
                    best = c if best is None else min(best, c)
        assert weight == best
