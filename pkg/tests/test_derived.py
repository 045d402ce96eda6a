"""Small reference values, each frozen after an exhaustive recount.

Every test states the literal and recomputes it by an enumeration that does
not go through the solver being checked.
"""

from itertools import combinations

import networkx as nx

from biptw.decomposition import from_tree_decomposition, push_odd_minor, validate
from biptw.generators import clique, cycle, no_nice
from biptw.graph import Graph, enumerate_kt_occurrences, path_graph
from biptw.oracles import hat_p_bruteforce, max_packing_bruteforce
from biptw.packing import enumerate_partial_copies, solve_packing_xp
from biptw.problems import make_plugin


def cliques_by_subsets(g, t):
    return [s for s in combinations(range(g.n), t)
            if all(g.has_edge(a, b) for a, b in combinations(s, 2))]


def test_k4_occurrences_in_k5():
    g = clique(5)
    assert len(cliques_by_subsets(g, 4)) == 5
    assert len(enumerate_kt_occurrences(g, 4, heavy_side=(0, 1, 2))) == 5


def test_k4_needs_two_deletions_for_triangle_cover():
    plugin = make_plugin("kt-cover", 3)
    g = clique(4)

    def survivors(deleted):
        return Graph(4, [e for e in g.edges if not set(e) & set(deleted)])

    smallest = min(r for r in range(5) for s in combinations(range(4), r)
                   if not cliques_by_subsets(survivors(s), 3))
    assert smallest == 2
    assert hat_p_bruteforce(plugin, g)[0] == 2
    # two kept vertices leave a bipartite free part for the base solver
    assert plugin.solve_base(g, {0: 0, 1: 0})[0] == 2


def test_k4_with_three_kept_vertices_deletes_the_fourth():
    plugin = make_plugin("kt-cover", 4)
    value, witness = plugin.solve_base(clique(4), {0: 0, 1: 0, 2: 0})
    assert value == 1 and witness[3] == 1
    assert hat_p_bruteforce(plugin, clique(4), {0: 0, 1: 0, 2: 0})[0] == 1


def test_oct_on_c5_with_adjacent_opposite_pins():
    plugin = make_plugin("oct")
    assert hat_p_bruteforce(plugin, cycle(5), {0: 1, 1: 2})[0] == 1
    assert plugin.solve_base(cycle(5), {0: 1, 1: 2})[0] == 1


def test_no_nice_two_packs_four_triangles():
    g, d = no_nice(2)
    assert (g.n, g.m) == (12, 16)
    assert max_packing_bruteforce(g, clique(3))[0] == 4
    assert solve_packing_xp(g, d, clique(3))[0] == 4


def test_induced_matching_of_p4():
    assert max_packing_bruteforce(path_graph(4), clique(2), "scattered")[0] == 1


def test_partial_copies_of_triangle_on_one_vertex():
    # nothing placed, the whole triangle inside, or one boundary vertex
    # with either none or both of the others behind it
    copies = enumerate_partial_copies(Graph(1, []), [0], clique(3), 1)
    shapes = sorted((len(bd), len(inner)) for (bd, inner), in (c.pieces for c in copies))
    assert shapes == [(0, 0), (0, 3), (1, 0), (1, 2)]


def test_path_decomposition_of_c6_has_width_three():
    g = cycle(6)
    bags = [[0, 1, 5], [1, 4, 5], [1, 2, 4], [2, 3, 4]]
    d = from_tree_decomposition(g, bags, [(0, 1), (1, 2), (2, 3)])
    assert not validate(g, d)
    assert d.width() == 3


def test_c6_cut_contracts_to_c4():
    g = cycle(6)
    d = from_tree_decomposition(g, [list(range(6))], [])
    d = type(d)([0], 0, [[]], [list(range(6))])
    h, dh = push_odd_minor(g, d, g, ([0, 4, 5], [1, 2, 3]))
    assert nx.is_isomorphic(nx.Graph(list(h.edges)), nx.cycle_graph(4))
    assert not validate(h, dh) and dh.width() == 0
