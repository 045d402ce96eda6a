import random

import networkx as nx
import pytest

from biptw.decomposition import (DecompositionError, RootedDecomposition,
                                 coloring_from_decomposition, from_oct,
                                 from_tree_decomposition, is_proper_coloring, node_context,
                                 normalize, push_odd_minor, validate, width)
from biptw.generators import clique, cycle, no_nice, random_decomposed, subdivided_clique
from biptw.graph import Graph, GraphError, complete_bipartite, path_graph
from biptw.oracles import oct_bruteforce


def single(alpha, beta):
    return RootedDecomposition([0], 0, [alpha], [beta])


def axioms(g, d):
    return {v.axiom for v in validate(g, d)}


def test_single_bag_examples():
    assert validate(cycle(4), single([], range(4))) == []
    assert axioms(cycle(5), single([], range(5))) == {"beta-membership"}
    assert width(single([], range(4))) == 0


def test_no_nice_decomposition_is_valid_at_width_one():
    for t in (2, 3, 4):
        g, d = no_nice(t)
        assert validate(g, d) == [] and d.width() == 1


def test_each_axiom_is_reported():
    g = path_graph(3)
    assert axioms(g, single([], [0, 1])) == {"vertex-coverage", "edge-coverage"}
    assert axioms(g, single([0], [0, 1, 2])) == {"alpha-beta-disjoint"}
    assert axioms(g, single([], [0, 1, 5])) == {"vertex-range"}
    # vertex 0 in two bags that are not adjacent in the tree
    split = RootedDecomposition([0, 0, 1], 0, [[], [], []], [[0, 1], [1, 2], [0]])
    assert "connectivity" in axioms(g, split)
    # two free vertices shared with a neighbouring bag
    shared = RootedDecomposition([0, 0], 0, [[], []], [[0, 1, 2], [0, 1]])
    assert "beta-intersection" in axioms(g, shared)


def test_constructor_rejects_malformed_trees():
    with pytest.raises(DecompositionError):
        RootedDecomposition([1, 0], 0, [[], []], [[], []])
    with pytest.raises(DecompositionError):
        RootedDecomposition([0, 2, 1], 0, [[]] * 3, [[]] * 3)
    with pytest.raises(DecompositionError):
        RootedDecomposition([0], 0, [[]], [])


def test_clique_width_is_t_minus_two():
    for t in range(3, 7):
        d = from_oct(clique(t), range(t - 2))
        assert d.width() == t - 2 and validate(clique(t), d) == []


def test_from_oct():
    assert from_oct(cycle(5), [0]).width() == 1
    assert from_oct(complete_bipartite(2, 3), []).width() == 0
    with pytest.raises(DecompositionError):
        from_oct(clique(5), [0, 1])


def test_from_tree_decomposition():
    g = path_graph(4)
    d = from_tree_decomposition(g, [[0, 1], [1, 2], [2, 3]], [(0, 1), (1, 2)])
    assert d.width() == 2 and validate(g, d) == []
    assert from_tree_decomposition(clique(4), [range(4)], []).alpha == from_oct(clique(4), range(4)).alpha
    with pytest.raises(DecompositionError):
        from_tree_decomposition(g, [[0, 1], [2, 3]], [(0, 1)])


def test_normalize_examples():
    g = path_graph(3)
    twin = RootedDecomposition([0, 0], 0, [[0, 1], [0, 1]], [[2], [2]])
    assert normalize(g, twin).node_count == 1
    chain = from_tree_decomposition(g, [[0], [0, 1], [0, 1, 2], [1, 2]],
                                    [(0, 1), (1, 2), (2, 3)])
    out = normalize(g, chain)
    assert out.node_count == 1 and out.alpha == ((0, 1, 2),)
    d = from_tree_decomposition(g, [[0, 1], [1, 2]], [(0, 1)])
    assert normalize(g, d).alpha == d.alpha


def test_normalize_rejects_invalid_input():
    with pytest.raises(DecompositionError):
        normalize(cycle(5), single([], range(5)))


def test_node_context_sets():
    g, d = no_nice(2)
    root = node_context(d, 0)
    assert root.delta == () and root.A == () and root.B == (0, 1, 2, 3)
    leaf = node_context(d, 1)
    assert leaf.delta == (0,) and leaf.A == (0,) and leaf.B == ()


def test_push_identity():
    g, d = no_nice(2)
    h, dh = push_odd_minor(g, d, g, (range(g.n), []))
    assert h == g and dh.alpha == d.alpha and dh.beta == d.beta


def test_push_doubly_subdivided_k4_to_k4():
    g = subdivided_clique(4, 2)
    d = from_oct(g, oct_bruteforce(g))
    h, dh = push_odd_minor(g, d, g, (range(4), range(4, g.n)))
    assert nx.is_isomorphic(nx.Graph(list(h.edges)), nx.complete_graph(4))
    assert validate(h, dh) == [] and dh.width() <= d.width()


def test_push_rejects_bad_cuts():
    g = cycle(4)
    d = single([], range(4))
    with pytest.raises(GraphError):
        push_odd_minor(g, d, g, ([0, 1], [1, 2, 3]))
    with pytest.raises(GraphError):
        push_odd_minor(g, d, Graph(4, [(0, 2)]), (range(4), []))


def test_coloring_examples():
    g = complete_bipartite(3, 3)
    assert len(set(coloring_from_decomposition(g, single([], range(6))))) <= 2
    c5 = coloring_from_decomposition(cycle(5), from_oct(cycle(5), [0]))
    assert is_proper_coloring(cycle(5), c5) and len(set(c5)) == 3
    g, d = no_nice(3)
    colors = coloring_from_decomposition(g, d)
    assert is_proper_coloring(g, colors) and len(set(colors)) <= 3


def test_random_decompositions_normalize_and_colour():
    rng = random.Random(21)
    for _ in range(200):
        g, d = random_decomposed(rng, n_max=rng.randint(2, 10), width=rng.randint(0, 3))
        assert validate(g, d) == []
        colors = coloring_from_decomposition(g, d)
        assert is_proper_coloring(g, colors) and len(set(colors)) <= d.width() + 2
        nd = normalize(g, d)
        # merging a nested apex bag into a free one can only lower the width
        assert validate(g, nd) == [] and nd.width() <= d.width()
        assert nd.node_count <= max(1, g.n)


def test_width_zero_validates_exactly_on_bipartite_graphs():
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > 7:
            break
        g = Graph(h.number_of_nodes(), h.edges())
        assert (validate(g, single([], range(g.n))) == []) == nx.is_bipartite(h)


def test_json_round_trip():
    g, d = no_nice(2)
    back = RootedDecomposition.from_json(d.to_json())
    assert (back.parent, back.root, back.alpha, back.beta) == (d.parent, d.root, d.alpha, d.beta)
