"""Deterministic graph families and random (graph, decomposition) instances."""

import random

from .decomposition import RootedDecomposition, from_oct
from .graph import (Graph, complete_bipartite, complete_graph, cycle_graph, induced_subgraph,
                    is_bipartite)


def clique(t):
    return complete_graph(t)


def cycle(n):
    return cycle_graph(n)


def biclique(a, b):
    return complete_bipartite(a, b)


def subdivided_clique(t, s):
    """K_t with every edge replaced by a path through ``s`` new vertices.

    Branch vertices keep labels 0..t-1.
    """
    edges = []
    n = t
    for u in range(t):
        for v in range(u + 1, t):
            prev = u
            for _ in range(s):
                edges.append((prev, n))
                prev = n
                n += 1
            edges.append((prev, v))
    return Graph(n, edges)


def no_nice(t):
    """K_{t,t} with a pendant triangle on each vertex, plus its width-1 star decomposition.

    The centre bag is the free set V(K_{t,t}); leaf bag of v has v as apex and
    the two other triangle vertices as free part.
    """
    base = complete_bipartite(t, t)
    edges = list(base.edges)
    parent, alpha, beta = [0], [[]], [list(range(2 * t))]
    n = 2 * t
    for v in range(2 * t):
        a, b = n, n + 1
        n += 2
        edges += [(v, a), (v, b), (a, b)]
        parent.append(0)
        alpha.append([v])
        beta.append([a, b])
    return Graph(n, edges), RootedDecomposition(parent, 0, alpha, beta)


def random_graph(n, p, seed, planted_oct=None):
    """G(n, p); with ``planted_oct = k`` the graph minus vertices 0..k-1 is bipartite.

    Returns ``(graph, decomposition_or_None)``.
    """
    rng = random.Random(seed)
    if planted_oct is None:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        return Graph(n, edges), None
    k = min(planted_oct, n)
    side = {v: rng.randrange(2) for v in range(k, n)}
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u >= k and side[u] == side[v]:
                continue
            if rng.random() < p:
                edges.append((u, v))
    g = Graph(n, edges)
    return g, from_oct(g, range(k))


def _two_colourable(vertices, adj):
    colour = {}
    for s in vertices:
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y not in colour:
                    colour[y] = 1 - colour[x]
                    stack.append(y)
                elif colour[y] == colour[x]:
                    return False
    return True


def random_decomposed(rng, n_max=12, width=2, nodes=None, edge_p=0.5, apex_new=0.5):
    """A random graph on at most ``n_max`` vertices with a valid decomposition of width ≤ ``width``.

    Nodes are created top-down; a child shares some vertices of its parent
    (at most one of them from the parent's free part, at most one placed in
    the child's free part) and adds fresh vertices.  Edges are sampled inside
    bags while keeping every free part bipartite.
    """
    if nodes is None:
        nodes = rng.randint(1, max(1, n_max))
    parent, alpha, beta = [0], [], []
    n = 0

    def fresh(count):
        nonlocal n
        count = max(0, min(count, n_max - n))
        out = list(range(n, n + count))
        n += count
        return out

    for t in range(nodes):
        a, b = set(), set()
        if t > 0:
            p = rng.randrange(t)
            parent.append(p)
            pa, pb = list(alpha[p]), list(beta[p])
            shared_alpha = [v for v in pa if rng.random() < 0.5]
            shared_beta = [rng.choice(pb)] if pb and rng.random() < 0.6 else []
            shared = shared_alpha + shared_beta
            rng.shuffle(shared)
            free_slot = rng.random() < 0.5
            for v in shared:
                if free_slot:
                    b.add(v)
                    free_slot = False
                elif len(a) < width:
                    a.add(v)
        for v in fresh(rng.randint(2 if t == 0 else 0, 3)):
            if len(a) < width and rng.random() < apex_new:
                a.add(v)
            else:
                b.add(v)
        if not a and not b:
            b.update(fresh(1))
        if not a and not b:
            parent.pop()
            break
        alpha.append(sorted(a))
        beta.append(sorted(b))
    k = len(alpha)
    free_parts = [(set(beta[t]), {v: set() for v in beta[t]}) for t in range(k)]
    edges = set()
    for t in range(k):
        bag = sorted(set(alpha[t]) | set(beta[t]))
        for i, u in enumerate(bag):
            for v in bag[i + 1:]:
                if (u, v) in edges or rng.random() >= edge_p:
                    continue
                if _add_if_bipartite(free_parts, u, v):
                    edges.add((u, v))
    g = Graph(n, edges)
    return g, RootedDecomposition(parent, 0, alpha, beta)


def _add_if_bipartite(free_parts, u, v):
    touched = []
    for beta, adj in free_parts:
        if u in beta and v in beta:
            adj[u].add(v)
            adj[v].add(u)
            touched.append(adj)
            if not _two_colourable(beta, adj):
                for a in touched:
                    a[u].discard(v)
                    a[v].discard(u)
                return False
    return True


def attach_pendant_copies(g, d, pattern, anchors):
    """Glue a fresh copy of ``pattern`` at each anchor vertex.

    Pattern vertex 0 is identified with the anchor.  Every copy gets a new
    leaf node below a node holding the anchor; its apex set is a smallest set
    of the other pattern vertices whose removal leaves the copy bipartite.
    """
    from itertools import combinations

    apex = None
    for size in range(pattern.n):
        for s in combinations(range(1, pattern.n), size):
            if is_bipartite(pattern, [v for v in range(pattern.n) if v not in s]):
                apex = set(s)
                break
        if apex is not None:
            break
    parent, alpha, beta = list(d.parent), list(d.alpha), list(d.beta)
    edges = set(g.edges)
    n = g.n
    for a in anchors:
        host = next(t for t in d.nodes() if a in d.bag(t))
        image = {0: a}
        for x in range(1, pattern.n):
            image[x] = n
            n += 1
        edges |= {tuple(sorted((image[x], image[y]))) for x, y in pattern.edges}
        parent.append(host)
        alpha.append(sorted(image[x] for x in apex))
        beta.append(sorted(image[x] for x in range(pattern.n) if x not in apex))
    return Graph(n, edges), RootedDecomposition(parent, d.root, alpha, beta)
