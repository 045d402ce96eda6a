"""Simple undirected graphs over dense integer vertices."""

from collections import deque
from itertools import combinations


class GraphError(ValueError):
    pass


def _norm(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Vertex and edge weights are optional; when absent every weight is 1.
    """

    __slots__ = ("n", "edges", "adj", "vertex_weights", "edge_weights")

    def __init__(self, n, edges=(), vertex_weights=None, edge_weights=None):
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        norm = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint out of range")
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            e = _norm(u, v)
            if e in norm:
                raise GraphError(f"parallel edge {e}")
            norm.add(e)
            adj[u].add(v)
            adj[v].add(u)
        if vertex_weights is not None:
            vertex_weights = tuple(vertex_weights)
            if len(vertex_weights) != n:
                raise GraphError("vertex weight map is not total")
            if any(w < 0 for w in vertex_weights):
                raise GraphError("vertex weights must be nonnegative")
        if edge_weights is not None:
            ew = {}
            for (u, v), w in dict(edge_weights).items():
                e = _norm(u, v)
                if e not in norm:
                    raise GraphError(f"weight given for non-edge {e}")
                if w < 0:
                    raise GraphError("edge weights must be nonnegative")
                ew[e] = w
            if len(ew) != len(norm):
                raise GraphError("edge weight map is not total")
            edge_weights = ew
        self.n = n
        self.edges = frozenset(norm)
        self.adj = tuple(frozenset(a) for a in adj)
        self.vertex_weights = vertex_weights
        self.edge_weights = edge_weights

    # -- basic queries -------------------------------------------------
    @property
    def m(self):
        return len(self.edges)

    def vertices(self):
        return range(self.n)

    def sorted_edges(self):
        return sorted(self.edges)

    def has_edge(self, u, v):
        return v in self.adj[u]

    def degree(self, v):
        return len(self.adj[v])

    def vertex_weight(self, v):
        return 1 if self.vertex_weights is None else self.vertex_weights[v]

    def edge_weight(self, u, v):
        return 1 if self.edge_weights is None else self.edge_weights[_norm(u, v)]

    def vertex_weight_list(self):
        return list(self.vertex_weights) if self.vertex_weights is not None else [1] * self.n

    def edge_weight_map(self):
        if self.edge_weights is not None:
            return dict(self.edge_weights)
        return {e: 1 for e in self.edges}

    @property
    def weighted(self):
        return self.vertex_weights is not None or self.edge_weights is not None

    def unweighted(self):
        return Graph(self.n, self.edges)

    def with_weights(self, vertex_weights=None, edge_weights=None):
        return Graph(self.n, self.edges, vertex_weights, edge_weights)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.edges == other.edges
                and self.vertex_weight_list() == other.vertex_weight_list()
                and self.edge_weight_map() == other.edge_weight_map())

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def vertex_set(vs):
    """Sorted duplicate-free tuple of vertex indices."""
    return tuple(sorted(set(vs)))


def bipartition(g, within=None):
    """2-colour ``g`` (or ``g[within]``); ``None`` if an odd cycle exists.

    The lowest-index vertex of every component goes to side A.
    """
    verts = range(g.n) if within is None else sorted(within)
    allowed = None if within is None else set(within)
    side = {}
    for s in verts:
        if s in side:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if allowed is not None and w not in allowed:
                    continue
                if w not in side:
                    side[w] = 1 - side[u]
                    queue.append(w)
                elif side[w] == side[u]:
                    return None
    a = tuple(v for v in verts if side[v] == 0)
    b = tuple(v for v in verts if side[v] == 1)
    return a, b


def is_bipartite(g, within=None):
    return bipartition(g, within) is not None


def induced_subgraph(g, keep):
    """Return ``(g[keep], old_to_new)`` with weights restricted."""
    keep = vertex_set(keep)
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} out of range")
    index = {v: i for i, v in enumerate(keep)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    vw = None if g.vertex_weights is None else [g.vertex_weights[v] for v in keep]
    ew = None
    if g.edge_weights is not None:
        ew = {(index[u], index[v]): w for (u, v), w in g.edge_weights.items()
              if u in index and v in index}
    return Graph(len(keep), edges, vw, ew), index


def remove_vertices(g, drop):
    drop = set(drop)
    return induced_subgraph(g, [v for v in range(g.n) if v not in drop])


def connected_components(g, within=None):
    allowed = set(range(g.n)) if within is None else set(within)
    seen = set()
    comps = []
    for s in sorted(allowed):
        if s in seen:
            continue
        seen.add(s)
        comp = [s]
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in allowed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g):
    return g.n <= 1 or len(connected_components(g)) == 1


def is_biconnected(g):
    """2-connectivity with the separation convention: K_2 counts, K_1 does not."""
    if g.n < 2 or not is_connected(g):
        return False
    if g.n == 2:
        return True
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        if len(connected_components(g, rest)) > 1:
            return False
    return True


def enumerate_kt_occurrences(g, t, heavy_side=()):
    """All t-cliques of ``g`` in lexicographic order.

    When ``g - heavy_side`` is bipartite (required for t >= 3), a clique has
    at most two vertices outside ``heavy_side``, which bounds the search.
    """
    if t < 1:
        raise GraphError("t must be positive")
    heavy = set(heavy_side)
    if t >= 3:
        light = [v for v in range(g.n) if v not in heavy]
        if not is_bipartite(g, light):
            raise GraphError("graph minus heavy side is not bipartite")
    found = set()
    heavy_sorted = sorted(heavy)
    light = [v for v in range(g.n) if v not in heavy]
    # choose 0, 1 or 2 light vertices, then complete inside the heavy side
    light_choices = [()] + [(v,) for v in light] + \
        [(u, v) for u, v in combinations(light, 2) if g.has_edge(u, v)]
    for base in light_choices:
        need = t - len(base)
        if need < 0:
            continue
        cand = [h for h in heavy_sorted if all(g.has_edge(h, b) for b in base)]
        for extra in combinations(cand, need):
            if all(g.has_edge(a, b) for a, b in combinations(extra, 2)):
                found.add(tuple(sorted(base + extra)))
    return sorted(found)


def cliques_naive(g, t):
    return [c for c in combinations(range(g.n), t)
            if all(g.has_edge(a, b) for a, b in combinations(c, 2))]


def find_embeddings(pattern, host, induced=False, first_only=False):
    """Injective maps V(pattern) -> V(host) preserving edges (and non-edges if induced).

    Returned as tuples ``phi`` with ``phi[i]`` the image of pattern vertex i.
    """
    order = _bfs_order(pattern)
    pos = {v: i for i, v in enumerate(order)}
    result = []
    phi = [None] * pattern.n
    used = set()

    def consistent(pv, hv):
        for q in pattern.adj[pv]:
            if phi[q] is not None and not host.has_edge(phi[q], hv):
                return False
        if induced:
            for q in range(pattern.n):
                if phi[q] is not None and q not in pattern.adj[pv] and host.has_edge(phi[q], hv):
                    return False
        return True

    def rec(i):
        if i == len(order):
            result.append(tuple(phi))
            return first_only
        pv = order[i]
        anchors = [phi[q] for q in pattern.adj[pv] if phi[q] is not None and pos[q] < i]
        if anchors:
            cands = sorted(host.adj[anchors[0]])
        else:
            cands = range(host.n)
        for hv in cands:
            if hv in used or host.degree(hv) < pattern.degree(pv):
                continue
            if consistent(pv, hv):
                phi[pv] = hv
                used.add(hv)
                if rec(i + 1):
                    return True
                used.discard(hv)
                phi[pv] = None
        return False

    rec(0)
    return result


def _bfs_order(g):
    order = []
    seen = set()
    for s in range(g.n):
        if s in seen:
            continue
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            order.append(u)
            for w in sorted(g.adj[u]):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return order


def is_isomorphic(g1, g2):
    """Backtracking isomorphism test, meant for small graphs in assertions."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(map(len, g1.adj)) != sorted(map(len, g2.adj)):
        return False
    return bool(find_embeddings(g1, g2, induced=True, first_only=True))


def contains_subgraph(host, pattern, induced=False):
    return bool(find_embeddings(pattern, host, induced=induced, first_only=True))


# -- small constructors -------------------------------------------------

def complete_graph(t):
    return Graph(t, combinations(range(t), 2))


def cycle_graph(n):
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def disjoint_union(*graphs):
    edges = []
    off = 0
    for g in graphs:
        edges.extend((u + off, v + off) for u, v in g.edges)
        off += g.n
    return Graph(off, edges)
