"""Weighted (annotated) vertex cover, and independent set by complement.

Annotation parts: 0 = R (kept out of the cover), 1 = S (forced into it).
"""

from ..boundaried import BoundariedGraph
from ..dp import NiceResult, ProblemPlugin, as_assignment
from ..extint import POS_INF, ext_add
from ..flow import bipartite_min_vertex_cover
from ..graph import Graph, GraphError, induced_subgraph, is_bipartite

R, S = 0, 1


class VertexCover(ProblemPlugin):
    name = "vc"
    p = 2
    opt = "min"
    weight_kind = "vertex"

    def check_weights(self, g, weights):
        if g.edge_weights is not None:
            raise ValueError("vertex cover takes vertex weights only")

    def evaluate(self, g, partition, weights=None):
        w = g.vertex_weight_list() if weights is None else weights
        a = as_assignment(partition)
        for u, v in g.edges:
            if a[u] == R and a[v] == R:
                return POS_INF
        return ext_add(*[w[v] for v in range(g.n) if a[v] == S])

    def solve_base(self, g, annotation, weights=None):
        w = g.vertex_weight_list() if weights is None else list(weights)
        a = as_assignment(annotation)
        rset = {v for v, part in a.items() if part == R}
        free = [v for v in range(g.n) if v not in a]
        if not is_bipartite(g, free):
            raise GraphError("unannotated part is not bipartite")
        for u in rset:
            if g.adj[u] & rset:
                return POS_INF, None
        cover = {v for v, part in a.items() if part == S}
        for u in rset:
            cover |= g.adj[u]
        rest = [v for v in free if v not in cover]
        sub, index = induced_subgraph(g.unweighted(), rest)
        back = {i: v for v, i in index.items()}
        inner, _ = bipartite_min_vertex_cover(sub, [w[back[i]] for i in range(sub.n)])
        if inner is None:
            return POS_INF, None
        cover |= {back[i] for i in inner}
        value = ext_add(*[w[v] for v in cover])
        if value == POS_INF:
            return POS_INF, None
        return value, {v: (S if v in cover else R) for v in range(g.n)}

    def boundary_cost(self, g, assignment, vertices, weights):
        return ext_add(*[weights[v] for v in vertices if assignment[v] == S])

    def nice_reduce(self, g, ctx, assignment, children, weights):
        offset, groups = self.fold_children(g, ctx, assignment, children, weights)
        index = {v: i for i, v in enumerate(ctx.X)}
        edges = [(index[u], index[v]) for u, v in _bag_edges(g, ctx.X)]
        labels = {i: v for v, i in index.items()}
        vw = {}
        nxt = g.n
        n = len(ctx.X)
        for v, group in groups.items():
            plus = self.group_excess(g, group, assignment, v, S, weights)
            minus = self.group_excess(g, group, assignment, v, R, weights)
            # v in the cover pays w(v) plus the children's extra cost;
            # v outside forces the pendant, which carries the other branch
            vw[v] = ext_add(weights[v], plus)
            vw[nxt] = minus
            labels[n] = nxt
            edges.append((index[v], n))
            n += 1
            nxt += 1
        graph = BoundariedGraph(Graph(n, edges), labels)
        return NiceResult(graph, dict(assignment), offset, vertex_weights=vw)


def _bag_edges(g, vertices):
    vs = set(vertices)
    return [(u, v) for u, v in g.sorted_edges() if u in vs and v in vs]


def independent_set_value(g, vc_value, weights=None):
    w = g.vertex_weight_list() if weights is None else weights
    return sum(w) - vc_value
