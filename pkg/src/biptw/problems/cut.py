"""Annotated maximum weighted cut.  Parts: 0 = X1, 1 = X2."""

from ..boundaried import BoundariedGraph
from ..dp import NiceResult, ProblemPlugin, as_assignment
from ..flow import FlowNetwork, max_flow
from ..graph import Graph, GraphError, bipartition
from .vc import _bag_edges

X1, X2 = 0, 1


def _w(weights, g, u, v):
    if weights is None:
        return g.edge_weight(u, v)
    return weights[(u, v) if u < v else (v, u)]


class MaxCut(ProblemPlugin):
    name = "maxcut"
    p = 2
    opt = "max"
    weight_kind = "edge"

    def check_weights(self, g, weights):
        if g.vertex_weights is not None:
            raise ValueError("max cut takes edge weights only")

    def evaluate(self, g, partition, weights=None):
        a = as_assignment(partition)
        return sum(_w(weights, g, u, v) for u, v in g.edges if a[u] != a[v])

    def solve_base(self, g, annotation, weights=None):
        """Exact max cut when the unannotated part is bipartite.

        Both forced sides act as single terminals.  With the bipartition
        (A, B) of the free part, flipping the B-side variables turns every
        "edge left uncut" penalty into a disagreement penalty, so the minimum
        uncut weight is one s-t minimum cut.
        """
        a = as_assignment(annotation)
        free = [v for v in range(g.n) if v not in a]
        parts = bipartition(g, free)
        if parts is None:
            raise GraphError("unannotated part is not bipartite")
        side_a = set(parts[0])
        total = 0
        fixed_uncut = 0
        to1 = {v: 0 for v in free}
        to2 = {v: 0 for v in free}
        free_edges = []
        for u, v in g.edges:
            w = _w(weights, g, u, v)
            total += w
            if u in a and v in a:
                if a[u] == a[v]:
                    fixed_uncut += w
            elif u in a or v in a:
                x, y = (u, v) if u in a else (v, u)
                (to1 if a[x] == X1 else to2)[y] += w
            else:
                free_edges.append((u, v, w))
        index = {v: i for i, v in enumerate(free)}
        s, t = len(free), len(free) + 1
        net = FlowNetwork(len(free) + 2, s, t)
        for v in free:
            # penalty when v sits on X1 is to1[v], on X2 is to2[v]
            cost_tau0, cost_tau1 = (to1[v], to2[v]) if v in side_a else (to2[v], to1[v])
            net.add_arc(s, index[v], cost_tau1)
            net.add_arc(index[v], t, cost_tau0)
        for u, v, w in free_edges:
            net.add_arc(index[u], index[v], w)
            net.add_arc(index[v], index[u], w)
        uncut, _, source_side = max_flow(net)
        out = dict(a)
        for v in free:
            tau = 0 if index[v] in source_side else 1
            out[v] = tau if v in side_a else 1 - tau
        return total - fixed_uncut - uncut, out

    def boundary_cost(self, g, assignment, vertices, weights):
        vs = set(vertices)
        return sum(_w(weights, g, u, v) for u, v in g.edges
                   if u in vs and v in vs and assignment[u] != assignment[v])

    def nice_reduce(self, g, ctx, assignment, children, weights):
        offset, groups = self.fold_children(g, ctx, assignment, children, weights)
        index = {v: i for i, v in enumerate(ctx.X)}
        u1, u2 = len(ctx.X), len(ctx.X) + 1
        edges = [(index[a], index[b]) for a, b in _bag_edges(g, ctx.X)]
        labels = {i: v for v, i in index.items()}
        labels[u1], labels[u2] = g.n, g.n + 1
        ew = {}
        for v in ctx.B:
            edges += [(index[v], u1), (index[v], u2)]
            ew[(v, g.n)] = 0
            ew[(v, g.n + 1)] = 0
        for v, group in groups.items():
            # v on X1 cuts the edge to u2, v on X2 cuts the edge to u1
            ew[(v, g.n + 1)] = self.group_excess(g, group, assignment, v, X1, weights)
            ew[(v, g.n)] = self.group_excess(g, group, assignment, v, X2, weights)
        out = dict(assignment)
        out[g.n], out[g.n + 1] = X1, X2
        graph = BoundariedGraph(Graph(len(ctx.X) + 2, edges), labels)
        return NiceResult(graph, out, offset, edge_weights=ew)
