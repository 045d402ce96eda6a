"""Annotated K_t-subgraph cover (unweighted): delete fewest vertices so that
no K_t remains.  Parts: 0 = R (kept), 1 = S (deleted).  For t = 2 this is
vertex cover and every call is forwarded to that plugin.
"""

from ..boundaried import BoundariedGraph
from ..dp import NiceResult, ProblemPlugin, ReductionError, as_assignment
from ..extint import POS_INF, ext_add
from ..flow import bipartite_min_vertex_cover
from ..graph import Graph, GraphError, enumerate_kt_occurrences, induced_subgraph, is_bipartite
from .vc import VertexCover, _bag_edges

R, S = 0, 1


class KtCover(ProblemPlugin):
    p = 2
    opt = "min"
    weight_kind = None

    def __init__(self, t):
        if t < 2:
            raise ValueError("t must be at least 2")
        self.t = t
        self.name = f"kt-cover(t={t})"
        self._vc = VertexCover() if t == 2 else None
        if self._vc is not None:
            # gadget weights of the vertex cover reduction must reach the solver
            self.weight_kind = "vertex"

    def default_weights(self, g):
        return [1] * g.n if self._vc is not None else None

    def check_weights(self, g, weights):
        if g.weighted or (weights is not None and any(w != 1 for w in weights)):
            raise ValueError("K_t-cover is an unweighted problem")

    def evaluate(self, g, partition, weights=None):
        a = as_assignment(partition)
        keep = [v for v in range(g.n) if a[v] == R]
        sub, _ = induced_subgraph(g.unweighted(), keep)
        if _has_clique(sub, self.t):
            return POS_INF
        return g.n - len(keep)

    def solve_base(self, g, annotation, weights=None):
        if self._vc is not None:
            return self._vc.solve_base(g.unweighted(), annotation,
                                       [1] * g.n if weights is None else weights)
        a = as_assignment(annotation)
        free = [v for v in range(g.n) if v not in a]
        if not is_bipartite(g, free):
            raise GraphError("unannotated part is not bipartite")
        deleted = {v for v, part in a.items() if part == S}
        keep = [v for v in range(g.n) if v not in deleted]
        sub, index = induced_subgraph(g.unweighted(), keep)
        back = {i: v for v, i in index.items()}
        rset = {index[v] for v, part in a.items() if part == R}
        occ = enumerate_kt_occurrences(sub, self.t, rset)
        forced = set()
        pairs = []
        for c in occ:
            loose = [x for x in c if x not in rset]
            if not loose:
                return POS_INF, None
            if len(loose) == 1:
                forced.add(loose[0])
            else:
                pairs.append(tuple(loose))
        pairs = [(x, y) for x, y in pairs if x not in forced and y not in forced]
        aux = Graph(sub.n, set(pairs))
        cover, size = bipartite_min_vertex_cover(aux)
        chosen = forced | set(cover)
        deleted |= {back[x] for x in chosen}
        value = len(deleted)
        return value, {v: (S if v in deleted else R) for v in range(g.n)}

    def boundary_cost(self, g, assignment, vertices, weights):
        return sum(1 for v in vertices if assignment[v] == S)

    def excess(self, g, child, assignment, weights):
        if self._vc is not None:
            return self._vc.excess(g, child, assignment, weights)
        return super().excess(g, child, assignment, weights)

    def nice_reduce(self, g, ctx, assignment, children, weights):
        if self._vc is not None:
            return self._vc.nice_reduce(g, ctx, assignment, children, weights)
        offset, groups = self.fold_children(g, ctx, assignment, children, weights)
        removed = {}
        for v, group in groups.items():
            c_plus = ext_add(1, self.group_excess(g, group, assignment, v, S, weights))
            c_minus = self.group_excess(g, group, assignment, v, R, weights)
            if c_plus <= c_minus:
                removed[v] = S
                offset = ext_add(offset, c_plus)
            elif c_plus == ext_add(c_minus, 1):
                offset = ext_add(offset, c_minus)
            else:
                raise ReductionError("deleting one vertex should cost at most one more")
        keep = [v for v in ctx.X if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in _bag_edges(g, keep)]
        graph = BoundariedGraph(Graph(len(keep), edges), {i: v for v, i in index.items()})
        return NiceResult(graph, dict(assignment), offset, fixed=removed)


def _has_clique(g, t):
    if t <= 1:
        return g.n >= t
    from itertools import combinations
    for v in range(g.n):
        nb = sorted(u for u in g.adj[v] if u > v)
        for rest in combinations(nb, t - 1):
            if all(g.has_edge(x, y) for x, y in combinations(rest, 2)):
                return True
    return False
