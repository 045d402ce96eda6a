"""Annotated odd cycle transversal (unweighted).

Parts: 0 = S (deleted), 1 = X1 and 2 = X2 (forced sides of the remaining
bipartite graph).
"""

from collections import deque

from ..boundaried import BoundariedGraph
from ..dp import NiceResult, ProblemPlugin, ReductionError, as_assignment
from ..extint import POS_INF, ext_add
from ..flow import min_vertex_cut
from ..graph import Graph, GraphError, bipartition
from .vc import _bag_edges

S, X1, X2 = 0, 1, 2


class OddCycleTransversal(ProblemPlugin):
    name = "oct"
    p = 3
    opt = "min"
    weight_kind = None

    def evaluate(self, g, partition, weights=None):
        a = as_assignment(partition)
        for u, v in g.edges:
            if a[u] != S and a[u] == a[v]:
                return POS_INF
        return sum(1 for v in range(g.n) if a[v] == S)

    def solve_base(self, g, annotation, weights=None):
        a = as_assignment(annotation)
        free = [v for v in range(g.n) if v not in a]
        colouring = bipartition(g, free)
        if colouring is None:
            raise GraphError("unannotated part is not bipartite")
        for u, v in g.edges:
            if u in a and v in a and a[u] != S and a[u] == a[v]:
                return POS_INF, None
        deleted = [v for v, part in a.items() if part == S]
        colour = {v: 1 for v in colouring[0]}
        colour.update({v: 2 for v in colouring[1]})
        fixed = sorted(v for v, part in a.items() if part != S)
        # doubled graph: one node per free vertex, two copies per fixed vertex
        node = {v: i for i, v in enumerate(free)}
        copy = {}
        for v in fixed:
            copy[v] = (len(node) + 2 * fixed.index(v), len(node) + 2 * fixed.index(v) + 1)
        size = len(node) + 2 * len(fixed)
        edges = set()
        for u, v in g.edges:
            if u in node and v in node:
                edges.add((node[u], node[v]))
            elif u in node or v in node:
                y, x = (u, v) if u in node else (v, u)
                if a[x] == S:
                    continue
                # y of colour i attaches to copy 3 - i of x
                edges.add((node[y], copy[x][2 - colour[y]]))
        side1 = [v for v in fixed if a[v] == X1]
        side2 = [v for v in fixed if a[v] == X2]
        for x in side1:
            for y in side2:
                edges.add((copy[x][0], copy[y][1]))
        aux = Graph(size, {(min(e), max(e)) for e in edges})
        y1 = [copy[x][0] for x in side1] + [copy[y][1] for y in side2]
        y2 = [copy[x][1] for x in side1] + [copy[y][0] for y in side2]
        weights_aux = [1] * size
        cut, value = min_vertex_cut(aux, y1, y2, weights_aux)
        if cut is None:
            return POS_INF, None
        cut = set(cut)
        # free vertices reachable from a "keep" terminal keep their colour
        flip = set()
        seen = set(y1) | set(y2)
        queue = deque((t, False) for t in y1)
        queue.extend((t, True) for t in y2)
        label = {t: False for t in y1}
        label.update({t: True for t in y2})
        while queue:
            u, fl = queue.popleft()
            for w in aux.adj[u]:
                if w in cut or w in seen:
                    continue
                seen.add(w)
                label[w] = fl
                queue.append((w, fl))
        out = dict(a)
        for v in free:
            i = node[v]
            if i in cut:
                out[v] = S
            else:
                c = colour[v]
                out[v] = (3 - c) if label.get(i, False) else c
        return len(deleted) + value, out

    def boundary_cost(self, g, assignment, vertices, weights):
        return sum(1 for v in vertices if assignment[v] == S)

    def nice_reduce(self, g, ctx, assignment, children, weights):
        offset, groups = self.fold_children(g, ctx, assignment, children, weights)
        removed = {}
        pins = []  # (v, which terminal)
        for v, group in groups.items():
            cs = ext_add(1, self.group_excess(g, group, assignment, v, S, weights))
            c1 = self.group_excess(g, group, assignment, v, X1, weights)
            c2 = self.group_excess(g, group, assignment, v, X2, weights)
            if cs <= c1 and cs <= c2:
                removed[v] = S
                offset = ext_add(offset, cs)
                continue
            if cs > ext_add(min(c1, c2), 1):
                raise ReductionError("deleting one vertex should cost at most one more")
            if c1 == c2:
                offset = ext_add(offset, c1)
            elif c1 < c2:
                pins.append((v, X2))  # edge to u2 keeps v off side 2
                offset = ext_add(offset, c1)
            else:
                pins.append((v, X1))
                offset = ext_add(offset, c2)
        keep = [v for v in ctx.X if v not in removed]
        index = {v: i for i, v in enumerate(keep)}
        u1, u2 = len(keep), len(keep) + 1
        edges = [(index[a], index[b]) for a, b in _bag_edges(g, keep)]
        edges += [(index[v], u1 if side == X1 else u2) for v, side in pins]
        labels = {i: v for v, i in index.items()}
        labels[u1], labels[u2] = g.n, g.n + 1
        out = dict(assignment)
        out[g.n], out[g.n + 1] = X1, X2
        graph = BoundariedGraph(Graph(len(keep) + 2, edges), labels)
        return NiceResult(graph, out, offset, fixed=removed)
