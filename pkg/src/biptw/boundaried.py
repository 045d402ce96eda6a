"""Boundaried graphs and their gluing operations."""

from dataclasses import dataclass, field

from .graph import Graph, GraphError, induced_subgraph


@dataclass(frozen=True)
class BoundariedGraph:
    """A graph whose boundary vertices carry distinct natural-number labels.

    ``labels`` maps boundary vertex -> label; the boundary is its key set.
    """

    graph: Graph
    labels: dict = field(default_factory=dict)

    def __post_init__(self):
        labels = dict(self.labels)
        if len(set(labels.values())) != len(labels):
            raise GraphError("boundary labels must be injective")
        for v, lab in labels.items():
            if not 0 <= v < self.graph.n:
                raise GraphError(f"boundary vertex {v} out of range")
            if lab < 0:
                raise GraphError("labels must be natural numbers")
        object.__setattr__(self, "labels", labels)

    @property
    def boundary(self):
        return tuple(sorted(self.labels))

    def label_image(self):
        return set(self.labels.values())

    def vertex_of(self):
        return {lab: v for v, lab in self.labels.items()}

    def is_trivial(self):
        return len(self.labels) == self.graph.n

    @classmethod
    def trivial(cls, g, labels=None):
        """Every vertex on the boundary; by default vertex i has label i."""
        if labels is None:
            labels = {v: v for v in range(g.n)}
        return cls(g, labels)

    @classmethod
    def from_host(cls, host, keep, boundary):
        """``host[keep]`` with ``boundary`` as boundary, labelled by host index."""
        sub, index = induced_subgraph(host, keep)
        return cls(sub, {index[v]: v for v in boundary}), index


@dataclass
class HeirMap:
    """Where each operand vertex ended up in a glued graph."""

    forward: tuple  # one dict per operand: original vertex -> glued vertex
    backward: dict  # glued vertex -> list of (operand index, original vertex)

    def heir(self, operand, v):
        return self.forward[operand].get(v)


def compatible(g1, g2):
    if set(g1.labels.values()) != set(g2.labels.values()):
        return False
    v2 = g2.vertex_of()
    for a, b in _boundary_pairs(g1):
        la, lb = g1.labels[a], g1.labels[b]
        if g1.graph.has_edge(a, b) != g2.graph.has_edge(v2[la], v2[lb]):
            return False
    return True


def _boundary_pairs(g):
    bd = g.boundary
    for i, a in enumerate(bd):
        for b in bd[i + 1:]:
            yield a, b


def _glue(g1, g2, drop_vertices=(), drop_edges=()):
    """Glue along shared labels; returns (graph, heirs, label_of_new_vertex)."""
    lab2v1 = g1.vertex_of()
    fwd1 = {v: v for v in range(g1.graph.n)}
    fwd2 = {}
    n = g1.graph.n
    drop_vertices = set(drop_vertices)
    vweights = list(g1.graph.vertex_weight_list())
    for v in range(g2.graph.n):
        if v in drop_vertices:
            continue
        lab = g2.labels.get(v)
        if lab is not None and lab in lab2v1:
            u = lab2v1[lab]
            if g1.graph.vertex_weight(u) != g2.graph.vertex_weight(v):
                raise GraphError(f"vertex weight conflict on label {lab}")
            fwd2[v] = u
        else:
            fwd2[v] = n
            vweights.append(g2.graph.vertex_weight(v))
            n += 1
    edges = {}
    for (u, v) in g1.graph.edges:
        edges[(u, v)] = g1.graph.edge_weight(u, v)
    drop_edges = set(drop_edges)
    for (u, v) in g2.graph.edges:
        if u not in fwd2 or v not in fwd2 or (u, v) in drop_edges:
            continue
        a, b = fwd2[u], fwd2[v]
        e = (a, b) if a < b else (b, a)
        w = g2.graph.edge_weight(u, v)
        if e in edges:
            if edges[e] != w:
                raise GraphError(f"edge weight conflict on {e}")
            continue
        edges[e] = w
    weighted = g1.graph.weighted or g2.graph.weighted
    graph = Graph(n, edges.keys(),
                  vweights if weighted else None,
                  edges if weighted else None)
    backward = {}
    for op, fwd in enumerate((fwd1, fwd2)):
        for v, x in fwd.items():
            backward.setdefault(x, []).append((op, v))
    return graph, HeirMap((fwd1, fwd2), backward)


def glue_oplus(g1, g2):
    """Identify equally-labelled boundary vertices; return (Graph, HeirMap)."""
    return _glue(g1, g2)


def glue_boxplus(g1, g2):
    """Like ``glue_oplus`` but every heir of a boundary vertex stays on the boundary."""
    graph, heirs = _glue(g1, g2)
    labels = {}
    for op, g in enumerate((g1, g2)):
        for v, lab in g.labels.items():
            labels[heirs.forward[op][v]] = lab
    return BoundariedGraph(graph, labels), heirs


def mask_triangleright(g1, g2):
    """Glue ``g1`` onto ``g2`` and let ``g1`` decide what survives of g2's boundary.

    Boundary vertices of ``g2`` whose label ``g1`` does not carry are removed,
    and so are edges of ``g2`` between two boundary vertices that are not
    edges of ``g1``.  The interior of ``g2`` is kept unchanged.
    """
    image = g1.label_image()
    lab2v1 = g1.vertex_of()
    drop_v = [v for v, lab in g2.labels.items() if lab not in image]
    drop_e = []
    for (u, v) in g2.graph.edges:
        lu, lv = g2.labels.get(u), g2.labels.get(v)
        if lu is None or lv is None:
            continue
        if lu in image and lv in image and not g1.graph.has_edge(lab2v1[lu], lab2v1[lv]):
            drop_e.append((u, v))
    return _glue(g1, g2, drop_v, drop_e)
