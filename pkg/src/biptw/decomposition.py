"""Rooted 1-H-tree decompositions ("bipartite tree decompositions").

Every node t carries an apex set alpha(t) and a free set beta(t); the bag is
their union.  The free part of each bag must induce a graph of the class H
(bipartite unless another membership predicate is supplied), and a bag meets
the free set of each neighbouring bag in at most one vertex.
"""

from dataclasses import dataclass

from .graph import (Graph, GraphError, bipartition, connected_components, induced_subgraph,
                    is_bipartite)


class DecompositionError(ValueError):
    pass


class RootedDecomposition:
    __slots__ = ("parent", "root", "alpha", "beta", "_children")

    def __init__(self, parent, root, alpha, beta):
        parent = list(parent)
        k = len(parent)
        if len(alpha) != k or len(beta) != k:
            raise DecompositionError("alpha/beta must list every node")
        if k == 0:
            raise DecompositionError("a decomposition needs at least one node")
        if not 0 <= root < k or parent[root] != root:
            raise DecompositionError("root must be a node and its own parent")
        for t, p in enumerate(parent):
            if not 0 <= p < k:
                raise DecompositionError(f"node {t} has parent {p} out of range")
        self.parent = tuple(parent)
        self.root = root
        self.alpha = tuple(tuple(sorted(set(a))) for a in alpha)
        self.beta = tuple(tuple(sorted(set(b))) for b in beta)
        self._children = None
        self._check_tree()

    def _check_tree(self):
        for t in range(len(self.parent)):
            seen = set()
            u = t
            while u != self.root:
                if u in seen:
                    raise DecompositionError(f"parent pointers of node {t} form a cycle")
                seen.add(u)
                u = self.parent[u]

    @property
    def node_count(self):
        return len(self.parent)

    def nodes(self):
        return range(len(self.parent))

    def bag(self, t):
        return set(self.alpha[t]) | set(self.beta[t])

    def children(self, t):
        if self._children is None:
            ch = [[] for _ in self.parent]
            for u, p in enumerate(self.parent):
                if u != self.root:
                    ch[p].append(u)
            self._children = tuple(tuple(c) for c in ch)
        return self._children[t]

    def adhesion(self, t):
        if t == self.root:
            return ()
        return tuple(sorted(self.bag(t) & self.bag(self.parent[t])))

    def tree_edges(self):
        return [(t, self.parent[t]) for t in self.nodes() if t != self.root]

    def postorder(self):
        order = []
        stack = [(self.root, False)]
        while stack:
            t, done = stack.pop()
            if done:
                order.append(t)
                continue
            stack.append((t, True))
            for c in reversed(self.children(t)):
                stack.append((c, False))
        return order

    def preorder(self):
        order = []
        stack = [self.root]
        while stack:
            t = stack.pop()
            order.append(t)
            stack.extend(reversed(self.children(t)))
        return order

    def width(self):
        return max(len(a) for a in self.alpha)

    def to_json(self):
        return {
            "root": self.root,
            "nodes": [{"id": t, "parent": self.parent[t], "alpha": list(self.alpha[t]),
                       "beta": list(self.beta[t])} for t in self.nodes()],
        }

    @classmethod
    def from_json(cls, obj):
        nodes = sorted(obj["nodes"], key=lambda x: x["id"])
        if [x["id"] for x in nodes] != list(range(len(nodes))):
            raise DecompositionError("node ids must be dense from 0")
        return cls([x["parent"] for x in nodes], obj["root"],
                   [x["alpha"] for x in nodes], [x["beta"] for x in nodes])

    def __eq__(self, other):
        return (isinstance(other, RootedDecomposition) and self.parent == other.parent
                and self.root == other.root and self.alpha == other.alpha
                and self.beta == other.beta)

    def __repr__(self):
        return f"RootedDecomposition(nodes={self.node_count}, width={self.width()})"


def width(d):
    return d.width()


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple

    def __str__(self):
        return f"{self.axiom}: {self.witness}"


def bipartite_membership(g):
    return is_bipartite(g)


def validate(g, d, membership=bipartite_membership):
    """List every violated axiom; an empty list means ``d`` is valid for ``g``."""
    report = []
    for t in d.nodes():
        for v in d.alpha[t] + d.beta[t]:
            if not 0 <= v < g.n:
                report.append(Violation("vertex-range", (t, v)))
        both = set(d.alpha[t]) & set(d.beta[t])
        if both:
            report.append(Violation("alpha-beta-disjoint", (t, tuple(sorted(both)))))
    if report:
        return report
    bags = [d.bag(t) for t in d.nodes()]
    for v in range(g.n):
        holders = [t for t in d.nodes() if v in bags[t]]
        if not holders:
            report.append(Violation("vertex-coverage", (v,)))
            continue
        tops = [t for t in holders if t == d.root or v not in bags[d.parent[t]]]
        if len(tops) > 1:
            report.append(Violation("connectivity", (v, tuple(tops))))
    for u, v in g.sorted_edges():
        if not any(u in b and v in b for b in bags):
            report.append(Violation("edge-coverage", (u, v)))
    for t in d.nodes():
        sub, _ = induced_subgraph(g, d.beta[t])
        if not membership(sub):
            report.append(Violation("beta-membership", (t,)))
    for t, p in d.tree_edges():
        if len(bags[t] & set(d.beta[p])) > 1:
            report.append(Violation("beta-intersection", (t, p)))
        if len(bags[p] & set(d.beta[t])) > 1:
            report.append(Violation("beta-intersection", (p, t)))
    return report


def is_valid(g, d, membership=bipartite_membership):
    return not validate(g, d, membership)


@dataclass(frozen=True)
class NodeContext:
    node: int
    bag: tuple
    delta: tuple
    children: tuple
    child_deltas: tuple
    A: tuple
    B: tuple
    X: tuple


def node_context(d, t):
    delta = d.adhesion(t)
    A = set(d.alpha[t]) | set(delta)
    child_deltas = tuple(d.adhesion(c) for c in d.children(t))
    B = set()
    beta = set(d.beta[t])
    for cd in child_deltas:
        B |= (set(cd) & beta) - A
    X = A | B
    return NodeContext(t, tuple(sorted(d.bag(t))), delta, d.children(t), child_deltas,
                       tuple(sorted(A)), tuple(sorted(B)), tuple(sorted(X)))


def normalize(g, d, membership=bipartite_membership):
    """Contract tree edges whose bags are nested until no bag is inside a neighbour's."""
    if validate(g, d, membership):
        raise DecompositionError("cannot normalize an invalid decomposition")
    parent = list(d.parent)
    alpha = [set(a) for a in d.alpha]
    beta = [set(b) for b in d.beta]
    alive = set(d.nodes())
    root = d.root
    changed = True
    while changed:
        changed = False
        for t in sorted(alive):
            if t == root:
                continue
            p = parent[t]
            bt, bp = alpha[t] | beta[t], alpha[p] | beta[p]
            if not (bt <= bp or bp <= bt):
                continue
            keep_child_sets = len(bt) > len(bp)
            if keep_child_sets:
                alpha[p], beta[p] = alpha[t], beta[t]
            for u in alive:
                if u != t and parent[u] == t:
                    parent[u] = p
            alive.discard(t)
            changed = True
            break
    order = sorted(alive)
    index = {t: i for i, t in enumerate(order)}
    return RootedDecomposition([index[parent[t]] for t in order], index[root],
                               [alpha[t] for t in order], [beta[t] for t in order])


def from_oct(g, oct_set):
    oct_set = set(oct_set)
    rest = [v for v in range(g.n) if v not in oct_set]
    if not is_bipartite(g, rest):
        raise DecompositionError("graph minus the given set is not bipartite")
    return RootedDecomposition([0], 0, [sorted(oct_set)], [rest])


def from_tree_decomposition(g, bags, tree_edges, root=0):
    """All-apex decomposition from an ordinary tree decomposition."""
    k = len(bags)
    nbrs = [[] for _ in range(k)]
    for a, b in tree_edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    if len(tree_edges) != k - 1:
        raise DecompositionError("tree must have exactly k-1 edges")
    parent = [None] * k
    parent[root] = root
    stack = [root]
    while stack:
        u = stack.pop()
        for w in nbrs[u]:
            if parent[w] is None:
                parent[w] = u
                stack.append(w)
    if any(p is None for p in parent):
        raise DecompositionError("tree edges do not connect all bags")
    d = RootedDecomposition(parent, root, [sorted(b) for b in bags], [[] for _ in bags])
    bad = [v for v in validate(g, d) if v.axiom != "beta-membership"]
    if bad:
        raise DecompositionError(f"invalid tree decomposition: {bad[0]}")
    return d


def push_odd_minor(g, d, kept_subgraph, cut_sides):
    """Contract an edge cut of a subgraph and carry the decomposition along.

    ``kept_subgraph`` lives on the vertex indices of ``g``; its vertex set is
    ``cut_sides[0] | cut_sides[1]``.  Every kept edge crossing the two sides
    is contracted.  A contracted vertex goes to alpha(t) whenever one of its
    pre-images was an apex of t, otherwise to beta(t).  Returns ``(h, d_h)``
    where the vertices of ``h`` are the contracted classes ordered by their
    smallest pre-image.
    """
    side1, side2 = set(cut_sides[0]), set(cut_sides[1])
    if side1 & side2:
        raise GraphError("cut sides overlap")
    kept = side1 | side2
    if kept_subgraph.n != g.n:
        raise GraphError("kept subgraph must use the vertex indices of g")
    for u, v in kept_subgraph.edges:
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of g")
        if u not in kept or v not in kept:
            raise GraphError(f"edge ({u}, {v}) leaves the kept vertex set")
    cut = [(u, v) for u, v in kept_subgraph.edges if (u in side1) != (v in side1)]
    cut_graph = Graph(g.n, cut)
    classes = connected_components(cut_graph, kept)
    cls_of = {}
    for i, c in enumerate(classes):
        for v in c:
            cls_of[v] = i
    edges = set()
    for u, v in kept_subgraph.edges:
        a, b = cls_of[u], cls_of[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    h = Graph(len(classes), edges)
    alpha, beta = [], []
    for t in d.nodes():
        a_t, b_t = set(), set()
        for i, c in enumerate(classes):
            if any(v in d.alpha[t] for v in c):
                a_t.add(i)
            elif any(v in d.beta[t] for v in c):
                b_t.add(i)
        alpha.append(a_t)
        beta.append(b_t)
    return h, RootedDecomposition(d.parent, d.root, alpha, beta)


def coloring_from_decomposition(g, d):
    """Proper colouring with at most width+2 colours, built root-first.

    Each node extends the colouring of the nodes above it: new apex vertices
    get private colours unused on the adhesion, then the free part is
    2-coloured.  If the adhesion holds a free vertex v whose colour is not
    shared with another adhesion vertex, v's side of the free part reuses
    v's colour; otherwise two unused colours are taken.
    """
    if validate(g, d):
        raise DecompositionError("invalid decomposition")
    k = d.width()
    palette = range(k + 2)
    color = {}
    for t in d.preorder():
        delta = set(d.adhesion(t))
        used = {color[v] for v in delta}
        fresh = [c for c in palette if c not in used]
        for v in d.alpha[t]:
            if v not in delta:
                color[v] = fresh.pop(0)
        free = [v for v in d.beta[t] if v not in delta]
        shared = [v for v in d.beta[t] if v in delta]
        if not free:
            continue
        sub, index = induced_subgraph(g, d.beta[t])
        parts = _bipartition_with(sub, index[shared[0]] if shared else None)
        back = {i: v for v, i in index.items()}
        side_a = [back[i] for i in parts[0]]
        side_b = [back[i] for i in parts[1]]
        if shared and len(used) == len(delta):
            ca = color[shared[0]]
            cb = fresh.pop(0)
        else:
            ca, cb = fresh[0], fresh[1]
        for v in side_a:
            if v not in delta:
                color[v] = ca
        for v in side_b:
            color[v] = cb
    return [color[v] for v in range(g.n)]


def _bipartition_with(g, anchor):
    """Bipartition where ``anchor`` (if given) lies on the first side."""
    a, b = bipartition(g)
    if anchor is not None and anchor in b:
        comp = next(set(c) for c in connected_components(g) if anchor in c)
        a2 = [v for v in a if v not in comp] + [v for v in b if v in comp]
        b2 = [v for v in b if v not in comp] + [v for v in a if v in comp]
        return sorted(a2), sorted(b2)
    return a, b


def is_proper_coloring(g, colors):
    return all(colors[u] != colors[v] for u, v in g.edges)
