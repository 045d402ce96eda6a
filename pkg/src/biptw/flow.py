"""Integral max-flow / min-cut (Dinic) and the two cut-based subroutines
used by the problem plugins: weighted bipartite vertex cover and
minimum-weight vertex cuts.

Weights may be ``POS_INF``.  Infinite capacities are replaced by a finite
sentinel equal to one plus the sum of all finite weights involved, so any
cut of value at least the sentinel is reported as infinite.
"""

from collections import deque

from .extint import POS_INF, is_finite
from .graph import GraphError, bipartition


class FlowNetwork:
    def __init__(self, node_count, source, sink):
        if source == sink:
            raise ValueError("source and sink must differ")
        if not (0 <= source < node_count and 0 <= sink < node_count):
            raise ValueError("terminal out of range")
        self.node_count = node_count
        self.source = source
        self.sink = sink
        # arcs stored as parallel lists; arc i and i ^ 1 are residual twins
        self.head = []
        self.cap = []
        self.orig = []
        self.out = [[] for _ in range(node_count)]

    def add_arc(self, u, v, capacity):
        if capacity < 0:
            raise ValueError("capacities must be nonnegative")
        self.out[u].append(len(self.head))
        self.head.append(v)
        self.cap.append(capacity)
        self.orig.append(capacity)
        self.out[v].append(len(self.head))
        self.head.append(u)
        self.cap.append(0)
        self.orig.append(0)
        return len(self.head) - 2

    def arcs(self):
        for i in range(0, len(self.head), 2):
            yield self.head[i + 1], self.head[i], self.orig[i]


def max_flow(net):
    """Return ``(value, cut_arcs, source_side)`` for a minimum s-t cut."""
    cap = net.cap
    head = net.head
    out = net.out
    s, t = net.source, net.sink
    n = net.node_count
    value = 0
    while True:
        level = [-1] * n
        level[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in out[u]:
                if cap[a] > 0 and level[head[a]] < 0:
                    level[head[a]] = level[u] + 1
                    queue.append(head[a])
        if level[t] < 0:
            break
        it = [0] * n

        def push(u, limit):
            if u == t:
                return limit
            arcs = out[u]
            while it[u] < len(arcs):
                a = arcs[it[u]]
                v = head[a]
                if cap[a] > 0 and level[v] == level[u] + 1:
                    got = push(v, min(limit, cap[a]))
                    if got:
                        cap[a] -= got
                        cap[a ^ 1] += got
                        return got
                it[u] += 1
            return 0

        while True:
            f = push(s, float("inf"))
            if not f:
                break
            value += f
    side = [False] * n
    side[s] = True
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for a in out[u]:
            if cap[a] > 0 and not side[head[a]]:
                side[head[a]] = True
                queue.append(head[a])
    source_side = frozenset(i for i in range(n) if side[i])
    cut = [(head[a ^ 1], head[a], net.orig[a]) for a in range(0, len(head), 2)
           if side[head[a ^ 1]] and not side[head[a]]]
    return value, cut, source_side


def _sentinel(weights):
    return 1 + sum(w for w in weights if is_finite(w))


def bipartite_min_vertex_cover(g, weights=None):
    """Minimum-weight vertex cover of a bipartite graph.

    Returns ``(cover, weight)``; weight is ``POS_INF`` if every cover uses an
    infinite-weight vertex.
    """
    parts = bipartition(g)
    if parts is None:
        raise GraphError("graph is not bipartite")
    a_side, b_side = parts
    w = g.vertex_weight_list() if weights is None else list(weights)
    big = _sentinel(w)
    cap = [big if not is_finite(x) else x for x in w]
    s, t = g.n, g.n + 1
    net = FlowNetwork(g.n + 2, s, t)
    for v in a_side:
        net.add_arc(s, v, cap[v])
    for v in b_side:
        net.add_arc(v, t, cap[v])
    bset = set(b_side)
    for u, v in g.sorted_edges():
        if u in bset:
            u, v = v, u
        net.add_arc(u, v, big)
    value, _, side = max_flow(net)
    if value >= big:
        return None, POS_INF
    cover = sorted([v for v in a_side if v not in side] + [v for v in b_side if v in side])
    return tuple(cover), sum(w[v] for v in cover)


def min_vertex_cut(g, side_a, side_b, weights=None):
    """Cheapest set of non-terminal vertices separating ``side_a`` from ``side_b``.

    Returns ``(cut, weight)``; weight ``POS_INF`` when no finite cut exists.
    Raises ``GraphError`` when a terminal of one side touches the other side.
    """
    a_set, b_set = set(side_a), set(side_b)
    if a_set & b_set:
        raise GraphError("terminal sides overlap")
    for u in a_set:
        if g.adj[u] & b_set:
            raise GraphError(f"terminal {u} is adjacent to the other side")
    w = g.vertex_weight_list() if weights is None else list(weights)
    inner = [v for v in range(g.n) if v not in a_set and v not in b_set]
    big = _sentinel([w[v] for v in inner])
    # v_in = 2v, v_out = 2v + 1, super terminals at the end
    s, t = 2 * g.n, 2 * g.n + 1
    net = FlowNetwork(2 * g.n + 2, s, t)
    for v in range(g.n):
        if v in a_set or v in b_set:
            net.add_arc(2 * v, 2 * v + 1, big)
        else:
            net.add_arc(2 * v, 2 * v + 1, w[v] if is_finite(w[v]) else big)
    for v in sorted(a_set):
        net.add_arc(s, 2 * v, big)
    for v in sorted(b_set):
        net.add_arc(2 * v + 1, t, big)
    for u, v in g.sorted_edges():
        net.add_arc(2 * u + 1, 2 * v, big)
        net.add_arc(2 * v + 1, 2 * u, big)
    value, _, side = max_flow(net)
    if value >= big:
        return None, POS_INF
    cut = tuple(v for v in inner if 2 * v in side and 2 * v + 1 not in side)
    return cut, sum(w[v] for v in cut)
