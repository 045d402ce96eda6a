"""Instance builders and brute-force harnesses shared by the test modules."""

import random
from itertools import product

from biptw.boundaried import BoundariedGraph, glue_oplus
from biptw.decomposition import RootedDecomposition, node_context
from biptw.dp import ChildRecord, bag_boundaried, reduced_instance
from biptw.extint import ext_add
from biptw.generators import attach_pendant_copies, random_decomposed
from biptw.graph import Graph, induced_subgraph, is_bipartite
from biptw.oracles import hat_p_bruteforce
from biptw.problems import make_plugin

PROBLEMS = ("vc", "kt-cover", "oct", "maxcut")


def plugin_for(name, rng=None):
    if name == "kt-cover":
        t = 3 if rng is None else rng.choice([2, 3, 3, 4])
        return make_plugin(name, t)
    return make_plugin(name)


def random_weights(plugin, g, rng, top=6):
    if plugin.weight_kind == "vertex" and plugin.name == "vc":
        return [rng.randint(0, top) for _ in range(g.n)]
    if plugin.weight_kind == "edge":
        return {e: rng.randint(0, top) for e in g.edges}
    return None


def dp_instances(seed, count, n_max=12, width=4):
    """Random (graph, decomposition) pairs with 4 <= n <= n_max."""
    rng = random.Random(seed)
    for _ in range(count):
        yield random_decomposed(rng, n_max=rng.randint(4, n_max), width=rng.randint(0, width))


def packing_instances(seed, count, patterns):
    """Random instances of width <= 2 and at most 12 vertices, some with pendant copies."""
    rng = random.Random(seed)
    for _ in range(count):
        h = rng.choice(patterns)
        pendants = rng.randint(0, 2 if h.n == 3 else 1)
        base_max = 12 - pendants * (h.n - 1)
        g, d = random_decomposed(rng, n_max=rng.randint(3, base_max), width=rng.randint(0, 2),
                                 edge_p=rng.choice([0.6, 0.8, 0.95]))
        g, d = attach_pendant_copies(g, d, h, [rng.randrange(g.n) for _ in range(pendants)])
        yield g, d, h


def random_bipartite_free(rng, n, apex, p=0.5):
    """Random graph on n vertices whose vertices outside ``apex`` induce a bipartite graph."""
    side = {v: rng.randrange(2) for v in range(n)}
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u not in apex and v not in apex and side[u] == side[v]:
                continue
            if rng.random() < p:
                edges.append((u, v))
    return Graph(n, edges)


# -- boundaried pairs -------------------------------------------------------------


def random_pair(rng, boundary_max=4, side_max=8, p=0.5):
    """Two boundaried graphs sharing labels 0..b-1 on an identical boundary graph."""
    b = rng.randint(1, boundary_max)
    bd_edges = [(u, v) for u in range(b) for v in range(u + 1, b) if rng.random() < p]

    def one():
        n = rng.randint(b, side_max)
        edges = set(bd_edges)
        for u in range(n):
            for v in range(max(u + 1, b), n):
                if rng.random() < p:
                    edges.add((u, v))
        return BoundariedGraph(Graph(n, edges), {i: i for i in range(b)})

    return one(), one(), b


def glue_with_maps(f, g):
    """``f ⊕ g`` plus, for each operand, the map to glued vertices."""
    glued, heirs = glue_oplus(f, g)
    return glued, heirs.forward[0], heirs.forward[1]


def p3_cover_value(g, fixed):
    """Fewest deletions leaving no path on three vertices, with ``fixed`` pinned
    (0 keep, 1 delete).  Exhaustive."""
    free = [v for v in range(g.n) if v not in fixed]
    best = None
    for bits in product((0, 1), repeat=len(free)):
        a = dict(fixed)
        a.update(zip(free, bits))
        kept = [v for v in range(g.n) if a[v] == 0]
        sub, _ = induced_subgraph(g, kept)
        if any(sub.degree(v) >= 2 for v in range(sub.n)):
            continue
        cost = sum(a.values())
        if best is None or cost < best:
            best = cost
    return best


# -- reduction harness ---------------------------------------------------------


def reduction_case(rng, plugin, side_max=8, boundary_max=4, groups=1):
    """Build a parent bag F and ``groups`` children, most hanging from one free vertex v.

    Returns ``(host, ctx, assignment, child_records, weights)``.  Each child is
    a random graph glued on an adhesion made of some annotated vertices of F
    and, usually, v.  Child tables are filled by exhaustive search.
    """
    nf = rng.randint(2, side_max)
    v = nf - 1
    annotated = [x for x in range(nf - 1) if rng.random() < 0.7] or [0]
    free = [x for x in range(nf) if x not in annotated]
    f_graph = random_bipartite_free(rng, nf, set(annotated))
    edges = set(f_graph.edges)
    n = nf
    child_sets = []
    for _ in range(groups):
        k = rng.randint(0, min(boundary_max - 1, len(annotated)))
        shared = sorted(rng.sample(annotated, k))
        if not shared or rng.random() < 0.8:
            shared.append(v)  # otherwise the child is fully annotated
        extra = rng.randint(1, max(1, side_max - len(shared) - (n - nf)))
        inner = list(range(n, n + extra))
        n += extra
        verts = shared + inner
        for i, a in enumerate(verts):
            for b in verts[i + 1:]:
                if a in shared and b in shared:
                    continue
                if rng.random() < 0.5:
                    edges.add((min(a, b), max(a, b)))
        child_sets.append((shared, verts))
    host = Graph(n, edges)
    alpha = [annotated] + [[] for _ in child_sets]
    beta = [free] + [sorted(vs) for _, vs in child_sets]
    d = RootedDecomposition([0] * (1 + len(child_sets)), 0, alpha, beta)
    ctx = node_context(d, 0)
    weights = random_weights(plugin, host, rng)
    if weights is None:
        weights = plugin.default_weights(host)
    assignment = {x: rng.randrange(plugin.p) for x in ctx.A}
    records = []
    for shared, verts in child_sets:
        sub, index = induced_subgraph(host, verts)
        sub_w = _restrict_weights(plugin, weights, index)
        table = {}
        for key in product(range(plugin.p), repeat=len(shared)):
            fixed = {index[x]: part for x, part in zip(shared, key)}
            table[key] = hat_p_bruteforce(plugin, sub, fixed, weights=sub_w)[0]
        records.append(ChildRecord(tuple(shared), table))
    return host, ctx, assignment, records, weights


def _restrict_weights(plugin, weights, index):
    if weights is None:
        return None
    if isinstance(weights, dict):
        out = {}
        for (a, b), w in weights.items():
            if a in index and b in index:
                x, y = index[a], index[b]
                out[(min(x, y), max(x, y))] = w
        return out
    back = sorted(index, key=index.get)
    return [weights[x] for x in back]


def reduction_sides(plugin, host, ctx, assignment, records, weights):
    """Exhaustive optimum of the host versus the reduced instance plus offset."""
    direct = hat_p_bruteforce(plugin, host, assignment, weights=weights)[0]
    red = plugin.nice_reduce(host, ctx, assignment, records, weights)
    bag_bg, bag_back = bag_boundaried(host, ctx)
    glued, annotation, w, _ = reduced_instance(host, plugin, ctx, bag_bg, bag_back, red, weights,
                                               debug=True)
    reduced = hat_p_bruteforce(plugin, glued, annotation, weights=w)[0]
    return direct, ext_add(reduced, red.offset)


def is_free_bipartite(g, annotated):
    return is_bipartite(g, [v for v in range(g.n) if v not in annotated])


def branches(plugin, host, ctx, assignment, records, weights):
    """Which case of the gadget each grouped vertex falls into."""
    _, groups = plugin.fold_children(host, ctx, assignment, records, weights)
    out = []
    for v, group in groups.items():
        if plugin.name == "oct":
            cs = ext_add(1, plugin.group_excess(host, group, assignment, v, 0, weights))
            c1 = plugin.group_excess(host, group, assignment, v, 1, weights)
            c2 = plugin.group_excess(host, group, assignment, v, 2, weights)
            if cs <= c1 and cs <= c2:
                out.append("delete")
            elif c1 == c2:
                out.append("free")
            else:
                out.append("pin-x2" if c1 < c2 else "pin-x1")
        elif plugin.name.startswith("kt-cover"):
            plus = ext_add(1, plugin.group_excess(host, group, assignment, v, 1, weights))
            minus = plugin.group_excess(host, group, assignment, v, 0, weights)
            out.append("take" if plus <= minus else "leave")
    return out


def base_instance(rng, plugin, n_max=12, n_min=2):
    """Random annotated instance whose unannotated part is bipartite.

    Returns ``(g, annotation, weights)``.
    """
    n = rng.randint(n_min, n_max)
    annotated = set(rng.sample(range(n), rng.randint(0, min(n, 6))))
    g = random_bipartite_free(rng, n, annotated, p=rng.choice([0.3, 0.5, 0.7]))
    annotation = {v: rng.randrange(plugin.p) for v in annotated}
    return g, annotation, random_weights(plugin, g, rng)


# -- gluing identity -------------------------------------------------------------


def weigh_pair(plugin, f, g, rng):
    """Random weights for both operands that agree on the shared boundary."""
    if plugin.weight_kind == "vertex" and plugin.name == "vc":
        by_label = {}
        out = []
        for side in (f, g):
            w = [rng.randint(0, 5) for _ in range(side.graph.n)]
            for v, lab in side.labels.items():
                w[v] = by_label.setdefault(lab, w[v])
            out.append(w)
        return out
    if plugin.weight_kind == "edge":
        by_pair = {}
        out = []
        for side in (f, g):
            w = {}
            for a, b in side.graph.edges:
                w[(a, b)] = rng.randint(0, 5)
                if a in side.labels and b in side.labels:
                    key = frozenset((side.labels[a], side.labels[b]))
                    w[(a, b)] = by_pair.setdefault(key, w[(a, b)])
            out.append(w)
        return out
    return [None, None]


def boundary_correction(plugin, f, f_weights, assignment):
    """What both operands count on the shared boundary under ``assignment`` (label -> part)."""
    part = {v: assignment[lab] for v, lab in f.labels.items()}
    if plugin.name == "vc":
        return sum(f_weights[v] for v, p in part.items() if p == 1)
    if plugin.name.startswith("kt-cover"):
        return sum(1 for p in part.values() if p == 1)
    if plugin.name == "oct":
        return sum(1 for p in part.values() if p == 0)
    return sum(f_weights[(a, b)] for a, b in f.graph.edges
               if a in part and b in part and part[a] != part[b])


GLUE_GUARD = 5_000_000  # 3^14: two 8-vertex sides sharing one vertex


def glue_sides(plugin, f, g, weights, assignment):
    """Both sides of the gluing identity for one boundary annotation."""
    glued, to_glued_f, to_glued_g = glue_with_maps(f, g)
    wf, wg = weights
    w = None
    if isinstance(wf, list):
        w = [0] * glued.n
        for side, ws, fwd in ((f, wf, to_glued_f), (g, wg, to_glued_g)):
            for v in range(side.graph.n):
                w[fwd[v]] = ws[v]
    elif isinstance(wf, dict):
        w = {}
        for ws, fwd in ((wf, to_glued_f), (wg, to_glued_g)):
            for (a, b), x in ws.items():
                u, v = fwd[a], fwd[b]
                w[(min(u, v), max(u, v))] = x
    ann_f = {v: assignment[lab] for v, lab in f.labels.items()}
    ann_g = {v: assignment[lab] for v, lab in g.labels.items()}
    ann = {to_glued_f[v]: p for v, p in ann_f.items()}
    lhs = hat_p_bruteforce(plugin, glued, ann, w, guard=GLUE_GUARD)[0]
    parts = ext_add(hat_p_bruteforce(plugin, f.graph, ann_f, wf)[0],
                    hat_p_bruteforce(plugin, g.graph, ann_g, wg)[0])
    return lhs, ext_add(parts, -boundary_correction(plugin, f, wf, assignment))


def glue_suite(seed, pairs, problems=PROBLEMS, side_max=8, boundary_max=4):
    """Check the identity on random pairs; returns (checked, failures, infinite)."""
    rng = random.Random(seed)
    checked = failures = infinite = 0
    for _ in range(pairs):
        f, g, b = random_pair(rng, boundary_max=boundary_max, side_max=side_max)
        for name in problems:
            plugin = plugin_for(name, rng)
            weights = weigh_pair(plugin, f, g, rng)
            for key in product(range(plugin.p), repeat=b):
                lhs, rhs = glue_sides(plugin, f, g, weights, dict(enumerate(key)))
                checked += 1
                infinite += lhs in (float("inf"), float("-inf"))
                failures += lhs != rhs
    return checked, failures, infinite


def p3_split():
    """The path u - mid - v cut at its middle vertex, mid kept."""
    f = BoundariedGraph(Graph(2, [(0, 1)]), {0: 0})
    g = BoundariedGraph(Graph(2, [(0, 1)]), {0: 0})
    glued, _, _ = glue_with_maps(f, g)
    whole = p3_cover_value(glued, {0: 0})
    parts = p3_cover_value(f.graph, {0: 0}) + p3_cover_value(g.graph, {0: 0})
    return whole, parts


def gadget_suite(seed, name, cases, side_max):
    """Check a nice reduction against exhaustive search on random cases.

    Returns ``(checked, failures, branch_counts)``.
    """
    from collections import Counter
    rng = random.Random(seed)
    counts = Counter()
    failures = 0
    for _ in range(cases):
        plugin = make_plugin(name, rng.choice([3, 4]))
        case = reduction_case(rng, plugin, side_max=side_max, groups=rng.choice([1, 1, 2]))
        counts.update(branches(plugin, *case))
        direct, reduced = reduction_sides(plugin, *case)
        failures += direct != reduced
    return cases, failures, counts
