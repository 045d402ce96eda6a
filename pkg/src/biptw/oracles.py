"""Exhaustive reference implementations used to cross-check the solvers."""

from functools import lru_cache
from itertools import combinations, permutations

import numpy as np

from .dp import AnnotatedPartition, as_assignment
from .extint import NEG_INF, POS_INF
from .graph import Graph, cliques_naive, find_embeddings, induced_subgraph, is_bipartite
from .guard import check

# -- annotated optima ------------------------------------------------------


def _all_rows(free, p, fixed, n):
    """Every extension of ``fixed`` as a (p^|free|, n) array, lexicographic."""
    rows = p ** len(free)
    out = np.zeros((rows, n), dtype=np.int8)
    for v, part in fixed.items():
        out[:, v] = part
    # first free vertex is the most significant digit
    idx = np.arange(rows)
    for pos, v in enumerate(reversed(free)):
        out[:, v] = (idx // (p ** pos)) % p
    return out


def _scores(plugin, g, rows, weights):
    """Objective value of every row, using an independent vectorised evaluation."""
    name = plugin.name
    edges = g.sorted_edges()
    if name == "vc" or (name.startswith("kt-cover") and getattr(plugin, "t", 3) == 2):
        w = np.array(g.vertex_weight_list() if weights is None else weights, dtype=float)
        # np.where rather than a matrix product: 0 * inf would give nan
        score = np.where(rows == 1, w, 0.0).sum(axis=1)
        for u, v in edges:
            score[(rows[:, u] == 0) & (rows[:, v] == 0)] = np.inf
        return score
    if name.startswith("kt-cover"):
        score = (rows == 1).sum(axis=1).astype(float)
        for c in cliques_naive(g, plugin.t):
            score[np.all(rows[:, list(c)] == 0, axis=1)] = np.inf
        return score
    if name == "oct":
        score = (rows == 0).sum(axis=1).astype(float)
        for u, v in edges:
            score[(rows[:, u] == rows[:, v]) & (rows[:, u] != 0)] = np.inf
        return score
    if name == "maxcut":
        score = np.zeros(rows.shape[0])
        for u, v in edges:
            w = g.edge_weight(u, v) if weights is None else weights[(u, v)]
            score += w * (rows[:, u] != rows[:, v])
        return score
    return np.array([plugin.evaluate(g, {v: int(r[v]) for v in range(g.n)}, weights)
                     for r in rows], dtype=float)


def hat_p_bruteforce(plugin, g, annotation=None, weights=None, guard=2_000_000):
    """Exact annotated optimum by trying every completion of ``annotation``.

    Returns ``(value, witness)``; the witness is the lexicographically first
    optimal partition, or ``None`` when the value is infinite.
    """
    fixed = as_assignment(annotation) if annotation is not None else {}
    free = [v for v in range(g.n) if v not in fixed]
    check(plugin.p ** len(free), guard, "annotated brute force")
    rows = _all_rows(free, plugin.p, fixed, g.n)
    score = _scores(plugin, g, rows, weights)
    i = int(np.argmin(score) if plugin.opt == "min" else np.argmax(score))
    best = score[i]
    if np.isinf(best):
        return (POS_INF if best > 0 else NEG_INF), None
    witness = {v: int(rows[i, v]) for v in range(g.n)}
    return int(best), AnnotatedPartition.from_dict(witness, plugin.p)


def oct_bruteforce(g, guard=24):
    """A minimum odd cycle transversal, trying sets in increasing size."""
    check(g.n, guard, "oct brute force")
    for size in range(g.n + 1):
        for s in combinations(range(g.n), size):
            rest = [v for v in range(g.n) if v not in s]
            if is_bipartite(g, rest):
                return tuple(s)
    return tuple(range(g.n))


# -- odd-minors ------------------------------------------------------------


def _pair_index(k):
    return {(i, j): b for b, (i, j) in enumerate(combinations(range(k), 2))}


def _mask_of(edges, k):
    idx = _pair_index(k)
    m = 0
    for i, j in edges:
        m |= 1 << idx[(min(i, j), max(i, j))]
    return m


def _iso_masks(h):
    """Edge masks of every relabelling of ``h``."""
    out = set()
    for perm in permutations(range(h.n)):
        out.add(_mask_of([(perm[u], perm[v]) for u, v in h.edges], h.n))
    return out


def _connected_in(mask, adj):
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        bit = frontier & -frontier
        frontier ^= bit
        v = bit.bit_length() - 1
        new = adj[v] & mask & ~seen
        seen |= new
        frontier |= new
    return seen == mask


def _block_partitions(rest, k, cross_adj):
    """Partitions of bitmask ``rest`` into k blocks, each connected via cut edges."""
    if rest == 0:
        if k == 0:
            yield []
        return
    if k == 0:
        return
    low = rest & -rest
    others = rest ^ low
    sub = others
    while True:
        block = sub | low
        if _connected_in(block, cross_adj):
            for tail in _block_partitions(rest ^ block, k - 1, cross_adj):
                yield [block] + tail
        if sub == 0:
            break
        sub = (sub - 1) & others


@lru_cache(maxsize=4096)
def contraction_results(g, k):
    """Edge masks (on k labelled vertices) of every graph obtained from g by
    taking a subgraph and contracting all edges of one of its edge cuts."""
    check(g.n, 9, "odd-minor contraction search")
    n = g.n
    pidx = _pair_index(k)
    results = set()
    for umask in range(1, 1 << n):
        if bin(umask).count("1") < k:
            continue
        verts = [v for v in range(n) if umask >> v & 1]
        low = verts[0]
        rest_verts = verts[1:]
        for bits in range(1 << len(rest_verts)):
            side = {low: 0}
            for i, v in enumerate(rest_verts):
                side[v] = bits >> i & 1
            cross = [0] * n
            same = []
            for u, v in g.edges:
                if umask >> u & 1 and umask >> v & 1:
                    if side[u] != side[v]:
                        cross[u] |= 1 << v
                        cross[v] |= 1 << u
                    else:
                        same.append((u, v))
            for blocks in _block_partitions(umask, k, cross):
                where = {}
                for i, b in enumerate(blocks):
                    for v in verts:
                        if b >> v & 1:
                            where[v] = i
                q = 0
                for u, v in same:
                    a, b = where[u], where[v]
                    if a != b:
                        q |= 1 << pidx[(min(a, b), max(a, b))]
                results.add(q)
    return frozenset(results)


def is_odd_minor_contraction(h, g):
    """Odd-minor test straight from the contraction characterisation."""
    if h.n == 0:
        return True
    if h.n > g.n:
        return False
    targets = _iso_masks(h)
    for q in contraction_results(g.unweighted(), h.n):
        if any(t & ~q == 0 for t in targets):
            return True
    return False


def contract_edge_cut(g, kept_edges, side):
    """Contract every kept edge crossing ``side`` (dict vertex -> 0/1).

    Vertices missing from ``side`` are deleted; kept edges inside a side
    survive, loops and parallel copies are dropped.
    """
    kept = sorted(side)
    parent = {v: v for v in kept}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in kept_edges:
        if side[u] != side[v]:
            parent[find(u)] = find(v)
    roots = sorted({find(v) for v in kept}, key=lambda r: min(x for x in kept if find(x) == r))
    index = {r: i for i, r in enumerate(roots)}
    edges = set()
    for u, v in kept_edges:
        if side[u] == side[v]:
            a, b = index[find(u)], index[find(v)]
            if a != b:
                edges.add((min(a, b), max(a, b)))
    return Graph(len(roots), edges)


def _coloured_sets(g, root, allowed, root_colours, limit):
    """Connected sets containing ``root`` with a colouring in which the
    bichromatic edges connect the set; yielded in order of size."""
    seen = set()
    layer = []
    for c in root_colours:
        state = frozenset({(root, c)})
        seen.add(state)
        layer.append(state)
    size = 1
    while layer and size <= limit:
        for state in layer:
            yield state
        nxt = []
        for state in layer:
            inside = {v for v, _ in state}
            for v, c in state:
                for w in g.adj[v]:
                    if w in inside or w not in allowed:
                        continue
                    new = state | {(w, 1 - c)}
                    if new not in seen:
                        seen.add(new)
                        nxt.append(new)
        layer = nxt
        size += 1


def find_odd_expansion(h, g):
    """Search for an odd h-expansion in g.

    Returns ``(branch_sets, colouring)`` or ``None``.  Each branch set is
    connected through edges whose ends get different colours, and every
    edge of h is realised by an edge of g whose ends get the same colour.
    """
    if h.n == 0:
        return [], {}
    if h.n > g.n:
        return None
    order = []
    for s in sorted(range(h.n), key=lambda v: -h.degree(v)):
        if s in order:
            continue
        stack = [s]
        while stack:
            x = stack.pop(0)
            if x in order:
                continue
            order.append(x)
            stack.extend(sorted(h.adj[x], key=lambda v: -h.degree(v)))
    sets = {}
    colour = {}

    def rec(i, used):
        if i == len(order):
            return True
        x = order[i]
        earlier = [y for y in h.adj[x] if y in sets]
        allowed = {v for v in range(g.n) if v not in used}
        limit = len(allowed) - (len(order) - i - 1)
        if earlier:
            anchor = sets[earlier[0]]
            roots = sorted({w for v in anchor for w in g.adj[v] if w in allowed})
            root_colours = (0, 1)
        else:
            roots = sorted(allowed)
            root_colours = (0,)
        tried = set()
        for r in roots:
            for state in _coloured_sets(g, r, allowed, root_colours, limit):
                if state in tried:
                    continue
                tried.add(state)
                col = dict(state)
                ok = True
                for y in earlier:
                    if not any(colour[w] == c for v, c in col.items() for w in g.adj[v]
                               if w in sets[y]):
                        ok = False
                        break
                if not ok:
                    continue
                sets[x] = set(col)
                colour.update(col)
                if rec(i + 1, used | set(col)):
                    return True
                del sets[x]
                for v in col:
                    del colour[v]
        return False

    if rec(0, frozenset()):
        return [sorted(sets[x]) for x in range(h.n)], dict(colour)
    return None


def is_odd_minor_expansion(h, g):
    """Odd-minor test through the 2-coloured expansion characterisation."""
    return find_odd_expansion(h, g.unweighted()) is not None


def is_odd_minor(h, g):
    return is_odd_minor_expansion(h, g)


# -- packings ----------------------------------------------------------------

MODES = ("subgraph", "induced", "scattered", "odd-minor")


def copy_vertex_sets(g, h, mode):
    """Vertex sets that can host one copy of ``h`` under ``mode``."""
    if mode == "odd-minor":
        check(g.n, 12, "odd-minor packing brute force")
        found = []
        for size in range(h.n, g.n + 1):
            for s in combinations(range(g.n), size):
                if any(set(f) <= set(s) for f in found):
                    continue
                sub, _ = induced_subgraph(g.unweighted(), s)
                if is_odd_minor_expansion(h, sub):
                    found.append(s)
        return found
    induced = mode == "induced"
    sets = {tuple(sorted(phi)) for phi in find_embeddings(h, g.unweighted(), induced=induced)}
    return sorted(sets)


def max_packing_bruteforce(g, h, mode="subgraph", guard=40):
    """Maximum number of disjoint copies (non-adjacent ones for scattered)."""
    if mode not in MODES:
        raise ValueError(f"unknown packing mode {mode!r}")
    check(g.n, guard, "packing brute force")
    cands = [frozenset(s) for s in copy_vertex_sets(g, h, mode)]
    closed = []
    for s in cands:
        nb = set()
        for v in s:
            nb |= g.adj[v]
        closed.append(s | nb if mode == "scattered" else s)
    best = []

    def rec(i, used, chosen):
        nonlocal best
        if len(chosen) + (len(cands) - i) <= len(best):
            return
        if i == len(cands):
            best = list(chosen)
            return
        if not (cands[i] & used) and (mode != "scattered" or not (closed[i] & used)):
            chosen.append(cands[i])
            rec(i + 1, used | cands[i], chosen)
            chosen.pop()
        rec(i + 1, used, chosen)

    rec(0, frozenset(), [])
    return len(best), [tuple(sorted(s)) for s in best]
