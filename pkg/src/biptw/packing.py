"""Packing disjoint copies of a 2-connected non-bipartite pattern H.

Three flavours are supported: plain subgraph copies, induced copies, and
scattered copies (no host edge between two different copies).

The dynamic program runs top-down with memoisation.  For a node t, a table
key describes the copies that reach below t through the adhesion delta_t:

* a tuple of *pieces*, one per copy; a piece fixes which pattern vertices
  sit on delta_t (and where) and which ones lie strictly below t;
* in scattered mode, the set of adhesion vertices occupied by copies that
  do not reach below t.

The value of a key is the largest number of copies whose topmost bag is t or
a descendant of t.  At a node, every copy through the key is placed, plus
every new copy meeting the apex set of the bag.  A new copy avoiding the apex
set meets the bag in a single free vertex v and otherwise lives below one
child holding v; those are settled per child by comparing the child's value
with and without v ("s-plus / s-minus"), and in scattered mode through a
small weighted independent set on the bipartite free part.  Passing
``prune=False`` switches that shortcut off and enumerates all such copies at
the node instead.
"""

from dataclasses import dataclass
from itertools import product
from math import inf

from .decomposition import DecompositionError, validate
from .flow import bipartite_min_vertex_cover
from .graph import (Graph, find_embeddings, induced_subgraph, is_biconnected, is_bipartite)
from .guard import check

MODES = ("subgraph", "induced", "scattered")


class PatternError(ValueError):
    pass


# -- partial copies -----------------------------------------------------------


def automorphisms(h):
    return find_embeddings(h, h)


def orbit_representatives(h, auts=None):
    auts = automorphisms(h) if auts is None else auts
    reps, seen = [], set()
    for v in range(h.n):
        if v not in seen:
            reps.append(v)
            seen.update(a[v] for a in auts)
    return reps


def canonical_piece(boundary, interior, auts):
    """Smallest image of a piece under the automorphisms of H.

    ``boundary`` maps pattern vertices to host vertices, ``interior`` is a
    set of pattern vertices.
    """
    best = None
    for a in auts:
        cand = (tuple(sorted((a[x], v) for x, v in boundary.items())),
                tuple(sorted(a[x] for x in interior)))
        if best is None or cand < best:
            best = cand
    return best


@dataclass(frozen=True)
class PartialCopy:
    """Part of k disjoint copies of H seen from a boundary.

    Each entry of ``pieces`` is ``(boundary, interior)``: ``boundary`` is a
    sorted tuple of (pattern vertex, host vertex) pairs, ``interior`` the
    sorted pattern vertices behind the boundary.  Pattern vertices in neither
    are outside.  Interior vertices never neighbour outside ones.
    """

    pattern: Graph
    k: int
    pieces: tuple

    @property
    def boundary_vertices(self):
        return frozenset(v for bd, _ in self.pieces for _, v in bd)


def enumerate_partial_copies(g, x, h, k, guard=200_000):
    """All partial copies of k·H whose boundary graph lives in G[x].

    Results are deduplicated up to automorphisms of each copy and
    reordering of the copies.
    """
    x = sorted(set(x))
    check(h.n * k, 16, "partial copy enumeration")
    auts = automorphisms(h)
    per_copy = []
    for mask in range(1 << h.n):
        vf = {v for v in range(h.n) if mask >> v & 1}
        for bmask in range(1 << h.n):
            if bmask & ~mask:
                continue
            bd = [v for v in range(h.n) if bmask >> v & 1]
            inner = vf - set(bd)
            if any(y not in vf for v in inner for y in h.adj[v]):
                continue
            per_copy.append((bd, inner))
    seen = set()
    out = []

    def place(i, used, chosen):
        if i == k:
            key = tuple(sorted(chosen))
            if key not in seen:
                seen.add(key)
                out.append(PartialCopy(h, k, key))
                check(len(out), guard, "partial copy enumeration")
            return
        for bd, inner in per_copy:
            for images in _injections(len(bd), [v for v in x if v not in used]):
                phi = dict(zip(bd, images))
                if any(h.has_edge(a, b) and not g.has_edge(phi[a], phi[b])
                       for a in bd for b in bd if a < b):
                    continue
                piece = canonical_piece(phi, inner, auts)
                place(i + 1, used | set(images), chosen + [piece])

    place(0, frozenset(), [])
    return out


def _injections(r, pool):
    if r == 0:
        yield ()
        return
    for i, v in enumerate(pool):
        for rest in _injections(r - 1, pool[:i] + pool[i + 1:]):
            yield (v,) + rest


# -- the dynamic program ----------------------------------------------------


class _Node:
    __slots__ = ("t", "bag", "alpha", "beta", "delta", "local", "children", "child_delta",
                 "holders", "free_child")

    def __init__(self, d, t):
        self.t = t
        self.alpha = frozenset(d.alpha[t])
        self.beta = frozenset(d.beta[t])
        self.bag = self.alpha | self.beta
        self.delta = frozenset(d.adhesion(t))
        self.local = tuple(sorted(self.bag - self.delta))
        self.children = tuple(d.children(t))
        self.child_delta = {c: frozenset(d.adhesion(c)) for c in self.children}
        self.holders = {}
        for c in self.children:
            for v in self.child_delta[c]:
                self.holders.setdefault(v, []).append(c)
        # the (at most one) free vertex of the bag a child may route a copy through
        self.free_child = {}
        for c in self.children:
            shared = (self.child_delta[c] & self.beta) - self.delta
            if len(shared) > 1:
                raise DecompositionError(f"child {c} shares {len(shared)} free vertices with {t}")
            self.free_child[c] = next(iter(shared)) if shared else None


class _Copy:
    __slots__ = ("concrete", "todo", "outside", "new")

    def __init__(self, concrete, todo, outside, new):
        self.concrete = concrete
        self.todo = todo
        self.outside = outside
        self.new = new


class _Solver:
    def __init__(self, g, d, h, mode, prune):
        self.g = g
        self.h = h
        self.mode = mode
        self.prune = prune
        self.auts = automorphisms(h)
        self.reps = orbit_representatives(h, self.auts)
        self.nodes = {t: _Node(d, t) for t in d.nodes()}
        self.root = d.root
        self.memo = {}

    # keys ---------------------------------------------------------------

    def key(self, pieces, occupied):
        canon = tuple(sorted(canonical_piece(bd, inner, self.auts) for bd, inner in pieces))
        occ = frozenset(occupied) if self.mode == "scattered" else frozenset()
        return canon, occ

    def value(self, t, key):
        hit = self.memo.get((t, key))
        if hit is None:
            hit = self._solve(t, key)
            self.memo[(t, key)] = hit
        return hit[0]

    # node search --------------------------------------------------------

    def _solve(self, t, key):
        node = self.nodes[t]
        g, h = self.g, self.h
        pieces, occ = key
        copies = []
        owner = {v: -1 for v in occ}
        for bd, inner in pieces:
            concrete = dict(bd)
            inner = set(inner)
            outside = set(range(h.n)) - inner - set(concrete)
            if any(y in outside for x in inner for y in h.adj[x]):
                return -inf, None
            idx = len(copies)
            copies.append(_Copy(concrete, inner, outside, False))
            for v in concrete.values():
                owner[v] = idx
        budget = len(node.alpha - node.delta) if self.prune else len(node.local)
        best = [-inf, None]
        self._place(node, 0, copies, owner, 0, budget, best)
        return best[0], best[1]

    def _compatible(self, node, copies, owner, j, x, u):
        """May pattern vertex x of copy j go to local vertex u?"""
        g, h = self.g, self.h
        cp = copies[j]
        for y in h.adj[x]:
            if y in cp.outside:
                return False
            w = cp.concrete.get(y)
            if w is not None and not g.has_edge(u, w):
                return False
        if self.mode == "induced":
            for y, w in cp.concrete.items():
                if y != x and y not in h.adj[x] and g.has_edge(u, w):
                    return False
        if self.mode == "scattered":
            for w in g.adj[u]:
                o = owner.get(w)
                if o is not None and o != j:
                    return False
        return True

    def _place(self, node, i, copies, owner, new_count, budget, best):
        if i == len(node.local):
            self._finish(node, copies, owner, new_count, best)
            return
        u = node.local[i]
        # u stays unused
        self._place(node, i + 1, copies, owner, new_count, budget, best)
        # u joins an open copy
        for j, cp in enumerate(copies):
            for x in sorted(cp.todo):
                if self._compatible(node, copies, owner, j, x, u):
                    cp.todo.discard(x)
                    cp.concrete[x] = u
                    owner[u] = j
                    self._place(node, i + 1, copies, owner, new_count, budget, best)
                    del owner[u]
                    del cp.concrete[x]
                    cp.todo.add(x)
        # u opens a new copy
        if new_count < budget:
            j = len(copies)
            for x in self.reps:
                cp = _Copy({x: u}, set(range(self.h.n)) - {x}, set(), True)
                copies.append(cp)
                if self.mode != "scattered" or all(owner.get(w, j) == j for w in self.g.adj[u]):
                    owner[u] = j
                    self._place(node, i + 1, copies, owner, new_count + 1, budget, best)
                    del owner[u]
                copies.pop()

    def _finish(self, node, copies, owner, new_count, best):
        h = self.h
        for cp in copies:
            if cp.new and self.prune and not (set(cp.concrete.values()) & node.alpha):
                return
            if not cp.todo:
                assert not set(cp.concrete.values()) <= node.beta, \
                    "a copy of the pattern sits inside a bipartite free part"
        # split what is left of each copy into pieces that must go below one child
        groups = []
        for j, cp in enumerate(copies):
            left = set(cp.todo)
            while left:
                comp, stack = set(), [min(left)]
                while stack:
                    x = stack.pop()
                    if x in comp:
                        continue
                    comp.add(x)
                    stack.extend(y for y in h.adj[x] if y in left)
                left -= comp
                anchors = {cp.concrete[y] for x in comp for y in h.adj[x] if y in cp.concrete}
                if any(y in cp.outside for x in comp for y in h.adj[x]):
                    return
                if not anchors:
                    return
                first = next(iter(anchors))
                cands = [c for c in node.holders.get(first, ())
                         if anchors <= node.child_delta[c]]
                if not cands:
                    return
                groups.append((j, frozenset(comp), cands))
        for choice in product(*[cands for _, _, cands in groups]):
            self._evaluate(node, copies, owner, new_count, groups, choice, best)

    def _child_pieces(self, node, copies, groups, choice):
        inner = {}
        for (j, comp, _), c in zip(groups, choice):
            inner.setdefault(c, {}).setdefault(j, set()).update(comp)
        pieces = {}
        for c, per_copy in inner.items():
            dc = node.child_delta[c]
            lst = []
            for j, comp in per_copy.items():
                bd = {x: v for x, v in copies[j].concrete.items() if v in dc}
                lst.append((j, bd, comp))
            pieces[c] = lst
        return pieces

    def _evaluate(self, node, copies, owner, new_count, groups, choice, best):
        pieces = self._child_pieces(node, copies, groups, choice)
        occupied = set(owner)
        zfree = set()
        if self.prune:
            zfree = {node.free_child[c] for c in node.children
                     if node.free_child[c] is not None} - occupied

        def child_key(c, extra=None, taken=frozenset()):
            lst = [(bd, comp) for _, bd, comp in pieces.get(c, ())]
            used_here = set()
            for bd, _ in lst:
                used_here |= set(bd.values())
            if extra is not None:
                lst.append(extra)
                used_here |= set(extra[0].values())
            occ = ((occupied | taken) & node.child_delta[c]) - used_here
            return self.key(lst, occ)

        total = new_count
        plan_children = {}
        by_vertex = {}
        for c in node.children:
            v = node.free_child[c]
            if v in zfree:
                by_vertex.setdefault(v, []).append(c)
                continue
            k = child_key(c)
            val = self.value(c, k)
            if val == -inf:
                return
            total += val
            plan_children[c] = k
        # settle copies hanging from a single free vertex
        options = {}
        for v, holders in sorted(by_vertex.items()):
            free_keys = {c: child_key(c) for c in holders}
            free_vals = {c: self.value(c, k) for c, k in free_keys.items()}
            if any(val == -inf for val in free_vals.values()):
                return
            free_total = sum(free_vals.values())
            take = None
            if self.mode != "scattered" or all(w not in occupied for w in self.g.adj[v]):
                if self.mode == "scattered":
                    taken_keys = {c: child_key(c, taken={v}) for c in holders}
                    taken_vals = {c: self.value(c, k) for c, k in taken_keys.items()}
                for c in holders:
                    for x in self.reps:
                        extra = ({x: v}, set(range(self.h.n)) - {x})
                        kz = child_key(c, extra)
                        val = self.value(c, kz)
                        if val == -inf:
                            continue
                        if self.mode == "scattered":
                            others = [taken_vals[o] for o in holders if o != c]
                            if any(o == -inf for o in others):
                                continue
                            cand = 1 + val + sum(others)
                            keys = {o: taken_keys[o] for o in holders if o != c}
                        else:
                            cand = 1 + val + free_total - free_vals[c]
                            keys = {o: free_keys[o] for o in holders if o != c}
                        keys[c] = kz
                        if take is None or cand > take[0]:
                            take = (cand, keys, c)
            options[v] = (free_total, free_keys, take)
        chosen = self._pick_free_vertices(options)
        zcopies = []
        for v, (free_total, free_keys, take) in options.items():
            if v in chosen:
                total += take[0]
                plan_children.update(take[1])
                zcopies.append((v, take[2]))
            else:
                total += free_total
                plan_children.update(free_keys)
        if total > best[0]:
            layout = tuple((cp.new, tuple(sorted(cp.concrete.items()))) for cp in copies)
            best[0] = total
            best[1] = (layout, plan_children, tuple(zcopies))

    def _pick_free_vertices(self, options):
        gains = {v: opt[2][0] - opt[0] for v, opt in options.items()
                 if opt[2] is not None and opt[2][0] > opt[0]}
        if not gains:
            return set()
        if self.mode != "scattered":
            return set(gains)
        verts = sorted(gains)
        sub, index = induced_subgraph(self.g.unweighted(), verts)
        weights = [gains[v] for v in verts]
        cover, _ = bipartite_min_vertex_cover(sub, weights)
        back = {i: v for v, i in index.items()}
        return {back[i] for i in range(sub.n) if i not in set(cover)}

    # witness ------------------------------------------------------------

    def rebuild(self, t, key):
        """Return (complete copies, {boundary vertices: interior vertices})."""
        self.value(t, key)
        _, plan = self.memo[(t, key)]
        layout, plan_children, zcopies = plan
        node = self.nodes[t]
        pieces, _ = key
        vertex_sets = []
        owner = {}
        for j, (_, items) in enumerate(layout):
            vertex_sets.append(set(v for _, v in items))
            for _, v in items:
                owner[v] = j
        complete = []
        zset = {v for v, _ in zcopies}
        for c in node.children:
            sub_complete, partial = self.rebuild(c, plan_children[c])
            complete.extend(sub_complete)
            for bd, interior in partial.items():
                anchor = next(iter(bd))
                if anchor in zset and anchor not in owner:
                    complete.append(frozenset(bd | interior))
                else:
                    vertex_sets[owner[anchor]] |= interior
        partial = {}
        delta = node.delta
        for (is_new, _), verts in zip(layout, vertex_sets):
            if is_new:
                complete.append(frozenset(verts))
            else:
                bd = frozenset(v for v in verts if v in delta)
                partial[bd] = frozenset(verts - delta)
        return complete, partial


def _check_pattern(h):
    if h.n < 3 or not is_biconnected(h):
        raise PatternError("pattern must be 2-connected")
    if is_bipartite(h):
        raise PatternError("pattern must not be bipartite")


def solve_packing_xp(g, d, h, mode="subgraph", prune=True, guard=24):
    """Maximum packing of copies of ``h`` in ``g`` using the decomposition ``d``.

    Returns ``(size, copies)`` with each copy given as a sorted vertex tuple.
    """
    if mode not in MODES:
        raise ValueError(f"unknown packing mode {mode!r}")
    _check_pattern(h)
    report = validate(g, d)
    if report:
        raise DecompositionError(f"invalid decomposition: {report[0]}")
    check(h.n * (d.width() + 2), guard, "packing pattern size times width")
    g = g.unweighted()
    solver = _Solver(g, d, h, mode, prune)
    root_key = solver.key([], ())
    size = solver.value(d.root, root_key)
    complete, _ = solver.rebuild(d.root, root_key)
    copies = sorted(tuple(sorted(c)) for c in complete)
    if len(copies) != size:
        raise AssertionError("witness size disagrees with the table value")
    verify_packing(g, h, mode, copies)
    return int(size), copies


def verify_packing(g, h, mode, copies):
    """Raise ``ValueError`` unless ``copies`` is a valid packing."""
    seen = set()
    for c in copies:
        if seen & set(c):
            raise ValueError("copies overlap")
        seen |= set(c)
        sub, _ = induced_subgraph(g, c)
        if len(c) != h.n or not find_embeddings(h, sub, induced=(mode == "induced"),
                                                 first_only=True):
            raise ValueError(f"{c} does not host the pattern")
    if mode == "scattered":
        where = {v: i for i, c in enumerate(copies) for v in c}
        for u, v in g.edges:
            if u in where and v in where and where[u] != where[v]:
                raise ValueError("copies are joined by an edge")
    return True
