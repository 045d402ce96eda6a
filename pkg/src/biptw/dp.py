"""Generic bottom-up dynamic program over rooted bipartite tree decompositions.

For every node t and every annotation X of its adhesion delta_t, the engine
tries each annotation A of A_t = alpha(t) | delta_t that extends X.  The
problem plugin replaces the children by small gadgets (its *nice
reduction*), the gadget graph is glued onto the bag graph with the masking
operation, and the plugin's annotated base solver finishes the job because
the unannotated part of the result is bipartite.
"""

from dataclasses import dataclass, field
from itertools import product

from .boundaried import BoundariedGraph, mask_triangleright
from .decomposition import DecompositionError, node_context, normalize, validate
from .extint import NEG_INF, POS_INF, ext_add
from .graph import induced_subgraph, is_bipartite


class ReductionError(RuntimeError):
    pass


class CertificateError(RuntimeError):
    pass


# -- annotations ---------------------------------------------------------

@dataclass(frozen=True)
class AnnotatedPartition:
    """Ordered p-partition of a vertex subset; empty parts are allowed."""

    parts: tuple

    def __post_init__(self):
        parts = tuple(tuple(sorted(set(p))) for p in self.parts)
        seen = set()
        for p in parts:
            if seen & set(p):
                raise ValueError("parts must be pairwise disjoint")
            seen |= set(p)
        object.__setattr__(self, "parts", parts)

    @property
    def p(self):
        return len(self.parts)

    @property
    def domain(self):
        return tuple(sorted(v for part in self.parts for v in part))

    def as_dict(self):
        return {v: i for i, part in enumerate(self.parts) for v in part}

    @classmethod
    def from_dict(cls, assignment, p):
        parts = [[] for _ in range(p)]
        for v, i in assignment.items():
            parts[i].append(v)
        return cls(tuple(parts))

    def restrict(self, vertices):
        keep = set(vertices)
        return AnnotatedPartition(tuple(tuple(v for v in part if v in keep) for part in self.parts))

    def to_json(self):
        return [list(part) for part in self.parts]


def as_assignment(annotation):
    if isinstance(annotation, AnnotatedPartition):
        return annotation.as_dict()
    if isinstance(annotation, dict):
        return dict(annotation)
    return AnnotatedPartition(tuple(annotation)).as_dict()


def enumerate_partitions(s, p):
    """All p^|s| ordered partitions of ``s``, lexicographic in (vertex, part)."""
    verts = tuple(sorted(s))
    for key in product(range(p), repeat=len(verts)):
        yield AnnotatedPartition.from_dict(dict(zip(verts, key)), p)


def key_of(vertices, assignment):
    return tuple(assignment[v] for v in vertices)


# -- plugin contract -------------------------------------------------------

@dataclass
class ChildRecord:
    """What a parent sees of one child: its adhesion and its table of optima."""

    boundary: tuple
    table: dict

    def value(self, assignment):
        return self.table[key_of(self.boundary, assignment)]


@dataclass
class NiceResult:
    """Output of a nice reduction.

    ``graph`` is a trivial boundaried graph whose labels are host vertex ids
    for bag vertices and fresh labels (>= host n) for gadget vertices.
    ``assignment`` annotates labels of the new apex set.  ``vertex_weights`` and
    ``edge_weights`` override host weights (keys are labels), ``fixed`` gives
    the part of every bag vertex the reduction removed.
    """

    graph: BoundariedGraph
    assignment: dict
    offset: object
    vertex_weights: dict = field(default_factory=dict)
    edge_weights: dict = field(default_factory=dict)
    fixed: dict = field(default_factory=dict)


class ProblemPlugin:
    """Base class for annotated problems that admit a nice reduction."""

    name = "abstract"
    p = 2
    opt = "min"
    weight_kind = None  # "vertex", "edge" or None

    def worst(self):
        return POS_INF if self.opt == "min" else NEG_INF

    def better(self, a, b):
        return a < b if self.opt == "min" else a > b

    def default_weights(self, g):
        if self.weight_kind == "vertex":
            return g.vertex_weight_list()
        if self.weight_kind == "edge":
            return g.edge_weight_map()
        return None

    def check_weights(self, g, weights):
        if self.weight_kind is None and (g.weighted or weights is not None):
            raise ValueError(f"{self.name} is an unweighted problem")

    # subclasses implement these four
    def evaluate(self, g, partition, weights=None):
        raise NotImplementedError

    def solve_base(self, g, annotation, weights=None):
        raise NotImplementedError

    def boundary_cost(self, g, assignment, vertices, weights):
        """Objective contribution of ``assignment`` restricted to ``g[vertices]``."""
        raise NotImplementedError

    def nice_reduce(self, g, ctx, assignment, children, weights):
        raise NotImplementedError

    # shared helpers for reductions
    def excess(self, g, child, assignment, weights):
        """Child optimum minus what the bag already accounts for on its adhesion."""
        return ext_add(child.value(assignment),
                       -self.boundary_cost(g, assignment, child.boundary, weights))

    def fold_children(self, g, ctx, assignment, children, weights):
        """Offset of fully annotated children and grouping of the others by v."""
        offset = 0
        groups = {}
        A = set(ctx.A)
        for child in children:
            loose = [v for v in child.boundary if v not in A]
            if not loose:
                offset = ext_add(offset, self.excess(g, child, assignment, weights))
            elif len(loose) == 1:
                groups.setdefault(loose[0], []).append(child)
            else:
                raise ReductionError("child adhesion has more than one unannotated vertex")
        return offset, dict(sorted(groups.items()))

    def group_excess(self, g, group, assignment, v, part, weights):
        local = dict(assignment)
        local[v] = part
        return ext_add(*[self.excess(g, c, local, weights) for c in group])


# -- engine ------------------------------------------------------------------

@dataclass
class NodeTable:
    node: int
    delta: tuple
    A: tuple
    entries: dict  # adhesion key -> (value, best key over A)


@dataclass
class DPResult:
    value: object
    tables: dict
    decomposition: object

    def __iter__(self):
        yield self.value
        yield self.tables


def bag_boundaried(g, ctx):
    sub, index = induced_subgraph(g.unweighted(), ctx.bag)
    return BoundariedGraph(sub, {index[v]: v for v in ctx.X}), {i: v for v, i in index.items()}


def reduced_instance(g, plugin, ctx, bag_bg, bag_back, red, weights, debug=False):
    """Glue the reduction onto the bag graph.

    Returns ``(glued, annotation, weights, origin)`` where ``origin`` maps each
    glued vertex to its host vertex or gadget label.
    """
    glued, heirs = mask_triangleright(red.graph, bag_bg)
    origin = {}
    for x, sources in heirs.backward.items():
        op, v = sources[0]
        origin[x] = red.graph.labels[v] if op == 0 else bag_back[v]
    label_to_x = {lab: x for x, lab in origin.items()}
    annotation = {label_to_x[lab]: part for lab, part in red.assignment.items()}
    if debug:
        free = [x for x in range(glued.n) if x not in annotation]
        if not is_bipartite(glued, free):
            raise ReductionError(f"reduced instance at node {ctx.node} is not bipartite off the apex set")
    if plugin.weight_kind == "vertex":
        w = []
        for x in range(glued.n):
            lab = origin[x]
            if lab in red.vertex_weights:
                w.append(red.vertex_weights[lab])
            elif lab < g.n:
                w.append(weights[lab])
            else:
                w.append(0)
    elif plugin.weight_kind == "edge":
        w = {}
        for (x, y) in glued.edges:
            a, b = origin[x], origin[y]
            e = (a, b) if a < b else (b, a)
            if e in red.edge_weights:
                w[(x, y)] = red.edge_weights[e]
            elif a < g.n and b < g.n:
                w[(x, y)] = weights[e]
            else:
                w[(x, y)] = 0
    else:
        w = None
    return glued, annotation, w, origin


def _solve_reduced(g, plugin, ctx, bag_bg, bag_back, red, weights, debug):
    """Glue the reduction onto the bag graph and run the base solver."""
    glued, annotation, w, origin = reduced_instance(g, plugin, ctx, bag_bg, bag_back, red,
                                                    weights, debug)
    value, witness = plugin.solve_base(glued, annotation, w)
    total = ext_add(value, red.offset)
    if witness is None:
        return total, None
    local = {}
    for x, part in witness.items():
        if origin[x] < g.n:
            local[origin[x]] = part
    local.update(red.fixed)
    return total, local


def _prepare(g, d, plugin, weights, normalize_first):
    plugin.check_weights(g, weights)
    if weights is None:
        weights = plugin.default_weights(g)
    report = validate(g, d)
    if report:
        raise DecompositionError(f"invalid decomposition: {report[0]}")
    if normalize_first:
        d = normalize(g, d)
    return d, weights


def run_dp(g, d, plugin, weights=None, normalize_first=True, debug=False):
    """Optimum of ``plugin`` on ``g`` using the decomposition ``d``."""
    d, weights = _prepare(g, d, plugin, weights, normalize_first)
    tables = {}
    for t in d.postorder():
        ctx = node_context(d, t)
        bag_bg, bag_back = bag_boundaried(g, ctx)
        children = [ChildRecord(d.adhesion(c), {k: v for k, (v, _) in tables[c].entries.items()})
                    for c in ctx.children]
        extra = [v for v in ctx.A if v not in set(ctx.delta)]
        entries = {}
        for xkey in product(range(plugin.p), repeat=len(ctx.delta)):
            best, best_key = plugin.worst(), None
            base = dict(zip(ctx.delta, xkey))
            for ekey in product(range(plugin.p), repeat=len(extra)):
                assignment = dict(base)
                assignment.update(zip(extra, ekey))
                red = plugin.nice_reduce(g, ctx, assignment, children, weights)
                total, _ = _solve_reduced(g, plugin, ctx, bag_bg, bag_back, red, weights, debug)
                if best_key is None or plugin.better(total, best):
                    best, best_key = total, key_of(ctx.A, assignment)
            entries[xkey] = (best, best_key)
        tables[t] = NodeTable(t, ctx.delta, ctx.A, entries)
    return DPResult(tables[d.root].entries[()][0], tables, d)


def extract_certificate(g, d, plugin, result, weights=None, debug=False):
    """Full optimal partition of V(g) matching ``result.value``.

    ``d`` is only used for validation; the traversal follows the
    decomposition the tables were built on.
    """
    plugin.check_weights(g, weights)
    if weights is None:
        weights = plugin.default_weights(g)
    d = result.decomposition
    tables = result.tables
    if result.value in (POS_INF, NEG_INF):
        raise CertificateError("no finite optimum to certify")
    full = {}
    want = {d.root: ()}
    for t in d.preorder():
        ctx = node_context(d, t)
        value, akey = tables[t].entries[want[t]]
        assignment = dict(zip(ctx.A, akey))
        children = [ChildRecord(d.adhesion(c), {k: v for k, (v, _) in tables[c].entries.items()})
                    for c in ctx.children]
        red = plugin.nice_reduce(g, ctx, assignment, children, weights)
        bag_bg, bag_back = bag_boundaried(g, ctx)
        total, local = _solve_reduced(g, plugin, ctx, bag_bg, bag_back, red, weights, debug)
        if total != value:
            raise CertificateError(f"node {t}: witness value {total} differs from table value {value}")
        for v, part in local.items():
            if v in full and full[v] != part:
                raise CertificateError(f"vertex {v} assigned inconsistently")
            full[v] = part
        for c in ctx.children:
            want[c] = key_of(d.adhesion(c), full)
    return AnnotatedPartition.from_dict(full, plugin.p)
