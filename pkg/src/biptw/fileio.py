"""Graph text files and decomposition JSON files.

Graph format, one record per line, 0-based vertices::

    c any comment
    p <n> <m>
    e <u> <v> [<edge weight>]      (m lines)
    v <u> <vertex weight>          (optional)

Missing weights are 1.  A graph read without any weight stays unweighted.
"""

import json

from .decomposition import DecompositionError, RootedDecomposition
from .extint import from_json_value, to_json_value
from .graph import Graph, GraphError


class InputError(ValueError):
    pass


def _number(token, lineno):
    try:
        return from_json_value(token)
    except ValueError:
        raise InputError(f"line {lineno}: expected an integer weight, got {token!r}") from None


def parse_graph(text):
    header = None
    edges, edge_w, vertex_w = [], {}, {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        tag = parts[0]
        try:
            if tag == "p":
                if header is not None or len(parts) != 3:
                    raise InputError(f"line {lineno}: malformed or repeated header")
                header = (int(parts[1]), int(parts[2]))
            elif header is None:
                raise InputError(f"line {lineno}: record before the 'p' header")
            elif tag == "e" and len(parts) in (3, 4):
                u, v = int(parts[1]), int(parts[2])
                edges.append((u, v))
                if len(parts) == 4:
                    edge_w[(min(u, v), max(u, v))] = _number(parts[3], lineno)
            elif tag == "v" and len(parts) == 3:
                vertex_w[int(parts[1])] = _number(parts[2], lineno)
            else:
                raise InputError(f"line {lineno}: cannot parse {line!r}")
        except ValueError as exc:
            if isinstance(exc, InputError):
                raise
            raise InputError(f"line {lineno}: {exc}") from None
    if header is None:
        raise InputError("missing 'p <n> <m>' header")
    n, m = header
    if len(edges) != m:
        raise InputError(f"header announces {m} edges, found {len(edges)}")
    for v in vertex_w:
        if not 0 <= v < n:
            raise InputError(f"vertex weight for {v} out of range")
    try:
        g = Graph(n, edges)
        vw = [vertex_w.get(v, 1) for v in range(n)] if vertex_w else None
        ew = {e: edge_w.get(e, 1) for e in g.edges} if edge_w else None
        return g.with_weights(vw, ew)
    except GraphError as exc:
        raise InputError(str(exc)) from None


def format_graph(g, comment=None):
    lines = []
    if comment:
        lines.extend(f"c {c}" for c in comment.splitlines())
    lines.append(f"p {g.n} {g.m}")
    for u, v in g.sorted_edges():
        if g.edge_weights is None:
            lines.append(f"e {u} {v}")
        else:
            lines.append(f"e {u} {v} {to_json_value(g.edge_weight(u, v))}")
    if g.vertex_weights is not None:
        lines.extend(f"v {v} {to_json_value(w)}" for v, w in enumerate(g.vertex_weights))
    return "\n".join(lines) + "\n"


def read_graph(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path, g, comment=None):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g, comment))


def parse_decomposition(text):
    try:
        return RootedDecomposition.from_json(json.loads(text))
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise InputError(f"malformed decomposition JSON: {exc}") from None
    except DecompositionError as exc:
        raise InputError(str(exc)) from None


def format_decomposition(d):
    return json.dumps(d.to_json(), indent=2) + "\n"


def read_decomposition(path):
    with open(path, encoding="utf-8") as fh:
        return parse_decomposition(fh.read())


def write_decomposition(path, d):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_decomposition(d))
