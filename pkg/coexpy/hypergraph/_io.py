from pathlib import Path

from ..errors import InputError, ParseError
from ._kgraph import KGraph

__all__ = ["parse_graph", "serialize_graph", "parse_graphs", "serialize_graphs",
           "read_graph", "write_graph", "read_graphs", "GRAPH_SEPARATOR"]

GRAPH_SEPARATOR = "---"


def _ints(line, lineno):
    try:
        return [int(tok) for tok in line.split()]
    except ValueError:
        raise ParseError("expected integers, got {!r}".format(line), lineno)


def parse_graph(text, first_lineno=1):
    '''
    Parse the hypergraph text format: a "k n" header line followed by one edge per line.
    Blank lines and lines starting with '#' are ignored.
    '''
    header = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=first_lineno):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        values = _ints(line, lineno)
        if header is None:
            if len(values) != 2:
                raise ParseError("header must be 'k n', got {!r}".format(line), lineno)
            k, n = values
            if k < 1 or n < 0:
                raise ParseError("invalid header k={} n={}".format(k, n), lineno)
            header = (k, n)
            continue
        k, n = header
        if len(values) != k:
            raise ParseError("edge must have {} vertices, got {}".format(k, len(values)), lineno)
        if any(v < 0 or v >= n for v in values):
            raise ParseError("vertex out of range 0..{} in {!r}".format(n - 1, line), lineno)
        if len(set(values)) != k:
            raise ParseError("repeated vertex in edge {!r}".format(line), lineno)
        key = tuple(sorted(values))
        if key in seen:
            raise ParseError("duplicate edge {!r}".format(line), lineno)
        seen.add(key)
        edges.append(key)
    if header is None:
        raise ParseError("missing 'k n' header", first_lineno)
    k, n = header
    return KGraph(n, k, edges)


def serialize_graph(G, comments=()):
    lines = ["# " + c for c in comments]
    lines.append("{} {}".format(G.k, G.n))
    lines.extend(" ".join(map(str, e)) for e in G.edges.tolist())
    return "\n".join(lines) + "\n"


def parse_graphs(text):
    '''
    Parse a family file: single-graph blocks separated by '---' lines
    '''
    graphs = []
    block, start = [], 1
    for lineno, line in enumerate(text.splitlines(), start=1):
        if line.strip() == GRAPH_SEPARATOR:
            graphs.append(parse_graph("\n".join(block), first_lineno=start))
            block, start = [], lineno + 1
        else:
            block.append(line)
    if any(line.strip() and not line.strip().startswith("#") for line in block):
        graphs.append(parse_graph("\n".join(block), first_lineno=start))
    ks = {G.k for G in graphs}
    if len(ks) > 1:
        raise InputError("family mixes uniformities {}".format(sorted(ks)))
    return graphs


def serialize_graphs(graphs):
    return (GRAPH_SEPARATOR + "\n").join(serialize_graph(G) for G in graphs)


def read_graph(path):
    return parse_graph(Path(path).read_text())


def read_graphs(path):
    return parse_graphs(Path(path).read_text())


def write_graph(path, G, comments=()):
    Path(path).write_text(serialize_graph(G, comments=comments))
