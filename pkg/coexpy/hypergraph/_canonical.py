from ._io import serialize_graph

__all__ = ["canonical_labelling", "canonical_form", "is_isomorphic"]


def _refine(G, colours):
    '''
    Split colour classes by the multiset of colour patterns a vertex sees on its edges
    until the partition is stable. The colour of a vertex is its class rank.
    '''
    incidence = G.incidence
    classes = len(set(colours))
    while True:
        signatures = [(colours[v], tuple(sorted(tuple(sorted(colours[u] for u in e if u != v))
                                                for e in incidence[v])))
                      for v in range(G.n)]
        ranking = {sig: i for i, sig in enumerate(sorted(set(signatures)))}
        colours = [ranking[sig] for sig in signatures]
        if len(ranking) == classes:
            return colours
        classes = len(ranking)


def _twin_representatives(G):
    # u, v are twins when swapping them is an automorphism
    edges = G.edge_set
    rep = list(range(G.n))
    for v in range(G.n):
        for u in range(v):
            if rep[u] != u:
                continue
            swap = {u: v, v: u}
            if all(tuple(sorted(swap.get(w, w) for w in e)) in edges for e in edges):
                rep[v] = u
                break
    return rep


def canonical_labelling(G):
    '''
    Returns (certificate, perm) where perm[v] is the canonical label of vertex v and
    certificate is the sorted edge list of the canonically relabelled graph.
    '''
    twins = _twin_representatives(G)
    edges = G.edges.tolist()
    best = [None, None]

    def visit(colours):
        cells = {}
        for v, c in enumerate(colours):
            cells.setdefault(c, []).append(v)
        target = next((cells[c] for c in sorted(cells) if len(cells[c]) > 1), None)
        if target is None:
            cert = tuple(sorted(tuple(sorted(colours[v] for v in e)) for e in edges))
            if best[0] is None or cert < best[0]:
                best[0], best[1] = cert, list(colours)
            return
        tried = set()
        for v in target:
            if twins[v] in tried:
                continue
            tried.add(twins[v])
            split = [(colours[u], 0 if u == v else 1) for u in range(G.n)]
            ranking = {c: i for i, c in enumerate(sorted(set(split)))}
            visit(_refine(G, [ranking[c] for c in split]))

    visit(_refine(G, [0] * G.n))
    return best[0], best[1]


def canonical_form(G):
    '''
    Byte string equal for two k-graphs iff they are isomorphic
    '''
    _, perm = canonical_labelling(G)
    return serialize_graph(G.relabel(perm)).encode("ascii")


def is_isomorphic(G, H):
    if (G.n, G.k, G.num_edges) != (H.n, H.k, H.num_edges):
        return False
    return canonical_form(G) == canonical_form(H)
