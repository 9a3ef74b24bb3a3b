"""Named small graphs, canonical certificates, and exhaustive enumeration of
connected subcubic graphs up to isomorphism.

The enumeration backs the desk-scale verification sweeps: every connected
graph with maximum degree <= 3 on up to ~12 vertices, one representative per
isomorphism class. Representatives on n vertices are produced by attaching a
new vertex to every connected representative on n-1 vertices in all
degree-feasible ways and deduplicating by canonical certificate. This covers
everything because any connected graph has a vertex (a spanning-tree leaf)
whose removal keeps it connected.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

from .graph import Graph

__all__ = [
    "cycle",
    "path",
    "complete",
    "complete_bipartite",
    "star",
    "petersen",
    "theta",
    "disjoint_union",
    "canonical_certificate",
    "connected_subcubic_graphs",
    "connected_subcubic_graphs_upto",
]


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i + 1) for i in range(leaves)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph.from_edges(10, outer + inner + spokes)


def theta(*internals: int) -> Graph:
    """Two endpoint vertices joined by internally disjoint paths; ``internals``
    gives the number of internal vertices on each path (0 = direct edge)."""
    if len(internals) < 2:
        raise ValueError("theta needs at least two paths")
    edges = []
    nxt = 2
    for k in internals:
        prev = 0
        for _ in range(k):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return Graph.from_edges(nxt, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    n = 0
    edges = []
    for g in graphs:
        edges.extend((u + n, v + n) for u, v in g.edges())
        n += g.n
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# Canonical certificates (refinement + individualization, adequate for the
# small sparse graphs handled here).
# ---------------------------------------------------------------------------


def _refine(adj: list[list[int]], colors: list[int]) -> list[int]:
    n = len(adj)
    while True:
        sig = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        order = sorted(set(sig))
        rank = {s: i for i, s in enumerate(order)}
        new = [rank[sig[v]] for v in range(n)]
        if new == colors:
            return colors
        colors = new


def _cert_from_order(adj: list[list[int]], order: list[int]) -> tuple[int, ...]:
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    rows = []
    for v in order:
        mask = 0
        for u in adj[v]:
            mask |= 1 << pos[u]
        rows.append(mask)
    return tuple(rows)


def _canon_search(adj: list[list[int]], colors: list[int]) -> tuple[int, ...]:
    n = len(adj)
    colors = _refine(adj, colors)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    target = None
    for c in sorted(cells):
        if len(cells[c]) > 1:
            target = cells[c]
            break
    if target is None:
        order = sorted(range(n), key=lambda v: colors[v])
        return _cert_from_order(adj, order)
    best = None
    for v in target:
        branched = [c * 2 for c in colors]
        branched[v] -= 1
        cert = _canon_search(adj, branched)
        if best is None or cert < best:
            best = cert
    return best


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    """Isomorphism-invariant certificate: equal certificates iff isomorphic."""
    if g.n == 0:
        return ()
    adj = [list(a) for a in g.adj]
    return _canon_search(adj, [0] * g.n)


# ---------------------------------------------------------------------------
# Exhaustive enumeration of connected subcubic graphs up to isomorphism.
# ---------------------------------------------------------------------------


def _extensions(g: Graph, max_degree: int) -> Iterator[Graph]:
    # Attach one new vertex to 1..max_degree existing vertices of degree
    # < max_degree. Connectivity of the parent makes the child connected.
    candidates = [v for v in range(g.n) if g.degree(v) < max_degree]
    base = list(g.edges())
    for k in range(1, max_degree + 1):
        for combo in combinations(candidates, k):
            yield Graph.from_edges(g.n + 1, base + [(v, g.n) for v in combo])


def _levels(max_n: int, max_degree: int) -> Iterator[list[Graph]]:
    level = [Graph.from_edges(1, [])]
    yield level
    for _ in range(max_n - 1):
        seen: set[tuple[int, ...]] = set()
        nxt: list[Graph] = []
        for g in level:
            for h in _extensions(g, max_degree):
                cert = canonical_certificate(h)
                if cert not in seen:
                    seen.add(cert)
                    nxt.append(h)
        level = nxt
        yield level


def connected_subcubic_graphs(n: int, max_degree: int = 3) -> Iterator[Graph]:
    """Yield one representative of every connected graph on exactly ``n``
    vertices with maximum degree <= ``max_degree``."""
    if n < 1:
        return
    for level in _levels(n, max_degree):
        pass
    yield from level


def connected_subcubic_graphs_upto(n: int, max_degree: int = 3) -> Iterator[Graph]:
    """All connected representatives with 1..n vertices, smallest first."""
    if n < 1:
        return
    for level in _levels(n, max_degree):
        yield from level
