"""Immutable simple-graph core: construction, DIMACS I/O, subgraphs, components.

Vertices are dense integers ``0..n-1``. Adjacency lists are kept sorted
ascending, which makes equality, hashing-by-certificate, and the DIMACS
writer canonical. Graphs are never mutated after construction; algorithms
that shrink a graph track liveness in a separate state object instead of
deleting vertices.
"""

from __future__ import annotations

import warnings
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "DimacsError",
    "DegreeProfile",
    "parse_dimacs",
    "write_dimacs",
    "induced_subgraph",
    "connected_components",
    "degree_profile",
    "is_independent_set",
    "is_maximal_independent_set",
    "is_vertex_cover",
]


class DimacsError(ValueError):
    """Malformed DIMACS edge-format input. Carries the offending line number."""

    def __init__(self, message: str, line_no: int | None = None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class Graph:
    """Undirected simple graph on vertex ids ``0..n-1``.

    ``adj`` is a tuple of sorted tuples; no self-loops, no parallel edges,
    and ``u in adj[v]`` iff ``v in adj[u]``. Instances are safe to share
    read-only across threads.
    """

    __slots__ = ("n", "adj", "m")

    def __init__(self, n: int, adj: tuple[tuple[int, ...], ...], m: int):
        # Trusted constructor: use from_edges() to build from raw edge data.
        self.n = n
        self.adj = adj
        self.m = m

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a canonical graph, deduplicating edges and rejecting loops."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        seen: set[tuple[int, int]] = set()
        lists: list[list[int]] = [[] for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                continue
            seen.add(key)
            lists[u].append(v)
            lists[v].append(u)
        adj = tuple(tuple(sorted(nbrs)) for nbrs in lists)
        return cls(n, adj, len(seen))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, in sorted order."""
        for u in range(self.n):
            for v in self.adj[u]:
                if u < v:
                    yield (u, v)

    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    def min_degree(self) -> int | None:
        return min((len(a) for a in self.adj), default=None)

    def is_subcubic(self) -> bool:
        return self.max_degree() <= 3

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(a) == 3 for a in self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class DegreeProfile:
    """Exact degree statistics. ``min_degree`` is None for the empty graph."""

    min_degree: int | None
    max_degree: int | None
    histogram: dict[int, int]


def degree_profile(g: Graph) -> DegreeProfile:
    if g.n == 0:
        return DegreeProfile(None, None, {})
    hist: dict[int, int] = {}
    for a in g.adj:
        hist[len(a)] = hist.get(len(a), 0) + 1
    return DegreeProfile(min(hist), max(hist), hist)


def parse_dimacs(text: str) -> Graph:
    """Parse DIMACS edge format: comments ``c``, one ``p edge n m`` header,
    edge lines ``e u v`` with 1-based ids.

    Duplicate edge lines are collapsed (with a warning); self-loops, ids out
    of range, and missing or repeated headers are hard errors.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    dup_lines: list[int] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if n is not None:
                raise DimacsError("repeated problem header", line_no)
            if len(parts) != 4 or parts[1] != "edge":
                raise DimacsError(f"bad header {line!r}", line_no)
            try:
                n = int(parts[2])
                int(parts[3])
            except ValueError:
                raise DimacsError(f"bad header {line!r}", line_no) from None
            if n < 0:
                raise DimacsError("negative vertex count", line_no)
        elif parts[0] == "e":
            if n is None:
                raise DimacsError("edge line before problem header", line_no)
            if len(parts) != 3:
                raise DimacsError(f"bad edge line {line!r}", line_no)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise DimacsError(f"bad edge line {line!r}", line_no) from None
            if u == v:
                raise DimacsError(f"self-loop at vertex {u}", line_no)
            if not (1 <= u <= n and 1 <= v <= n):
                raise DimacsError(f"vertex id out of range in {line!r}", line_no)
            key = (u - 1, v - 1) if u < v else (v - 1, u - 1)
            if key in seen:
                dup_lines.append(line_no)
                continue
            seen.add(key)
            edges.append(key)
        else:
            raise DimacsError(f"unrecognized line {line!r}", line_no)
    if n is None:
        raise DimacsError("missing problem header")
    if dup_lines:
        warnings.warn(
            f"collapsed {len(dup_lines)} duplicate edge line(s) "
            f"(first at line {dup_lines[0]})",
            stacklevel=2,
        )
    return Graph.from_edges(n, edges)


def write_dimacs(g: Graph) -> str:
    """Emit canonical DIMACS: one header, sorted 1-based edges, LF endings."""
    lines = [f"p edge {g.n} {g.m}"]
    lines.extend(f"e {u + 1} {v + 1}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def induced_subgraph(
    g: Graph, keep: Iterable[int]
) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on ``keep`` plus the id map.

    Returns ``(sub, old_ids)`` where ``old_ids[new] = old``; new ids follow
    the sorted order of the kept old ids, so the map is invertible.
    """
    old_ids = tuple(sorted(set(keep)))
    for v in old_ids:
        if not (0 <= v < g.n):
            raise ValueError(f"vertex id {v} out of range")
    new_of = {old: new for new, old in enumerate(old_ids)}
    edges = [
        (new_of[u], new_of[v])
        for u, v in g.edges()
        if u in new_of and v in new_of
    ]
    return Graph.from_edges(len(old_ids), edges), old_ids


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Maximal connected vertex sets, ordered by smallest contained id."""
    seen = bytearray(g.n)
    out: list[tuple[int, ...]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        out.append(tuple(sorted(comp)))
    return out


def is_independent_set(g: Graph, vs: Iterable[int]) -> bool:
    s = set(vs)
    return all(not (v in s and any(u in s for u in g.adj[v])) for v in s)


def is_maximal_independent_set(g: Graph, vs: Iterable[int]) -> bool:
    s = set(vs)
    if not is_independent_set(g, s):
        return False
    return all(v in s or any(u in s for u in g.adj[v]) for v in range(g.n))


def is_vertex_cover(g: Graph, vs: Iterable[int]) -> bool:
    s = set(vs)
    return all(u in s or v in s for u, v in g.edges())
