"""Minimum vertex cover on subcubic graphs via the advised greedy.

Two pipelines: the complement of the greedy independent set (5/4-approximate),
and the same after shrinking the instance with a Nemhauser-Trotter partition
(6/5-approximate). The partition comes from the half-integral LP optimum read
off a maximum matching in the bipartite double graph: make two copies of the
vertex set, join u_left to v_right for every edge uv, take a Koenig minimum
vertex cover of that bipartite graph, and set x_v to half the number of
copies of v in the cover. Then V1 = {x=0}, V2 = {x=1}, V3 = {x=1/2}.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graph import Graph, induced_subgraph, is_vertex_cover
from .greedy import DegreeBoundError, greedy_star

__all__ = [
    "NTPartition",
    "nt_partition",
    "complementary_greedy",
    "mvc_six_fifths",
    "hopcroft_karp",
]


def hopcroft_karp(
    n_left: int, n_right: int, adj: list[list[int]]
) -> tuple[int, list[int], list[int]]:
    """Maximum bipartite matching. ``adj[u]`` lists right-neighbors of left
    vertex ``u``. Returns (size, match_left, match_right) with -1 = exposed.
    Deterministic: vertices are scanned in id order."""
    INF = float("inf")
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0.0] * n_left

    def bfs() -> bool:
        queue = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        found = False
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        return found

    def dfs(u: int) -> bool:
        for v in adj[u]:
            w = match_r[v]
            if w == -1 or (dist[w] == dist[u] + 1 and dfs(w)):
                match_l[u] = v
                match_r[v] = u
                return True
        dist[u] = INF
        return False

    size = 0
    while bfs():
        for u in range(n_left):
            if match_l[u] == -1 and dfs(u):
                size += 1
    return size, match_l, match_r


def _koenig_cover(
    n_left: int, n_right: int, adj: list[list[int]], match_l: list[int], match_r: list[int]
) -> tuple[set[int], set[int]]:
    """Koenig minimum vertex cover from a maximum matching: alternating
    reachability Z from exposed left vertices; cover = (L - Z) + (R ∩ Z)."""
    z_left = set()
    z_right = set()
    queue = deque(u for u in range(n_left) if match_l[u] == -1)
    z_left.update(queue)
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v not in z_right:
                z_right.add(v)
                w = match_r[v]
                if w != -1 and w not in z_left:
                    z_left.add(w)
                    queue.append(w)
    cover_l = set(range(n_left)) - z_left
    cover_r = z_right
    return cover_l, cover_r


@dataclass(frozen=True)
class NTPartition:
    """Nemhauser-Trotter partition: V1 joins some maximum independent set,
    V2 is excluded from one, V3 is the half-integral kernel with
    alpha(G[V3]) <= |V3|/2 and no edge between V1 and V3."""

    v1: frozenset[int]
    v2: frozenset[int]
    v3: frozenset[int]


def nt_partition(g: Graph) -> NTPartition:
    adj = [list(g.adj[u]) for u in range(g.n)]
    _, match_l, match_r = hopcroft_karp(g.n, g.n, adj)
    cover_l, cover_r = _koenig_cover(g.n, g.n, adj, match_l, match_r)
    v1, v2, v3 = set(), set(), set()
    for v in range(g.n):
        x2 = (v in cover_l) + (v in cover_r)  # 2 * x_v
        if x2 == 0:
            v1.add(v)
        elif x2 == 2:
            v2.add(v)
        else:
            v3.add(v)
    return NTPartition(frozenset(v1), frozenset(v2), frozenset(v3))


def complementary_greedy(g: Graph) -> tuple[int, ...]:
    """Vertex cover as the complement of the advised greedy independent set."""
    if not g.is_subcubic():
        raise DegreeBoundError(f"maximum degree {g.max_degree()} > 3")
    independent = greedy_star(g).solution_set()
    cover = tuple(sorted(set(range(g.n)) - independent))
    assert is_vertex_cover(g, cover)
    return cover


def mvc_six_fifths(g: Graph) -> tuple[int, ...]:
    """Vertex cover V2 ∪ (V3 minus the greedy independent set of G[V3])."""
    if not g.is_subcubic():
        raise DegreeBoundError(f"maximum degree {g.max_degree()} > 3")
    part = nt_partition(g)
    sub, old_ids = induced_subgraph(g, part.v3)
    independent = {old_ids[v] for v in greedy_star(sub).solution}
    cover = tuple(sorted(part.v2 | (part.v3 - independent)))
    assert is_vertex_cover(g, cover)
    return cover
