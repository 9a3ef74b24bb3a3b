"""Reduction engine: basic reductions, backbones, and the extended-reduction
catalogue available in a graph state.

A *basic reduction* is one greedy step: pick a minimum-degree root, add it to
the solution, delete its closed neighborhood. Degree-<=2 basic reductions in
subcubic graphs fall into ten shapes, tagged ``0.a``..``2.f`` by root degree,
adjacency between the two middle vertices, and how many middles have degree
three. The degree-3 opening move of a cubic run is tagged ``3.x``.

*Extended reductions* group consecutive basic reductions so that every basic
step after the first has degree <= 1 (so executing the whole group never
violates the minimum-degree rule): Point, Edge, Path, Branching (size one),
Loop, Cycle, Even-backbone, and Odd-backbone. A *backbone* is a maximal path
of degree-2 vertices between two degree-3 endpoints; it is even or odd by the
parity of its edge count, and a backbone whose endpoints coincide is a loop.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .graph import Graph

__all__ = [
    "POINT",
    "EDGE",
    "PATH",
    "BRANCHING",
    "LOOP",
    "CYCLE",
    "EVEN_BACKBONE",
    "ODD_BACKBONE",
    "CUBIC",
    "PRIORITY",
    "ReductionError",
    "ContractViolation",
    "PureCycleError",
    "NeedsCubicStart",
    "GraphState",
    "BasicReduction",
    "BasicStep",
    "Backbone",
    "ExtendedReduction",
    "classify_basic",
    "find_backbone",
    "enumerate_extended",
    "execute_reduction",
]

POINT = "point"
EDGE = "edge"
PATH = "path"
BRANCHING = "branching"
LOOP = "loop"
CYCLE = "cycle"
EVEN_BACKBONE = "even-backbone"
ODD_BACKBONE = "odd-backbone"
CUBIC = "cubic"

# Greedy-star priority groups, highest first. Lower number wins.
PRIORITY = {
    POINT: 1,
    EDGE: 1,
    PATH: 1,
    BRANCHING: 1,
    CYCLE: 2,
    LOOP: 2,
    EVEN_BACKBONE: 3,
    ODD_BACKBONE: 4,
}


class ReductionError(Exception):
    pass


class ContractViolation(ReductionError):
    pass


class PureCycleError(ReductionError):
    """The walked vertex lies on a component that is a bare cycle."""

    def __init__(self, cycle: tuple[int, ...]):
        super().__init__(f"component is a pure cycle of length {len(cycle)}")
        self.cycle = cycle


class NeedsCubicStart(ReductionError):
    """No degree-<=2 vertex: the component is cubic and needs a guessed start."""


class GraphState:
    """A graph plus a live-vertex mask and current-degree array.

    Vertices are removed logically; the underlying :class:`Graph` is shared
    and never mutated. Single-owner mutable value: clone before branching.
    """

    __slots__ = ("graph", "alive", "deg", "live_count", "_deg_count")

    def __init__(self, graph: Graph):
        self.graph = graph
        self.alive = bytearray([1]) * graph.n if graph.n else bytearray()
        self.deg = graph.degrees()
        self.live_count = graph.n
        counts = [0] * (graph.max_degree() + 1 if graph.n else 1)
        for d in self.deg:
            counts[d] += 1
        self._deg_count = counts

    def clone(self) -> "GraphState":
        other = GraphState.__new__(GraphState)
        other.graph = self.graph
        other.alive = bytearray(self.alive)
        other.deg = list(self.deg)
        other.live_count = self.live_count
        other._deg_count = list(self._deg_count)
        return other

    def is_alive(self, v: int) -> bool:
        return bool(self.alive[v])

    def live_vertices(self) -> Iterator[int]:
        alive = self.alive
        return (v for v in range(self.graph.n) if alive[v])

    def live_neighbors(self, v: int) -> list[int]:
        alive = self.alive
        return [u for u in self.graph.adj[v] if alive[u]]

    def degree(self, v: int) -> int:
        if not self.alive[v]:
            raise ContractViolation(f"vertex {v} is not live")
        return self.deg[v]

    def min_live_degree(self) -> int | None:
        if self.live_count == 0:
            return None
        for d, c in enumerate(self._deg_count):
            if c:
                return d
        return None

    def remove_vertex(self, v: int) -> list[tuple[int, int]]:
        """Remove a live vertex; return (neighbor, new_degree) for each live
        neighbor whose degree dropped."""
        if not self.alive[v]:
            raise ContractViolation(f"vertex {v} already removed")
        self.alive[v] = 0
        self._deg_count[self.deg[v]] -= 1
        self.live_count -= 1
        drops = []
        alive = self.alive
        deg = self.deg
        counts = self._deg_count
        for u in self.graph.adj[v]:
            if alive[u]:
                d = deg[u]
                counts[d] -= 1
                deg[u] = d - 1
                counts[d - 1] += 1
                drops.append((u, d - 1))
        return drops

    def component_of(self, v: int) -> set[int]:
        if not self.alive[v]:
            raise ContractViolation(f"vertex {v} is not live")
        seen = {v}
        stack = [v]
        alive = self.alive
        while stack:
            u = stack.pop()
            for w in self.graph.adj[u]:
                if alive[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return seen


@dataclass(frozen=True)
class BasicReduction:
    """One greedy step at ``root``, described in its execution state."""

    root: int
    middles: tuple[int, ...]
    contact_edges: tuple[tuple[int, int], ...]
    degree: int
    tag: str

    @property
    def ground(self) -> tuple[int, ...]:
        return tuple(sorted((self.root, *self.middles)))


@dataclass(frozen=True)
class BasicStep:
    """Executed basic reduction as recorded in a trace."""

    root: int
    ground: tuple[int, ...]
    tag: str


@dataclass(frozen=True)
class Backbone:
    """Maximal degree-2 path between degree-3 endpoints (equal for a loop).

    ``internal`` is ordered from ``endpoints[0]`` to ``endpoints[1]``. The
    backbone is even iff its edge count ``len(internal) + 1`` is even.
    """

    endpoints: tuple[int, int]
    internal: tuple[int, ...]

    @property
    def is_loop(self) -> bool:
        return self.endpoints[0] == self.endpoints[1]

    @property
    def n_edges(self) -> int:
        return len(self.internal) + 1

    @property
    def parity(self) -> str:
        return "even" if self.n_edges % 2 == 0 else "odd"

    @property
    def roots(self) -> tuple[int, int]:
        return (self.internal[0], self.internal[-1])


@dataclass(frozen=True)
class ExtendedReduction:
    """A candidate extended reduction in some graph state.

    ``root`` is the default (smallest-id) admissible first root; backbone
    reductions record the other admissible root in ``alt_root``. The basic
    sequence is materialized when the reduction is executed.
    """

    kind: str
    root: int
    ground: tuple[int, ...]
    size: int
    alt_root: int | None = None
    backbone: Backbone | None = None

    @property
    def priority(self) -> int:
        return PRIORITY[self.kind]


def _tag(state: GraphState, v: int) -> str:
    d = state.deg[v]
    if d == 0:
        return "0.a"
    if d == 1:
        m = state.live_neighbors(v)[0]
        md = state.deg[m]
        return "1.a" if md == 1 else ("1.b" if md == 2 else "1.c")
    if d == 2:
        m1, m2 = state.live_neighbors(v)
        adjacent = m2 in state.graph.adj[m1]
        hi = (state.deg[m1] >= 3) + (state.deg[m2] >= 3)
        if adjacent:
            return ("2.a", "2.b", "2.c")[hi]
        return ("2.d", "2.e", "2.f")[hi]
    return "3.x"


def classify_basic(state: GraphState, v: int) -> BasicReduction:
    """The basic reduction rooted at ``v``, which must have minimum degree."""
    d = state.degree(v)
    if d != state.min_live_degree():
        raise ContractViolation(f"vertex {v} does not have minimum degree")
    middles = tuple(sorted(state.live_neighbors(v)))
    ground = {v, *middles}
    contacts = []
    for m in middles:
        contacts.extend((m, c) for c in state.live_neighbors(m) if c not in ground)
    return BasicReduction(
        root=v,
        middles=middles,
        contact_edges=tuple(sorted(contacts)),
        degree=d,
        tag=_tag(state, v),
    )


def _walk_degree_two(state: GraphState, v: int):
    """Follow the degree-2 path through ``v``.

    Returns ("cycle", vertices) when the walk closes on itself, otherwise
    ("backbone", Backbone). Raises ContractViolation if the path runs into a
    vertex of degree <= 1 (then ``v`` is not on a backbone).
    """
    if state.degree(v) != 2:
        raise ContractViolation(f"vertex {v} does not have degree 2")
    deg = state.deg

    def extend(start: int) -> tuple[list[int], int]:
        chain = []
        prev, cur = v, start
        while deg[cur] == 2 and cur != v:
            chain.append(cur)
            a, b = state.live_neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        chain.append(cur)
        return chain, cur

    n1, n2 = state.live_neighbors(v)
    left, left_end = extend(n1)
    if left_end == v:
        # Closed walk of degree-2 vertices: a bare cycle component.
        return "cycle", tuple([v] + left[:-1])
    right, right_end = extend(n2)
    for end in (left_end, right_end):
        if deg[end] <= 1:
            raise ContractViolation(
                f"degree-2 path through {v} ends at degree-{deg[end]} vertex {end}"
            )
    internal = tuple(reversed(left[:-1])) + (v,) + tuple(right[:-1])
    return "backbone", Backbone(endpoints=(left_end, right_end), internal=internal)


def find_backbone(state: GraphState, v: int) -> Backbone:
    """Full backbone containing the degree-2 vertex ``v``.

    Raises :class:`PureCycleError` when ``v`` lies on a bare cycle (the
    caller must use a cycle reduction instead).
    """
    kind, payload = _walk_degree_two(state, v)
    if kind == "cycle":
        raise PureCycleError(payload)
    return payload


def _backbone_reductions(b: Backbone) -> list[ExtendedReduction]:
    r1, r2 = b.roots
    if b.is_loop:
        ground = tuple(sorted((b.endpoints[0], *b.internal)))
        return [
            ExtendedReduction(
                kind=LOOP,
                root=min(r1, r2),
                ground=ground,
                size=len(ground) // 2,
                alt_root=max(r1, r2) if r1 != r2 else None,
                backbone=b,
            )
        ]
    if b.parity == "even":
        ground = tuple(sorted((*b.endpoints, *b.internal)))
        return [
            ExtendedReduction(
                kind=EVEN_BACKBONE,
                root=min(r1, r2),
                ground=ground,
                size=(len(b.internal) + 1) // 2,
                alt_root=max(r1, r2) if r1 != r2 else None,
                backbone=b,
            )
        ]
    # Odd backbone: two distinct reductions with distinct grounds; each
    # contains exactly one endpoint (the one next to its root).
    out = []
    for root, endpoint in ((r1, b.endpoints[0]), (r2, b.endpoints[1])):
        ground = tuple(sorted((endpoint, *b.internal)))
        out.append(
            ExtendedReduction(
                kind=ODD_BACKBONE,
                root=root,
                ground=ground,
                size=len(b.internal) // 2,
                backbone=b,
            )
        )
    return out


def enumerate_extended(
    state: GraphState, within: Iterable[int] | None = None
) -> list[ExtendedReduction]:
    """All extended reductions rooted at minimum-degree vertices.

    ``within`` restricts attention to one connected component (the default is
    the whole live graph). Backbones are deduplicated: an even backbone or
    loop yields one entry with two recorded roots, an odd backbone yields two
    distinct entries. Raises :class:`NeedsCubicStart` when the minimum live
    degree is 3.
    """
    verts = sorted(within) if within is not None else sorted(state.live_vertices())
    if not verts:
        return []
    dmin = min(state.deg[v] for v in verts)
    if dmin >= 3:
        raise NeedsCubicStart(f"minimum degree is {dmin}")
    out: list[ExtendedReduction] = []
    if dmin == 0:
        for v in verts:
            if state.deg[v] == 0:
                out.append(ExtendedReduction(kind=POINT, root=v, ground=(v,), size=1))
    elif dmin == 1:
        for v in verts:
            if state.deg[v] != 1:
                continue
            m = state.live_neighbors(v)[0]
            md = state.deg[m]
            if md == 1:
                if v < m:
                    out.append(
                        ExtendedReduction(
                            kind=EDGE,
                            root=v,
                            ground=(v, m),
                            size=1,
                            alt_root=m,
                        )
                    )
            else:
                kind = PATH if md == 2 else BRANCHING
                out.append(
                    ExtendedReduction(
                        kind=kind, root=v, ground=tuple(sorted((v, m))), size=1
                    )
                )
    else:
        seen: set[int] = set()
        for v in verts:
            if state.deg[v] != 2 or v in seen:
                continue
            kind, payload = _walk_degree_two(state, v)
            if kind == "cycle":
                seen.update(payload)
                ground = tuple(sorted(payload))
                out.append(
                    ExtendedReduction(
                        kind=CYCLE,
                        root=min(payload),
                        ground=ground,
                        size=len(ground) // 2,
                    )
                )
            else:
                seen.update(payload.internal)
                out.extend(_backbone_reductions(payload))
    out.sort(key=lambda r: (r.root, r.kind))
    if not out:
        raise ContractViolation("no reduction found at minimum degree")
    return out


def execute_reduction(
    state: GraphState,
    red: ExtendedReduction,
    on_drop: Callable[[int, int], None] | None = None,
) -> list[BasicStep]:
    """Execute an extended reduction basic-by-basic.

    The first basic is rooted at ``red.root``; every later basic is rooted at
    the smallest-id minimum-degree vertex remaining in the ground (which the
    catalogue guarantees has degree <= 1). ``on_drop(u, new_degree)`` fires
    for every degree drop of a still-live vertex. Returns the executed steps.
    """
    ground_set = set(red.ground)
    for u in red.ground:
        if not state.alive[u]:
            raise ContractViolation(f"stale reduction: ground vertex {u} not live")
    steps: list[BasicStep] = []
    remaining = set(ground_set)
    first = True
    while remaining:
        if first:
            r = red.root
            first = False
        else:
            r = min(remaining, key=lambda u: (state.deg[u], u))
            if state.deg[r] > 1:
                raise ContractViolation(
                    f"non-initial basic at {r} would have degree {state.deg[r]}"
                )
        middles = state.live_neighbors(r)
        if any(u not in ground_set for u in middles):
            raise ContractViolation(
                f"live neighborhood of {r} leaves the reduction ground"
            )
        tag = _tag(state, r)
        basic_ground = tuple(sorted((r, *middles)))
        for u in basic_ground:
            for w, d in state.remove_vertex(u):
                if on_drop is not None:
                    on_drop(w, d)
        steps.append(BasicStep(root=r, ground=basic_ground, tag=tag))
        remaining.difference_update(basic_ground)
    return steps
