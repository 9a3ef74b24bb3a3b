"""Minimum-degree greedy framework with pluggable advice, plus the advised
variant with the even-backbone, odd-backbone, and cubic-start rules.

``run_greedy`` is the plain framework: at every step it offers the basic
reductions rooted at minimum-degree vertices to an advice callback and
executes the returned one. ``greedy_star`` is the advised algorithm for
subcubic graphs: it executes whole extended reductions in the priority order

    Point/Edge/Path/Branching  >  Cycle/Loop  >  Even-backbone  >  Odd-backbone

choosing among even-backbones the one whose contracted-graph root is farthest
from a fixed degree-3 anchor, among odd-backbones the one created latest, and
for cubic inputs trying the four starts in the closed neighborhood of the
smallest-id vertex and keeping the largest solution. Connected components are
processed independently, smallest contained id first.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graph import Graph, connected_components
from .reductions import (
    BRANCHING,
    CUBIC,
    CYCLE,
    EDGE,
    EVEN_BACKBONE,
    LOOP,
    ODD_BACKBONE,
    PATH,
    POINT,
    PRIORITY,
    Backbone,
    BasicReduction,
    BasicStep,
    ContractViolation,
    ExtendedReduction,
    GraphState,
    NeedsCubicStart,
    _backbone_reductions,
    _walk_degree_two,
    classify_basic,
    enumerate_extended,
    execute_reduction,
)

__all__ = [
    "DegreeBoundError",
    "AdviceError",
    "ReductionRecord",
    "ExecutionTrace",
    "Advice",
    "run_greedy",
    "more_edges_advice",
    "greedy_star",
    "run_components",
    "select_even_backbone",
    "select_odd_backbone",
    "verify_trace",
]


class DegreeBoundError(ValueError):
    """Input graph exceeds the degree bound required by the algorithm."""


class AdviceError(ValueError):
    """An advice callback returned a reduction that was not a candidate."""


@dataclass(frozen=True)
class ReductionRecord:
    """One executed (extended) reduction of a trace."""

    kind: str
    basics: tuple[BasicStep, ...]
    component: int
    step: int

    @property
    def root(self) -> int:
        return self.basics[0].root

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(b.root for b in self.basics)

    @property
    def ground(self) -> tuple[int, ...]:
        out: list[int] = []
        for b in self.basics:
            out.extend(b.ground)
        return tuple(sorted(out))

    @property
    def size(self) -> int:
        return len(self.basics)


@dataclass(frozen=True)
class ExecutionTrace:
    """Ordered reductions of one greedy run, with the solution it built.

    ``creation_time[v]`` is the 1-based index of the reduction whose execution
    dropped ``v`` to degree two, or 0 if ``v`` started at degree <= 2.
    """

    graph: Graph
    records: tuple[ReductionRecord, ...]
    solution: tuple[int, ...]
    creation_time: tuple[int, ...]
    algorithm: str

    @property
    def size(self) -> int:
        return len(self.solution)

    def solution_set(self) -> frozenset[int]:
        return frozenset(self.solution)


Advice = Callable[
    [GraphState, Sequence[ReductionRecord], Sequence[BasicReduction]],
    BasicReduction,
]


def run_greedy(g: Graph, advice: Advice | None = None) -> ExecutionTrace:
    """Basic minimum-degree greedy. At each step the candidates are the basic
    reductions rooted at minimum-degree vertices; ``advice`` picks one
    (default: smallest root id). Deterministic for a fixed advice."""
    state = GraphState(g)
    ctime = [0] * g.n
    records: list[ReductionRecord] = []
    solution: list[int] = []
    while state.live_count:
        dmin = state.min_live_degree()
        candidates = [
            classify_basic(state, v)
            for v in state.live_vertices()
            if state.deg[v] == dmin
        ]
        if advice is None:
            choice = candidates[0]
        else:
            choice = advice(state, records, candidates)
            if choice not in candidates:
                raise AdviceError(f"advice returned non-candidate {choice!r}")
        step = len(records) + 1
        ground = choice.ground
        for u in ground:
            for w, d in state.remove_vertex(u):
                if d == 2:
                    ctime[w] = step
        records.append(
            ReductionRecord(
                kind=choice.tag,
                basics=(BasicStep(root=choice.root, ground=ground, tag=choice.tag),),
                component=0,
                step=step,
            )
        )
        solution.append(choice.root)
    return ExecutionTrace(
        graph=g,
        records=tuple(records),
        solution=tuple(solution),
        creation_time=tuple(ctime),
        algorithm="greedy" if advice is None else "greedy+advice",
    )


def more_edges_advice() -> Advice:
    """Prefer a degree-2 root with a degree-3 neighbor, ties by smallest root.

    This is the classic advice that lifts the plain greedy from 5/3 to 3/2 on
    subcubic graphs; on other minimum degrees it falls back to smallest id.
    """

    def advice(state, records, candidates):
        if candidates[0].degree == 2:
            for c in candidates:
                if any(state.deg[m] >= 3 for m in c.middles):
                    return c
        return candidates[0]

    return advice


# ---------------------------------------------------------------------------
# Greedy-star
# ---------------------------------------------------------------------------


class _Task:
    """One connected component being processed, with degree buckets."""

    __slots__ = ("tid", "comp", "heaps", "deg2")

    def __init__(self, tid: int, comp: set[int], state: GraphState):
        self.tid = tid
        self.comp = comp
        self.heaps: list[list[int]] = [[], [], []]
        self.deg2: set[int] = set()
        deg = state.deg
        for v in comp:
            d = deg[v]
            if d <= 2:
                self.heaps[d].append(v)
                if d == 2:
                    self.deg2.add(v)
        for h in self.heaps:
            heapq.heapify(h)


def _select_even_backbone(
    state: GraphState, comp: set[int], evens: list[ExtendedReduction]
) -> ExtendedReduction:
    """Even-backbone rule: contract every candidate backbone to one vertex,
    take shortest-path distances from the smallest-id degree-3 anchor, and
    pick the candidate at maximum distance (ties by smallest root id)."""
    if len(evens) == 1:
        return evens[0]
    deg = state.deg
    anchor = min(v for v in comp if deg[v] == 3)
    blob: dict[int, int] = {}
    for idx, red in enumerate(evens):
        for u in red.backbone.internal:
            blob[u] = idx
    n_blobs = len(evens)

    def node_of(v: int) -> tuple[int, int]:
        b = blob.get(v)
        return (1, b) if b is not None else (0, v)

    dist: dict[tuple[int, int], int] = {node_of(anchor): 0}
    queue = deque([node_of(anchor)])
    # Adjacency of the contracted graph, expanded on the fly.
    members: dict[int, list[int]] = {}
    for u, b in blob.items():
        members.setdefault(b, []).append(u)
    alive = state.alive
    while queue:
        node = queue.popleft()
        verts = [node[1]] if node[0] == 0 else members[node[1]]
        for u in verts:
            for w in state.graph.adj[u]:
                if not alive[w] or w not in comp:
                    continue
                nw = node_of(w)
                if nw not in dist:
                    dist[nw] = dist[node] + 1
                    queue.append(nw)
    best = max(
        enumerate(evens), key=lambda pair: (dist[(1, pair[0])], -pair[1].root)
    )
    return best[1]


def check_even_backbone_property(
    state: GraphState, chosen: ExtendedReduction, evens: list[ExtendedReduction]
) -> bool:
    """Post-hoc validator for the even-backbone rule: after executing the
    chosen reduction, any two other candidate roots that land in different
    created components force one of the four roots to be a contact vertex."""
    sandbox = state.clone()
    dropped: list[int] = []
    execute_reduction(sandbox, chosen, on_drop=lambda u, d: dropped.append(u))
    contacts = {u for u in dropped if sandbox.alive[u]}
    comp_of: dict[int, int] = {}
    label = 0
    for u in sorted(contacts):
        if u in comp_of:
            continue
        for w in sandbox.component_of(u):
            comp_of[w] = label
        label += 1
    ground = set(chosen.ground)
    others = [r for r in evens if r is not chosen]
    for i, ri in enumerate(others):
        for rj in others[i + 1 :]:
            ri_roots = {ri.root} | ({ri.alt_root} if ri.alt_root is not None else set())
            rj_roots = {rj.root} | ({rj.alt_root} if rj.alt_root is not None else set())
            ci = {comp_of.get(r) for r in ri_roots if r not in ground}
            cj = {comp_of.get(r) for r in rj_roots if r not in ground}
            if not ci or not cj:
                continue
            if ci & cj:
                continue
            if not ((ri_roots | rj_roots) & contacts):
                return False
    return True


def _backbone_ctime(b: Backbone, ctime: list[int]) -> int:
    return max(ctime[u] for u in b.internal)


def select_even_backbone(
    state: GraphState, within: Iterable[int] | None = None
) -> ExtendedReduction:
    """Public even-backbone selector. The priority reduction in the given
    (connected) component must be an even-backbone."""
    comp = set(within) if within is not None else set(state.live_vertices())
    cands = enumerate_extended(state, comp)
    top = min(r.priority for r in cands)
    if top != PRIORITY[EVEN_BACKBONE]:
        raise ContractViolation("priority reduction is not an even-backbone")
    evens = [r for r in cands if r.kind == EVEN_BACKBONE]
    return _select_even_backbone(state, comp, evens)


def select_odd_backbone(
    state: GraphState,
    creation_time: Sequence[int],
    within: Iterable[int] | None = None,
) -> ExtendedReduction:
    """Public odd-backbone selector: latest-created backbone wins (backbone
    creation time = greatest creation time of its degree-2 vertices), ties by
    smallest root id."""
    comp = set(within) if within is not None else set(state.live_vertices())
    cands = enumerate_extended(state, comp)
    top = min(r.priority for r in cands)
    if top != PRIORITY[ODD_BACKBONE]:
        raise ContractViolation("priority reduction is not an odd-backbone")
    odds = [r for r in cands if r.kind == ODD_BACKBONE]
    ct = list(creation_time)
    return min(odds, key=lambda r: (-_backbone_ctime(r.backbone, ct), r.root))


class _StarEngine:
    def __init__(self, state: GraphState, ctime: list[int], validate: bool):
        self.state = state
        self.ctime = ctime
        self.validate = validate
        self.records: list[ReductionRecord] = []
        self.solution: list[int] = []
        self.stack: list[_Task] = []
        self.next_tid = 0

    def new_task(self, comp: set[int]) -> _Task:
        t = _Task(self.next_tid, comp, self.state)
        self.next_tid += 1
        return t

    def push_components(self, comps: list[set[int]]) -> None:
        tasks = [self.new_task(c) for c in sorted(comps, key=min)]
        self.stack.extend(reversed(tasks))

    def drain(self) -> None:
        while self.stack:
            self.process(self.stack.pop())

    # -- degree bookkeeping -------------------------------------------------

    def _peek_min(self, task: _Task) -> tuple[int, int] | None:
        state = self.state
        for d in range(3):
            h = task.heaps[d]
            while h:
                v = h[0]
                if state.alive[v] and v in task.comp and state.deg[v] == d:
                    return d, v
                heapq.heappop(h)
        return None

    def _on_drop(self, task: _Task, step: int):
        heaps = task.heaps
        deg2 = task.deg2
        ctime = self.ctime

        def hook(u: int, d: int) -> None:
            if d <= 2:
                heapq.heappush(heaps[d], u)
                if d == 2:
                    deg2.add(u)
                    ctime[u] = step

        return hook

    # -- reduction choice ---------------------------------------------------

    def _classify_degree_two(self, task: _Task):
        """Walk all degree-2 vertices of the component, grouping them into a
        bare cycle or into backbone reductions."""
        state = self.state
        visited: set[int] = set()
        loops: list[ExtendedReduction] = []
        evens: list[ExtendedReduction] = []
        odds: list[ExtendedReduction] = []
        for v in sorted(task.deg2):
            if not (state.alive[v] and v in task.comp and state.deg[v] == 2):
                continue
            if v in visited:
                continue
            kind, payload = _walk_degree_two(state, v)
            if kind == "cycle":
                return ExtendedReduction(
                    kind=CYCLE,
                    root=min(payload),
                    ground=tuple(sorted(payload)),
                    size=len(payload) // 2,
                ), None
            visited.update(payload.internal)
            for red in _backbone_reductions(payload):
                {LOOP: loops, EVEN_BACKBONE: evens, ODD_BACKBONE: odds}[
                    red.kind
                ].append(red)
        task.deg2 = {
            v
            for v in task.deg2
            if state.alive[v] and v in task.comp and state.deg[v] == 2
        }
        if loops:
            return min(loops, key=lambda r: r.root), None
        if evens:
            chosen = _select_even_backbone(state, task.comp, evens)
            if self.validate and not check_even_backbone_property(
                state, chosen, evens
            ):
                raise ContractViolation(
                    "even-backbone rule selected a reduction violating its"
                    " component property"
                )
            return chosen, None
        chosen = min(
            odds, key=lambda r: (-_backbone_ctime(r.backbone, self.ctime), r.root)
        )
        return chosen, None

    def _choose(self, task: _Task, d: int, v: int) -> ExtendedReduction:
        state = self.state
        if d == 0:
            return ExtendedReduction(kind=POINT, root=v, ground=(v,), size=1)
        if d == 1:
            m = state.live_neighbors(v)[0]
            md = state.deg[m]
            kind = EDGE if md == 1 else (PATH if md == 2 else BRANCHING)
            return ExtendedReduction(
                kind=kind,
                root=v,
                ground=tuple(sorted((v, m))),
                size=1,
                alt_root=m if md == 1 else None,
            )
        red, _ = self._classify_degree_two(task)
        return red

    # -- execution ----------------------------------------------------------

    def _execute(self, task: _Task, red: ExtendedReduction) -> set[int]:
        step = len(self.records) + 1
        dropped: list[int] = []
        hook = self._on_drop(task, step)

        def on_drop(u: int, dnew: int) -> None:
            hook(u, dnew)
            dropped.append(u)

        basics = execute_reduction(self.state, red, on_drop=on_drop)
        task.comp.difference_update(red.ground)
        self.records.append(
            ReductionRecord(
                kind=red.kind,
                basics=tuple(basics),
                component=task.tid,
                step=step,
            )
        )
        self.solution.extend(b.root for b in basics)
        return {u for u in dropped if self.state.alive[u]}

    def _split(self, task: _Task, contacts: set[int]) -> None:
        """After a reduction, carve finished components off ``task.comp`` and
        push everything in smallest-id-first processing order."""
        parts = _split_components(self.state, task.comp, sorted(contacts))
        if not parts and task.comp:
            self.stack.append(task)
            return
        children = [self.new_task(p) for p in parts]
        if task.comp:
            children.append(task)
        children.sort(key=lambda t: min(t.comp))
        self.stack.extend(reversed(children))

    def process(self, task: _Task) -> None:
        state = self.state
        while task.comp:
            found = self._peek_min(task)
            if found is None:
                self._cubic_start(task)
                return
            d, v = found
            red = self._choose(task, d, v)
            contacts = self._execute(task, red)
            if len(contacts) >= 2 and task.comp:
                self._split(task, contacts)
                return

    # -- cubic rule ---------------------------------------------------------

    def _cubic_start(self, task: _Task) -> None:
        state = self.state
        u = min(task.comp)
        starts = [u] + sorted(state.live_neighbors(u))
        best_v = None
        best_size = -1
        for v in starts:
            sandbox = _StarEngine(state.clone(), list(self.ctime), validate=False)
            sandbox._apply_start(set(task.comp), v)
            sandbox.drain()
            if len(sandbox.solution) > best_size:
                best_size = len(sandbox.solution)
                best_v = v
        self._apply_start(task.comp, best_v)

    def _apply_start(self, comp: set[int], v: int) -> None:
        """Execute the degree-3 opening reduction at ``v`` and enqueue the
        created components."""
        state = self.state
        ground = tuple(sorted((v, *state.live_neighbors(v))))
        red = ExtendedReduction(kind=CUBIC, root=v, ground=ground, size=1)
        task = self.new_task(comp)
        contacts = self._execute(task, red)
        if task.comp:
            self._split(task, contacts)


def _split_components(
    state: GraphState, comp: set[int], seeds: list[int]
) -> list[set[int]]:
    """Round-robin BFS from the seed vertices inside ``comp``; every BFS that
    finishes is a whole component and is removed from ``comp``. The last
    unfinished BFS is abandoned, leaving its component in ``comp``. The cost
    is proportional to the sizes of the *finished* (smaller) parts."""
    seeds = [s for s in seeds if state.alive[s] and s in comp]
    if len(seeds) <= 1:
        return []
    parent = {s: s for s in seeds}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    owner: dict[int, int] = {s: s for s in seeds}
    frontier: dict[int, deque[int]] = {s: deque([s]) for s in seeds}
    vertices: dict[int, list[int]] = {s: [s] for s in seeds}
    active = set(seeds)
    finished: list[int] = []
    alive = state.alive
    adj = state.graph.adj
    while len(active) > 1:
        for root in sorted(active):
            if root not in active or find(root) != root:
                active.discard(root)
                continue
            q = frontier[root]
            advanced = False
            while q and not advanced:
                x = q.popleft()
                for w in adj[x]:
                    if not alive[w] or w not in comp:
                        continue
                    if w in owner:
                        other = find(owner[w])
                        if other != root:
                            # Two searches met: same component, merge them.
                            parent[other] = root
                            frontier[root].extend(frontier[other])
                            vertices[root].extend(vertices[other])
                            active.discard(other)
                    else:
                        owner[w] = root
                        q.append(w)
                        vertices[root].append(w)
                advanced = True
            if not q:
                active.discard(root)
                finished.append(root)
            if len(active) <= 1:
                break
    parts = []
    for root in finished:
        part = set(vertices[root])
        comp.difference_update(part)
        parts.append(part)
    return parts


def greedy_star(g: Graph, validate: bool = False) -> ExecutionTrace:
    """Advised greedy for subcubic graphs (priority order, even-backbone and
    odd-backbone rules, four-start rule on cubic components).

    ``validate`` additionally asserts the even-backbone rule's component
    property after every invocation of the rule (used by the test suite).
    """
    if not g.is_subcubic():
        raise DegreeBoundError(f"maximum degree {g.max_degree()} > 3")
    state = GraphState(g)
    ctime = [0] * g.n
    engine = _StarEngine(state, ctime, validate)
    engine.push_components([set(c) for c in connected_components(g)])
    engine.drain()
    return ExecutionTrace(
        graph=g,
        records=tuple(engine.records),
        solution=tuple(engine.solution),
        creation_time=tuple(ctime),
        algorithm="greedy-star",
    )


def run_components(
    g: Graph, algo: Callable[[Graph], ExecutionTrace]
) -> ExecutionTrace:
    """Run ``algo`` independently on every connected component (smallest-id
    order) and concatenate the traces back in the original labelling."""
    from .graph import induced_subgraph

    records: list[ReductionRecord] = []
    solution: list[int] = []
    ctime = [0] * g.n
    for comp in connected_components(g):
        sub, old_ids = induced_subgraph(g, comp)
        trace = algo(sub)
        base_step = len(records)
        for rec in trace.records:
            records.append(
                ReductionRecord(
                    kind=rec.kind,
                    basics=tuple(
                        BasicStep(
                            root=old_ids[b.root],
                            ground=tuple(sorted(old_ids[u] for u in b.ground)),
                            tag=b.tag,
                        )
                        for b in rec.basics
                    ),
                    component=rec.component,
                    step=base_step + rec.step,
                )
            )
        solution.extend(old_ids[v] for v in trace.solution)
        for new_v, t in enumerate(trace.creation_time):
            if t:
                ctime[old_ids[new_v]] = base_step + t
    return ExecutionTrace(
        graph=g,
        records=tuple(records),
        solution=tuple(solution),
        creation_time=tuple(ctime),
        algorithm=f"per-component",
    )


def verify_trace(trace: ExecutionTrace, check_priority: bool = False) -> None:
    """Replay a trace and assert greedy-rule compliance: every basic root has
    minimum degree within its connected component at execution time, grounds
    match live closed neighborhoods, and (optionally) no strictly higher
    priority extended reduction existed. Raises ContractViolation on failure.
    """
    from .graph import is_maximal_independent_set

    state = GraphState(trace.graph)
    for rec in trace.records:
        if check_priority and rec.kind in PRIORITY:
            comp = state.component_of(rec.root)
            cands = enumerate_extended(state, comp)
            best = min(r.priority for r in cands)
            if PRIORITY[rec.kind] > best:
                raise ContractViolation(
                    f"step {rec.step}: executed {rec.kind} while priority"
                    f" {best} reduction was available"
                )
        for idx, b in enumerate(rec.basics):
            comp = state.component_of(b.root)
            dmin = min(state.deg[u] for u in comp)
            if state.deg[b.root] != dmin and not (idx == 0 and rec.kind == CUBIC):
                raise ContractViolation(
                    f"step {rec.step}: basic root {b.root} has degree"
                    f" {state.deg[b.root]} but component minimum is {dmin}"
                )
            expected = tuple(sorted((b.root, *state.live_neighbors(b.root))))
            if expected != b.ground:
                raise ContractViolation(
                    f"step {rec.step}: recorded ground {b.ground} does not"
                    f" match live neighborhood {expected}"
                )
            for u in b.ground:
                state.remove_vertex(u)
    if state.live_count:
        raise ContractViolation("trace does not consume the whole graph")
    if not is_maximal_independent_set(trace.graph, trace.solution):
        raise ContractViolation("trace solution is not a maximal independent set")
