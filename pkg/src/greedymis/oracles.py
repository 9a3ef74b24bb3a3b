"""Exact ground truth at desk scale: maximum independent set, minimum vertex
cover, and the maximum-size greedy set.

``exact_mis`` is a branch-and-bound with forced low-degree picks, component
splitting, and memoization; it is comfortable on sparse graphs well past the
default 30-vertex budget. ``max_greedy`` exhausts every minimum-degree choice
sequence (the space of *all* greedy executions, basic steps, any advice),
memoized per connected component; components can be solved independently
because an interleaved execution is valid exactly when its per-component
subsequences are.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph

__all__ = [
    "OracleBudget",
    "BudgetExceededError",
    "exact_mis",
    "exact_mvc",
    "max_greedy",
]


@dataclass(frozen=True)
class OracleBudget:
    """Resource caps for the exact solvers."""

    max_vertices: int = 30
    max_nodes: int = 5_000_000

    def check_size(self, n: int) -> None:
        if n > self.max_vertices:
            raise BudgetExceededError(
                f"graph has {n} vertices, budget allows {self.max_vertices}"
            )


class BudgetExceededError(RuntimeError):
    """Oracle budget exhausted; carries the best bound found so far."""

    def __init__(self, message: str, best: int | None = None):
        super().__init__(message)
        self.best = best


DEFAULT_BUDGET = OracleBudget()
_MG_BUDGET = OracleBudget(max_vertices=22, max_nodes=2_000_000)


def _components(adj: list[tuple[int, ...]], live: frozenset[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    out = []
    for s in live:
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        seen.add(s)
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w in live and w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        out.append(frozenset(comp))
    return out


class _MisSolver:
    def __init__(self, g: Graph, budget: OracleBudget):
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        self.memo: dict[frozenset[int], tuple[int, tuple[int, ...]]] = {}
        self.best_seen = 0

    def solve(self, live: frozenset[int]) -> tuple[int, tuple[int, ...]]:
        if not live:
            return 0, ()
        hit = self.memo.get(live)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(
                f"exceeded {self.budget.max_nodes} branch nodes", self.best_seen
            )
        adj = self.adj
        # Forced moves: a vertex of live degree <= 1 is in some maximum
        # independent set, so take it outright.
        forced: list[int] = []
        live_set = set(live)
        changed = True
        while changed:
            changed = False
            for v in live_set:
                d = sum(1 for u in adj[v] if u in live_set)
                if d <= 1:
                    forced.append(v)
                    live_set.discard(v)
                    for u in adj[v]:
                        live_set.discard(u)
                    changed = True
                    break
        if forced:
            sub_size, sub_wit = self.solve(frozenset(live_set)) if live_set else (0, ())
            result = (len(forced) + sub_size, tuple(forced) + sub_wit)
            self.memo[live] = result
            self.best_seen = max(self.best_seen, result[0])
            return result
        comps = _components(adj, live)
        if len(comps) > 1:
            total = 0
            wit: list[int] = []
            for comp in comps:
                s, w = self.solve(comp)
                total += s
                wit.extend(w)
            result = (total, tuple(wit))
            self.memo[live] = result
            return result
        # Branch on a maximum-degree vertex: out, or in.
        v = max(live, key=lambda u: (sum(1 for w in adj[u] if w in live), -u))
        out_live = frozenset(live - {v})
        s_out, w_out = self.solve(out_live)
        in_live = frozenset(live - {v} - set(adj[v]))
        s_in, w_in = self.solve(in_live)
        if s_in + 1 >= s_out:
            result = (s_in + 1, (v,) + w_in)
        else:
            result = (s_out, w_out)
        self.memo[live] = result
        self.best_seen = max(self.best_seen, result[0])
        return result


def exact_mis(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with a witness set."""
    budget.check_size(g.n)
    solver = _MisSolver(g, budget)
    size, wit = solver.solve(frozenset(range(g.n)))
    return size, tuple(sorted(wit))


def exact_mvc(
    g: Graph, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exact minimum vertex cover: n - alpha with the complement witness."""
    size, wit = exact_mis(g, budget)
    cover = tuple(sorted(set(range(g.n)) - set(wit)))
    return g.n - size, cover


class _MaxGreedySolver:
    def __init__(self, g: Graph, budget: OracleBudget):
        self.adj = g.adj
        self.budget = budget
        self.nodes = 0
        # component -> (best size, best first pick)
        self.memo: dict[frozenset[int], tuple[int, int]] = {}

    def solve(self, live: frozenset[int]) -> int:
        """Maximum greedy-set size over one connected live set."""
        if not live:
            return 0
        hit = self.memo.get(live)
        if hit is not None:
            return hit[0]
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise BudgetExceededError(f"exceeded {self.budget.max_nodes} branch nodes")
        adj = self.adj
        deg = {v: sum(1 for u in adj[v] if u in live) for v in live}
        dmin = min(deg.values())
        best = -1
        best_pick = -1
        seen_children: set[frozenset[int]] = set()
        for v in sorted(u for u in live if deg[u] == dmin):
            child = live - {v} - set(adj[v])
            key = frozenset(child)
            if key in seen_children:
                continue
            seen_children.add(key)
            total = 1
            for comp in _components(adj, key):
                total += self.solve(comp)
            if total > best:
                best = total
                best_pick = v
        self.memo[live] = (best, best_pick)
        return best

    def witness(self, live: frozenset[int]) -> list[int]:
        """Reconstruct one optimal greedy order for ``live`` (one component)."""
        if not live:
            return []
        _, pick = self.memo[live]
        child = live - {pick} - set(self.adj[pick])
        order = [pick]
        for comp in _components(self.adj, frozenset(child)):
            self.solve(comp)
            order.extend(self.witness(comp))
        return order


def max_greedy(
    g: Graph, budget: OracleBudget = _MG_BUDGET
) -> tuple[int, tuple[int, ...]]:
    """Exact maximum-size greedy set with a witnessing pick order.

    The witness lists the roots in an order that is a valid greedy execution
    when each component's subsequence is played within its component (the
    interleaving across components is then always realizable).
    """
    budget.check_size(g.n)
    solver = _MaxGreedySolver(g, budget)
    total = 0
    order: list[int] = []
    for comp in _components(g.adj, frozenset(range(g.n))):
        total += solver.solve(comp)
        order.extend(solver.witness(comp))
    return total, tuple(order)
