"""Deterministic generators for every worst-case instance family used in the
analysis, plus seeded random graphs for the verification sweeps.

Families:

* ``gen_hy`` -- the recursive subcubic family H_i: a degree-2 top vertex over
  two degree-3 vertices whose four downward edges enter four copies of
  H_{i-1} at their top vertices. The base ``h0`` hangs the four edges into a
  7-cycle (recursive top-picking trends to ratio 17/13); the base ``h0p`` is
  the forced family (exactly one degree-2 vertex at every stage), on which
  every greedy finds precisely (4*alpha + 1)/5 vertices.
* ``gen_delta_chain`` -- chains of cliques and independent sets showing that
  any greedy stalls at one pick per clique while the optimum takes all
  independent-set vertices; one construction per residue of Delta mod 3.
* ``gen_hard_general`` / ``gen_hard_bipartite`` -- rooted graphs with a
  unique greedy execution whose ratio is the worst possible; removing the
  root lets the plain greedy reach the optimum.
* ``gadget_planar_cubic`` -- replaces every edge of a cubic planar graph by a
  22-vertex cubic gadget so that alpha grows by exactly 9 per edge.
* ``normalize_sat`` / ``gen_sat_anchor`` -- the satisfiability anchor: greedy
  first chooses a valuation on the literal vertices, then clause gadgets
  resolve so that the hard graph's root is avoided iff the formula is
  satisfiable.
* ``gen_random`` -- seeded random subcubic / bounded-degree / triangle-free /
  cubic graphs (Mersenne-Twister via ``random.Random(seed)``, platform
  stable).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from random import Random
from typing import Iterable, Sequence

from .graph import Graph, write_dimacs
from .greedy import greedy_star

__all__ = [
    "gen_hy",
    "hy_alpha",
    "hy_greedy_size",
    "gen_delta_chain",
    "delta_chain_counts",
    "gen_hard_general",
    "gen_hard_bipartite",
    "EDGE_GADGET_SIZE",
    "EDGE_GADGET_ALPHA",
    "edge_gadget",
    "gadget_planar_cubic",
    "CnfFormula",
    "normalize_sat",
    "is_satisfiable",
    "AnchorInfo",
    "gen_sat_anchor",
    "gen_random",
    "instance_sidecar",
    "write_instance",
]


# ---------------------------------------------------------------------------
# The recursive H_i family
# ---------------------------------------------------------------------------

_H0_SIZE = 10
_H0P_SIZE = 15


def _base_h0(offset: int) -> list[tuple[int, int]]:
    # top t, branch vertices a, b, then a 7-cycle; a and b each send two
    # edges to alternating cycle vertices.
    t, a, b = offset, offset + 1, offset + 2
    c = [offset + 3 + i for i in range(7)]
    edges = [(t, a), (t, b)]
    edges += [(c[i], c[(i + 1) % 7]) for i in range(7)]
    edges += [(a, c[0]), (a, c[2]), (b, c[4]), (b, c[6])]
    return edges


def _base_h0p(offset: int) -> list[tuple[int, int]]:
    # top t, branch vertices a, b, and four triangles; each branch vertex
    # feeds two triangle apexes, and the triangles pair up through a
    # two-edge matching so that every vertex except t has degree three.
    t, a, b = offset, offset + 1, offset + 2
    edges = [(t, a), (t, b)]
    tri = []
    base = offset + 3
    for k in range(4):
        u, v, w = base + 3 * k, base + 3 * k + 1, base + 3 * k + 2
        tri.append((u, v, w))
        edges += [(u, v), (v, w), (u, w)]
    edges += [(a, tri[0][0]), (a, tri[1][0]), (b, tri[2][0]), (b, tri[3][0])]
    for left, right in ((tri[0], tri[1]), (tri[2], tri[3])):
        edges += [(left[1], right[1]), (left[2], right[2])]
    return edges


def _hy_edges(i: int, base: str, offset: int) -> tuple[list[tuple[int, int]], int]:
    if i == 0:
        if base == "h0":
            return _base_h0(offset), _H0_SIZE
        return _base_h0p(offset), _H0P_SIZE
    child_edges, child_size = _hy_edges(i - 1, base, 0)
    t, a, b = offset, offset + 1, offset + 2
    edges = [(t, a), (t, b)]
    tops = []
    for k in range(4):
        off = offset + 3 + k * child_size
        edges += [(u + off, v + off) for u, v in child_edges]
        tops.append(off)
    edges += [(a, tops[0]), (a, tops[1]), (b, tops[2]), (b, tops[3])]
    return edges, 3 + 4 * child_size


def hy_size(i: int, base: str = "h0p") -> int:
    s = _H0_SIZE if base == "h0" else _H0P_SIZE
    for _ in range(i):
        s = 3 + 4 * s
    return s


def hy_alpha(i: int, base: str = "h0p") -> int:
    """Closed-form independence number (alpha_{i+1} = 4*alpha_i + 2)."""
    a = 5 if base == "h0" else 6
    for _ in range(i):
        a = 4 * a + 2
    return a


def hy_greedy_size(i: int, base: str = "h0p") -> int:
    """Closed-form greedy solution size: for h0p every greedy execution, for
    h0 the execution that keeps picking the top vertex."""
    s = 4 if base == "h0" else 5
    for _ in range(i):
        s = 4 * s + 1
    return s


def gen_hy(i: int, base: str = "h0p", validate: bool = True) -> Graph:
    """The recursive family with the chosen base (``h0`` or ``h0p``).

    Vertex layout: 0 = top, 1, 2 = branch vertices, then the four child
    copies as consecutive blocks attached at their own top vertices.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    if base not in ("h0", "h0p"):
        raise ValueError(f"unknown base {base!r}")
    edges, n = _hy_edges(i, base, 0)
    g = Graph.from_edges(n, edges)
    if validate:
        _validate_hy(g, i, base)
    return g


def _validate_hy(g: Graph, i: int, base: str) -> None:
    degs = g.degrees()
    if base == "h0p":
        if sum(1 for d in degs if d == 2) != 1 or degs[0] != 2:
            raise AssertionError("h0p family must have exactly one degree-2 vertex")
        # Tightness identity: every greedy finds (4*alpha + 1)/5 vertices.
        if i <= 2:
            sol = greedy_star(g).size
            if 5 * sol != 4 * hy_alpha(i, base) + 1:
                raise AssertionError(
                    f"h0p tightness identity failed at i={i}: size {sol}"
                )
    if i >= 1:
        # Removing the top reduction's ground must leave four blocks that are
        # exact copies of the previous stage.
        child = hy_size(i - 1, base)
        child_edges = set(map(tuple, map(sorted, _hy_edges(i - 1, base, 0)[0])))
        for k in range(4):
            off = 3 + k * child
            block = set()
            for u, v in g.edges():
                if off <= u < off + child and off <= v < off + child:
                    block.add((u - off, v - off))
            extra = [
                (u, v)
                for u, v in g.edges()
                if (off <= u < off + child) != (off <= v < off + child)
            ]
            if block != child_edges or len(extra) != 1:
                raise AssertionError("recursive block structure broken")


# ---------------------------------------------------------------------------
# Bounded-degree chains (one construction per residue of Delta mod 3)
# ---------------------------------------------------------------------------


class _Builder:
    def __init__(self) -> None:
        self.edges: list[tuple[int, int]] = []
        self.n = 0

    def block(self, size: int, clique: bool) -> list[int]:
        ids = list(range(self.n, self.n + size))
        self.n += size
        if clique:
            self.edges.extend(combinations(ids, 2))
        return ids

    def join(self, left: Sequence[int], right: Sequence[int]) -> None:
        self.edges.extend(product(left, right))

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def delta_chain_counts(delta: int, groups: int) -> tuple[int, int]:
    """(greedy size, independence number) of ``gen_delta_chain(delta, groups)``."""
    if delta % 3 == 2:
        ell = (delta + 1) // 3
        return groups, (groups - 1) * ell
    if delta % 3 == 1:
        ell = (delta + 2) // 3
        return 3 * groups + 1, groups * (3 * ell - 1)
    ell = delta // 3
    return 3 * groups + 1, groups * (3 * ell + 1)


def gen_delta_chain(delta: int, groups: int) -> Graph:
    """Chain of cliques and independent sets on which every greedy execution
    picks exactly one vertex per clique while the optimum takes every
    independent-set vertex.

    Residue Delta = 2 (mod 3): cliques and independent sets of size
    ell = (Delta+1)/3 alternate, completely joined along the chain, ending
    with a clique; ``groups`` counts the cliques. For the other residues the
    chain is built from six-block groups (``groups`` of them) followed by a
    final clique, with the matchings routed so the first clique of the first
    group is the unique minimum-degree block throughout.
    """
    if delta < 5:
        raise ValueError("construction needs delta >= 5")
    if groups < 1:
        raise ValueError("groups must be positive")
    b = _Builder()
    if delta % 3 == 2:
        if groups < 2:
            raise ValueError("residue-2 chain needs at least 2 groups")
        ell = (delta + 1) // 3
        prev = b.block(ell, clique=True)
        for _ in range(groups - 1):
            ind = b.block(ell, clique=False)
            b.join(prev, ind)
            nxt = b.block(ell, clique=True)
            b.join(ind, nxt)
            prev = nxt
        return b.graph()
    if delta % 3 == 1:
        ell = (delta + 2) // 3
        if groups > ell * (ell - 1) + 1:
            raise ValueError(f"residue-1 chain supports at most {ell*(ell-1)+1} groups")
        sizes = [ell - 1, ell, ell - 1, ell, ell, ell - 1]
        extra_per_group = 1  # one unmatched vertex in each first independent set
    else:
        ell = delta // 3
        if groups > (ell * ell + 1) // 2:
            raise ValueError(f"residue-0 chain supports at most {(ell*ell+1)//2} groups")
        sizes = [ell - 1, ell + 1, ell, ell, ell, ell]
        extra_per_group = 2

    final = list(range(groups * sum(sizes), groups * sum(sizes) + ell))
    fan_out: list[int] = []  # edges routed to the final clique, round-robin
    prev_i1: list[int] | None = None
    prev_i3: list[int] | None = None
    prev_block: list[int] | None = None
    for _ in range(groups):
        c1 = b.block(sizes[0], clique=True)
        i1 = b.block(sizes[1], clique=False)
        c2 = b.block(sizes[2], clique=True)
        i2 = b.block(sizes[3], clique=False)
        c3 = b.block(sizes[4], clique=True)
        i3 = b.block(sizes[5], clique=False)
        for left, right in ((c1, i1), (i1, c2), (c2, i2), (i2, c3), (c3, i3)):
            b.join(left, right)
        if prev_block is not None:
            b.join(prev_block, c1)
        if prev_i1 is not None:
            b.edges.extend(zip(prev_i1, c1))  # matching: |c1| edges
            fan_out.extend(prev_i1[len(c1) :])
        if prev_i3 is not None and delta % 3 == 0:
            b.edges.extend(zip(prev_i3, c3))
        prev_block, prev_i1, prev_i3 = i3, i1, i3
    fb = b.block(ell, clique=True)
    assert fb == final
    b.join(prev_block, fb)
    fan_out.extend(prev_i1)  # last group's whole first independent set
    for idx, v in enumerate(fan_out):
        b.edges.append((v, fb[idx % ell]))
    g = b.graph()
    if g.max_degree() > delta:
        raise AssertionError("chain construction exceeded the degree bound")
    return g


# ---------------------------------------------------------------------------
# Rooted hard graphs
# ---------------------------------------------------------------------------


def gen_hard_general(k: int) -> Graph:
    """Root r (vertex 0) joined to x_1..x_k, each x_i joined to the whole
    k-clique. The unique minimum-degree vertex is always r, so greedy takes r
    and one clique vertex, while {x_1..x_k} is the optimum (ratio k/2)."""
    if k < 2:
        raise ValueError("k must be at least 2")
    xs = list(range(1, k + 1))
    clique = list(range(k + 1, 2 * k + 1))
    edges = [(0, x) for x in xs]
    edges += [(x, y) for x in xs for y in clique]
    edges += list(combinations(clique, 2))
    return Graph.from_edges(2 * k + 1, edges)


def gen_hard_bipartite(n_groups: int, k: int) -> Graph:
    """Bipartite hard graph: groups U_1..U_n of size k, a block V' of size k,
    and singletons x_1..x_n; every vertex of U_i is adjacent to all of V' and
    to x_i..x_n. Greedy (forced) picks V' and the x's; the optimum is the
    union of the U_i (gap k/2 for n = k)."""
    if k < 2 or n_groups < 1:
        raise ValueError("need k >= 2 and n_groups >= 1")
    b = _Builder()
    groups = [b.block(k, clique=False) for _ in range(n_groups)]
    vprime = b.block(k, clique=False)
    xs = b.block(n_groups, clique=False)
    for i, grp in enumerate(groups):
        b.join(grp, vprime)
        b.join(grp, xs[i:])
    return b.graph()


# ---------------------------------------------------------------------------
# Planar-cubic edge gadget
# ---------------------------------------------------------------------------

EDGE_GADGET_SIZE = 22
EDGE_GADGET_ALPHA = 9


def edge_gadget(offset: int) -> tuple[list[tuple[int, int]], int, int]:
    """The 22-vertex cubic edge gadget. Returns (edges, port_a, port_g):
    port_a expects an edge to u, port_g an edge to v.

    Layout: spine a-b-d-g; a prism-minus-one-matching-edge block hanging off
    a and b; a 5-cycle off d; a chorded 7-cycle off g, cross-linked to the
    5-cycle. Every vertex has degree 3 once the two port edges are added, and
    any independent set takes at most 9 gadget vertices (at most 8 when both
    u and v are taken)."""
    a, bb, d, g = offset, offset + 1, offset + 2, offset + 3
    x1, x2, x3, y1, y2, y3 = (offset + 4 + i for i in range(6))
    p = [offset + 10 + i for i in range(5)]
    q = [offset + 15 + i for i in range(7)]
    edges = [(a, bb), (bb, d), (d, g)]
    edges += [(x1, x2), (x2, x3), (x1, x3), (y1, y2), (y2, y3), (y1, y3)]
    edges += [(x2, y2), (x3, y3), (a, x1), (bb, y1)]
    edges += [(p[i], p[(i + 1) % 5]) for i in range(5)]
    edges += [(d, p[0])]
    edges += [(q[i], q[(i + 1) % 7]) for i in range(7)]
    edges += [(q[2], q[6]), (g, q[0])]
    edges += [(p[1], q[1]), (p[2], q[3]), (p[3], q[4]), (p[4], q[5])]
    return edges, a, g


def gadget_planar_cubic(g: Graph) -> Graph:
    """Replace every edge uv of a cubic graph by the 22-vertex gadget (edges
    u-a and g-v). The result is cubic with n + 22m vertices and independence
    number alpha(G) + 9m. Planarity of the input is accepted on trust."""
    if not g.is_cubic():
        raise ValueError("input graph must be cubic")
    edges: list[tuple[int, int]] = []
    offset = g.n
    for u, v in g.edges():
        gadget_edges, port_a, port_g = edge_gadget(offset)
        edges.extend(gadget_edges)
        edges.append((u, port_a))
        edges.append((port_g, v))
        offset += EDGE_GADGET_SIZE
    out = Graph.from_edges(offset, edges)
    assert out.is_cubic()
    return out


# ---------------------------------------------------------------------------
# Satisfiability anchor
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """CNF with 1-based variables; clauses are tuples of signed literals."""

    n_vars: int
    clauses: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for cl in self.clauses:
            if not cl:
                raise ValueError("empty clause")
            for lit in cl:
                if lit == 0 or abs(lit) > self.n_vars:
                    raise ValueError(f"literal {lit} out of range")

    def occurrences(self, var: int) -> tuple[int, int]:
        pos = sum(1 for cl in self.clauses for lit in cl if lit == var)
        neg = sum(1 for cl in self.clauses for lit in cl if lit == -var)
        return pos, neg

    def is_normalized(self) -> bool:
        return all(len(cl) in (2, 3) for cl in self.clauses) and all(
            self.occurrences(v) == (2, 1) for v in range(1, self.n_vars + 1)
        )


def is_satisfiable(f: CnfFormula, max_vars: int = 20) -> bool:
    """Truth-table satisfiability check for micro formulas."""
    if f.n_vars > max_vars:
        raise ValueError(f"truth-table oracle capped at {max_vars} variables")
    for bits in range(1 << f.n_vars):
        if all(
            any(
                (bits >> (abs(lit) - 1)) & 1 == (1 if lit > 0 else 0) for lit in cl
            )
            for cl in f.clauses
        ):
            return True
    return False


def normalize_sat(f: CnfFormula) -> CnfFormula:
    """Equisatisfiable rewrite into the anchored occurrence form: clause
    sizes 2..3 and every variable occurring exactly twice positively and once
    negatively.

    Unit clauses (x) become (x|z), (x|~z); a variable with k occurrences is
    split into k fresh variables chained by implications; variables with the
    counts mirrored have their polarity flipped.
    """
    clauses = []
    for cl in f.clauses:
        cl = tuple(dict.fromkeys(cl))  # drop duplicate literals
        if len(cl) > 3:
            raise ValueError("input must be a 3-CNF (clauses of size <= 3)")
        clauses.append(list(cl))
    n = f.n_vars
    # Split unit clauses with a fresh forcing variable.
    for idx, cl in enumerate(clauses):
        if len(cl) == 1:
            n += 1
            clauses[idx] = [cl[0], n]
            clauses.append([cl[0], -n])
    # Per-variable occurrence normalization.
    out = [list(cl) for cl in clauses]
    for var in range(1, n + 1):
        slots = [
            (ci, li)
            for ci, cl in enumerate(out)
            for li, lit in enumerate(cl)
            if abs(lit) == var
        ]
        pos = sum(1 for ci, li in slots if out[ci][li] > 0)
        neg = len(slots) - pos
        if (pos, neg) == (2, 1):
            continue
        if (pos, neg) == (1, 2):
            for ci, li in slots:
                out[ci][li] = -out[ci][li]
            continue
        k = len(slots)
        if k == 0:
            # Unused variable: introduce a tautological implication cycle so
            # the anchor sees uniform occurrence counts.
            continue
        fresh = list(range(n + 1, n + 1 + k))
        n += k
        for (ci, li), nv in zip(slots, fresh):
            out[ci][li] = nv if out[ci][li] > 0 else -nv
        for j in range(k):
            out.append([-fresh[j], fresh[(j + 1) % k]])
    # Flip any fresh variables that came out mirrored.
    result = [list(cl) for cl in out]
    for var in range(1, n + 1):
        slots = [
            (ci, li)
            for ci, cl in enumerate(result)
            for li, lit in enumerate(cl)
            if abs(lit) == var
        ]
        if not slots:
            continue
        pos = sum(1 for ci, li in slots if result[ci][li] > 0)
        if (pos, len(slots) - pos) == (1, 2):
            for ci, li in slots:
                result[ci][li] = -result[ci][li]
    # Drop variables that vanished (renumber densely).
    used = sorted({abs(lit) for cl in result for lit in cl})
    remap = {old: new for new, old in enumerate(used, start=1)}
    final = CnfFormula(
        n_vars=len(used),
        clauses=tuple(
            tuple((1 if lit > 0 else -1) * remap[abs(lit)] for lit in cl)
            for cl in result
        ),
    )
    if not final.is_normalized():
        raise AssertionError("normalization failed to reach the target form")
    return final


@dataclass(frozen=True)
class AnchorInfo:
    """Vertex bookkeeping of a composed anchor instance."""

    r_prime: int
    hard_root: int
    pos_literal: tuple[int, ...]
    neg_literal: tuple[int, ...]
    clause_roots: tuple[int, ...]
    n_pad_cliques: int
    hard_offset: int


def gen_sat_anchor(f: CnfFormula, hard: Graph, hard_root: int | None = None) -> tuple[Graph, AnchorInfo]:
    """Join the anchor graph of a normalized formula to a rooted hard graph.

    Greedy runs in three phases: the literal vertices (unique minimum degree
    three) encode a valuation; the clause gadgets then resolve at degree
    four, and a clause root gets picked (killing r') exactly when its clause
    is unsatisfied; finally the hard graph is consumed, through its root r
    iff the formula was unsatisfied. Degree padding uses K6 cliques, each
    contributing one greedy pick regardless of the phase outcomes.
    """
    if not f.is_normalized():
        raise ValueError("formula must be in normalized occurrence form")
    if not f.clauses:
        raise ValueError("formula must have at least one clause")
    degs = hard.degrees()
    dmin = min(degs)
    roots = [v for v in range(hard.n) if degs[v] == dmin]
    if len(roots) != 1 or (hard_root is not None and roots[0] != hard_root):
        raise ValueError("hard graph must have a unique minimum-degree root")
    if dmin < 4:
        raise ValueError(
            "hard graph's root must have degree >= 4 to stay out of the"
            " anchor's phases"
        )
    root = roots[0]

    edges: list[tuple[int, int]] = []
    pads: list[int] = []  # one entry per needed padding edge

    def pad(v: int, count: int) -> None:
        pads.extend([v] * count)

    nid = 0

    def new_vertex() -> int:
        nonlocal nid
        nid += 1
        return nid - 1

    pos_lit = []
    neg_lit = []
    for _ in range(f.n_vars):
        p, q = new_vertex(), new_vertex()
        pos_lit.append(p)
        neg_lit.append(q)
        edges.append((p, q))
        pad(q, 1)
    clause_roots = []
    for cl in f.clauses:
        r_c = new_vertex()
        clause_roots.append(r_c)
        pad(r_c, 3)
        for lit in cl:
            v = new_vertex()
            vp = new_vertex()
            lit_vertex = pos_lit[abs(lit) - 1] if lit > 0 else neg_lit[abs(lit) - 1]
            edges += [(v, lit_vertex), (v, vp), (vp, r_c)]
            pad(v, 3)
            pad(vp, 3)
    r_prime = new_vertex()
    pad(r_prime, 3)
    edges += [(r_c, r_prime) for r_c in clause_roots]

    # K6 padding cliques; each clique vertex accepts at most one pad edge.
    n_cliques = (len(pads) + 5) // 6
    clique_vertices = []
    for _ in range(n_cliques):
        ids = [new_vertex() for _ in range(6)]
        edges += list(combinations(ids, 2))
        clique_vertices.extend(ids)
    for slot, v in zip(clique_vertices, pads):
        edges.append((v, slot))

    hard_offset = nid
    edges += [(u + hard_offset, v + hard_offset) for u, v in hard.edges()]
    edges.append((r_prime, root + hard_offset))
    g = Graph.from_edges(hard_offset + hard.n, edges)
    for v in pos_lit + neg_lit:
        assert g.degree(v) == 3, "literal vertices must have degree exactly 3"
    return g, AnchorInfo(
        r_prime=r_prime,
        hard_root=root + hard_offset,
        pos_literal=tuple(pos_lit),
        neg_literal=tuple(neg_lit),
        clause_roots=tuple(clause_roots),
        n_pad_cliques=n_cliques,
        hard_offset=hard_offset,
    )


# ---------------------------------------------------------------------------
# Seeded random families
# ---------------------------------------------------------------------------


def gen_random(kind: str, n: int, seed: int, delta: int | None = None) -> Graph:
    """Deterministic random graph of the given kind.

    Kinds: ``subcubic`` (capped edge insertion, 2n attempts), ``max_degree``
    and ``triangle_free`` (capped insertion, delta*n attempts, the latter
    with triangle rejection), ``cubic`` (stub pairing with rejection; needs
    even n >= 4).
    """
    rng = Random(seed)
    if kind == "subcubic":
        return _random_capped(rng, n, 3, 2 * n, triangle_free=False)
    if kind == "max_degree":
        if not delta or delta < 1:
            raise ValueError("max_degree kind needs delta >= 1")
        return _random_capped(rng, n, delta, delta * n, triangle_free=False)
    if kind == "triangle_free":
        if not delta or delta < 1:
            raise ValueError("triangle_free kind needs delta >= 1")
        g = _random_capped(rng, n, delta, delta * n, triangle_free=True)
        assert not _has_triangle(g)
        return g
    if kind == "cubic":
        if n < 4 or n % 2:
            raise ValueError("cubic graphs need even n >= 4")
        g = _random_cubic(rng, n)
        assert g.is_cubic()
        return g
    raise ValueError(f"unknown random kind {kind!r}")


def _random_capped(
    rng: Random, n: int, cap: int, attempts: int, triangle_free: bool
) -> Graph:
    deg = [0] * n
    adj: list[set[int]] = [set() for _ in range(n)]
    edges = []
    for _ in range(attempts):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v or v in adj[u] or deg[u] >= cap or deg[v] >= cap:
            continue
        if triangle_free and adj[u] & adj[v]:
            continue
        adj[u].add(v)
        adj[v].add(u)
        deg[u] += 1
        deg[v] += 1
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def _has_triangle(g: Graph) -> bool:
    sets = [set(a) for a in g.adj]
    return any(sets[u] & sets[v] for u, v in g.edges())


def _random_cubic(rng: Random, n: int) -> Graph:
    for _ in range(10_000):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        edges = set()
        ok = True
        for i in range(0, len(stubs), 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v or (min(u, v), max(u, v)) in edges:
                ok = False
                break
            edges.add((min(u, v), max(u, v)))
        if ok:
            return Graph.from_edges(n, edges)
    raise RuntimeError("failed to sample a simple cubic graph")


# ---------------------------------------------------------------------------
# Instance files
# ---------------------------------------------------------------------------


def instance_sidecar(
    family: str,
    params: dict,
    g: Graph,
    alpha: int | None = None,
    alpha_plus: int | None = None,
    alpha_source: str | None = None,
) -> dict:
    side = {
        "v": 1,
        "family": family,
        "params": params,
        "n": g.n,
        "m": g.m,
        "max_degree": g.max_degree(),
    }
    if alpha is not None:
        side["alpha"] = alpha
        side["alpha_source"] = alpha_source
    if alpha_plus is not None:
        side["alpha_plus"] = alpha_plus
    return side


def write_instance(directory: str | Path, name: str, g: Graph, sidecar: dict) -> tuple[Path, Path]:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    dimacs_path = directory / f"{name}.dimacs"
    json_path = directory / f"{name}.json"
    dimacs_path.write_text(write_dimacs(g), encoding="utf-8")
    json_path.write_text(json.dumps(sidecar, indent=2) + "\n", encoding="utf-8")
    return dimacs_path, json_path
