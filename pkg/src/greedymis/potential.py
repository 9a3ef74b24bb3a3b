"""Loan/debt/potential accounting for greedy executions.

Fix parameters (gamma, sigma) and a reference independent set I (vertices in
I are *black*, others *white*). For a reduction R executed in state G', a
*loan edge* is a contact edge whose contact endpoint is white, and the *debt*
of a white ground vertex is the number of edges it lost to earlier
reductions: exactly d_G(u) - d_G'(u), or at most Delta - d_G'(u). The
potential of an extended reduction is

    phi_I(R) = gamma * |R| - sigma * |I ∩ ground(R)| + loan_I(R) - debt_I(R)

with the Delta-based debt bound, and the exact potential phi_{G,I} uses the
true original degrees. Two identities make the scheme audit itself: over a
complete execution the total loan equals the total exact debt, so the exact
potential telescopes to gamma*k - sigma*|I|; and the two potentials differ by
the total degree deficit sum over white vertices of (Delta - d_G(v)).

The vertex-cover dual recolors white = "in the cover C" and charges

    psi_C(R) = sigma * (|ground(R)| - 1) - gamma * |C ∩ ground(R)|
               - loan_C(R) + debt_C(R)

whose loan and debt counts coincide with the primal ones; for every basic
reduction other than an isolated vertex, -phi_I(R) >= psi_C(R).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .graph import Graph, is_independent_set
from .greedy import ExecutionTrace, ReductionRecord
from .reductions import (
    BRANCHING,
    CYCLE,
    EDGE,
    EVEN_BACKBONE,
    LOOP,
    ODD_BACKBONE,
    PATH,
    POINT,
    GraphState,
)

__all__ = [
    "PotentialParams",
    "PotentialIdentityError",
    "ReductionView",
    "BasicView",
    "replay_views",
    "loan",
    "debt",
    "phi",
    "psi",
    "PotentialRecord",
    "PotentialReport",
    "audit_execution",
    "Shape",
    "table_shapes",
    "shape_colorings",
    "shape_phi",
    "TableEntry",
    "min_potential_table",
    "view_min_potential",
    "classify_reduction_type",
    "structural_reductions",
    "is_potentially_problematic",
    "basic_potential_bound",
    "basic_potential_bound_real_min",
    "DualityRecord",
    "DualityReport",
    "duality_audit",
]


@dataclass(frozen=True)
class PotentialParams:
    """(gamma, sigma, Delta) plus the integrality offset b of the general
    family (b = 1 iff Delta = 2 mod 3)."""

    gamma: Fraction
    sigma: Fraction
    delta: int
    b: int = 0

    @staticmethod
    def subcubic() -> "PotentialParams":
        return PotentialParams(Fraction(5), Fraction(4), 3, 0)

    @staticmethod
    def general(delta: int) -> "PotentialParams":
        b = 1 if delta % 3 == 2 else 0
        return PotentialParams(
            Fraction((delta + b) * (delta + 2), 3), Fraction(delta + b), delta, b
        )

    @staticmethod
    def triangle_free(delta: int) -> "PotentialParams":
        return PotentialParams(
            Fraction(delta * (delta + 6), 4), Fraction(delta), delta, 0
        )


class PotentialIdentityError(AssertionError):
    """A bookkeeping identity failed: this signals an implementation bug,
    never bad input data."""


@dataclass(frozen=True)
class BasicView:
    """One basic reduction as replayed: ground, contact edges, and the live
    degree of every ground vertex just before this basic executed."""

    root: int
    tag: str
    ground: tuple[int, ...]
    contact_edges: tuple[tuple[int, int], ...]
    pre_degree: dict[int, int]


@dataclass(frozen=True)
class ReductionView:
    """One extended reduction as replayed against the input graph."""

    kind: str
    step: int
    component: int
    size: int
    ground: tuple[int, ...]
    contact_edges: tuple[tuple[int, int], ...]
    pre_degree: dict[int, int]
    basics: tuple[BasicView, ...]


def replay_views(g: Graph, trace: ExecutionTrace) -> list[ReductionView]:
    """Re-execute a trace, materializing per-reduction and per-basic views."""
    state = GraphState(g)
    views: list[ReductionView] = []
    for rec in trace.records:
        ground = rec.ground
        ground_set = set(ground)
        pre = {u: state.deg[u] for u in ground}
        contacts = []
        for u in ground:
            contacts.extend(
                (u, w) for w in state.live_neighbors(u) if w not in ground_set
            )
        basic_views = []
        for b in rec.basics:
            bset = set(b.ground)
            bpre = {u: state.deg[u] for u in b.ground}
            bcontacts = []
            for u in b.ground:
                bcontacts.extend(
                    (u, w) for w in state.live_neighbors(u) if w not in bset
                )
            for u in b.ground:
                state.remove_vertex(u)
            basic_views.append(
                BasicView(
                    root=b.root,
                    tag=b.tag,
                    ground=b.ground,
                    contact_edges=tuple(sorted(bcontacts)),
                    pre_degree=bpre,
                )
            )
        views.append(
            ReductionView(
                kind=rec.kind,
                step=rec.step,
                component=rec.component,
                size=rec.size,
                ground=ground,
                contact_edges=tuple(sorted(contacts)),
                pre_degree=pre,
                basics=tuple(basic_views),
            )
        )
    if state.live_count:
        raise ValueError("trace does not cover the whole graph")
    return views


def loan(view: ReductionView | BasicView, black: frozenset[int]) -> int:
    """Number of contact edges with a white contact vertex."""
    return sum(1 for _, c in view.contact_edges if c not in black)


def debt(
    view: ReductionView | BasicView,
    black: frozenset[int],
    params: PotentialParams,
    original_degrees: Sequence[int] | None = None,
) -> int:
    """Total debt of the white ground vertices: exact when the original
    degrees are supplied, otherwise the Delta-based upper bound."""
    total = 0
    for u, d_pre in view.pre_degree.items():
        if u in black:
            continue
        top = params.delta if original_degrees is None else original_degrees[u]
        total += top - d_pre
    return total


def _size_of(view: ReductionView | BasicView) -> int:
    return view.size if isinstance(view, ReductionView) else 1


def phi(
    view: ReductionView | BasicView,
    black: frozenset[int],
    params: PotentialParams,
    original_degrees: Sequence[int] | None = None,
) -> Fraction:
    """gamma*size - sigma*|black ∩ ground| + loan - debt."""
    n_black = sum(1 for u in view.ground if u in black)
    return (
        params.gamma * _size_of(view)
        - params.sigma * n_black
        + loan(view, black)
        - debt(view, black, params, original_degrees)
    )


def psi(
    view: ReductionView | BasicView,
    cover: frozenset[int],
    params: PotentialParams | None = None,
    original_degrees: Sequence[int] | None = None,
) -> Fraction:
    """Vertex-cover potential (subcubic constants): white = in the cover.

    The loan/debt edge counts equal the primal ones, so this reuses them with
    black = complement of the cover within the view.
    """
    if params is None:
        params = PotentialParams.subcubic()
    all_ids = set(view.ground) | {c for _, c in view.contact_edges}
    black = frozenset(all_ids - cover)
    n_cover = sum(1 for u in view.ground if u in cover)
    return (
        params.sigma * (len(view.ground) - 1)
        - params.gamma * n_cover
        - loan(view, black)
        + debt(view, black, params, original_degrees)
    )


@dataclass(frozen=True)
class PotentialRecord:
    step: int
    kind: str
    size: int
    ground: tuple[int, ...]
    black_in_ground: int
    loan: int
    debt_lb: int
    debt_exact: int
    phi: Fraction
    phi_exact: Fraction
    component: int


def _num(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass
class PotentialReport:
    params: PotentialParams
    records: list[PotentialRecord]
    solution_size: int
    black_size: int
    phi_total: Fraction
    phi_exact_total: Fraction
    loan_total: int
    debt_exact_total: int
    degree_deficit: int

    def to_jsonl(self) -> Iterator[str]:
        for r in self.records:
            yield json.dumps(
                {
                    "v": 1,
                    "record": "reduction",
                    "step": r.step,
                    "kind": r.kind,
                    "size": r.size,
                    "loan": r.loan,
                    "debt_lb": r.debt_lb,
                    "debt_exact": r.debt_exact,
                    "phi": _num(r.phi),
                    "phi_exact": _num(r.phi_exact),
                }
            )
        yield json.dumps(
            {
                "v": 1,
                "record": "summary",
                "solution_size": self.solution_size,
                "black_size": self.black_size,
                "phi_total": _num(self.phi_total),
                "phi_exact_total": _num(self.phi_exact_total),
                "loan_total": self.loan_total,
                "debt_exact_total": self.debt_exact_total,
                "identity_residuals": [0, 0, 0],
            }
        )


def audit_execution(
    g: Graph,
    trace: ExecutionTrace,
    black: Iterable[int],
    params: PotentialParams | None = None,
) -> PotentialReport:
    """Full potential audit of a trace under an independent set.

    Asserts the two bookkeeping identities exactly (total loan = total exact
    debt, so the exact potential equals gamma*k - sigma*|I|; and the exact
    potential exceeds the Delta-bounded one by the white degree deficit).
    An identity failure raises :class:`PotentialIdentityError`: it can only
    mean a bug, both identities being theorems.
    """
    if params is None:
        params = PotentialParams.subcubic()
    black = frozenset(black)
    if not is_independent_set(g, black):
        raise ValueError("reference set is not independent")
    degs = g.degrees()
    views = replay_views(g, trace)
    records = []
    for v in views:
        records.append(
            PotentialRecord(
                step=v.step,
                kind=v.kind,
                size=v.size,
                ground=v.ground,
                black_in_ground=sum(1 for u in v.ground if u in black),
                loan=loan(v, black),
                debt_lb=debt(v, black, params),
                debt_exact=debt(v, black, params, degs),
                phi=phi(v, black, params),
                phi_exact=phi(v, black, params, degs),
                component=v.component,
            )
        )
    k = sum(r.size for r in records)
    report = PotentialReport(
        params=params,
        records=records,
        solution_size=k,
        black_size=len(black),
        phi_total=sum((r.phi for r in records), Fraction(0)),
        phi_exact_total=sum((r.phi_exact for r in records), Fraction(0)),
        loan_total=sum(r.loan for r in records),
        debt_exact_total=sum(r.debt_exact for r in records),
        degree_deficit=sum(params.delta - degs[v] for v in range(g.n) if v not in black),
    )
    if report.loan_total != report.debt_exact_total:
        raise PotentialIdentityError(
            f"total loan {report.loan_total} != total exact debt"
            f" {report.debt_exact_total}"
        )
    expected = params.gamma * k - params.sigma * len(black)
    if report.phi_exact_total != expected:
        raise PotentialIdentityError(
            f"exact potential {report.phi_exact_total} != gamma*k - sigma*|I|"
            f" = {expected}"
        )
    if report.phi_exact_total != report.phi_total + report.degree_deficit:
        raise PotentialIdentityError(
            f"exact potential {report.phi_exact_total} != potential"
            f" {report.phi_total} + degree deficit {report.degree_deficit}"
        )
    return report


# ---------------------------------------------------------------------------
# Worst-case potential table over reduction shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Shape:
    """Canonical structure of one extended-reduction kind for worst-case
    coloring sweeps. Ground vertices are 0..k-1, contacts take higher ids;
    ``pre_degree`` is the live degree at reduction start (so Delta minus it
    is the maximum admissible debt)."""

    kind: str
    label: str
    size: int
    ground: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]
    contact_edges: tuple[tuple[int, int], ...]
    pre_degree: tuple[int, ...]
    roots: tuple[int, ...]
    internal: tuple[int, ...] = ()

    @property
    def vertices(self) -> tuple[int, ...]:
        contacts = sorted({c for _, c in self.contact_edges})
        return tuple(list(self.ground) + contacts)


def _mk_shape(kind, label, size, ground_n, edges, contacts_of, roots, internal=()):
    c_id = ground_n
    contact_edges = []
    for u, reps in contacts_of:
        for _ in range(reps):
            contact_edges.append((u, c_id))
            c_id += 1
    deg = [0] * ground_n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    for u, _ in contact_edges:
        deg[u] += 1
    return Shape(
        kind=kind,
        label=label,
        size=size,
        ground=tuple(range(ground_n)),
        edges=tuple(edges),
        contact_edges=tuple(contact_edges),
        pre_degree=tuple(deg),
        roots=roots,
        internal=tuple(internal),
    )


def table_shapes(kind: str, max_ground: int = 9) -> list[Shape]:
    """All canonical shapes of a kind with at most ``max_ground`` ground
    vertices. Contact vertices are distinct and mutually non-adjacent, which
    only enlarges the coloring space and therefore never misses a minimum."""
    shapes: list[Shape] = []
    if kind == POINT:
        shapes.append(_mk_shape(POINT, "point", 1, 1, [], [], roots=(0,)))
    elif kind == EDGE:
        shapes.append(_mk_shape(EDGE, "edge", 1, 2, [(0, 1)], [], roots=(0, 1)))
    elif kind == PATH:
        shapes.append(_mk_shape(PATH, "path", 1, 2, [(0, 1)], [(1, 1)], roots=(0,)))
    elif kind == BRANCHING:
        shapes.append(
            _mk_shape(BRANCHING, "branching", 1, 2, [(0, 1)], [(1, 2)], roots=(0,))
        )
    elif kind == CYCLE:
        for n in range(3, max_ground + 1):
            edges = [(i, (i + 1) % n) for i in range(n)]
            shapes.append(
                _mk_shape(CYCLE, f"cycle-{n}", n // 2, n, edges, [], roots=(0,))
            )
    elif kind == LOOP:
        for n in range(3, max_ground + 1):
            edges = [(i, (i + 1) % n) for i in range(n)]
            shapes.append(
                _mk_shape(
                    LOOP,
                    f"loop-{n}",
                    n // 2,
                    n,
                    edges,
                    [(0, 1)],
                    roots=(1, n - 1),
                    internal=tuple(range(1, n)),
                )
            )
    elif kind == EVEN_BACKBONE:
        for b in range(1, max_ground - 1, 2):
            n = b + 2
            path_edges = [(i, i + 1) for i in range(n - 1)]
            shapes.append(
                _mk_shape(
                    EVEN_BACKBONE,
                    f"even-{b}",
                    (b + 1) // 2,
                    n,
                    path_edges,
                    [(0, 2), (n - 1, 2)],
                    roots=(1, n - 2),
                    internal=tuple(range(1, n - 1)),
                )
            )
            shapes.append(
                _mk_shape(
                    EVEN_BACKBONE,
                    f"even-{b}-adjacent",
                    (b + 1) // 2,
                    n,
                    path_edges + [(0, n - 1)],
                    [(0, 1), (n - 1, 1)],
                    roots=(1, n - 2),
                    internal=tuple(range(1, n - 1)),
                )
            )
    elif kind == ODD_BACKBONE:
        for b in range(2, max_ground, 2):
            n = b + 1  # endpoint w = 0 plus internal 1..b; far endpoint is a contact
            path_edges = [(i, i + 1) for i in range(n - 1)]
            shapes.append(
                _mk_shape(
                    ODD_BACKBONE,
                    f"odd-{b}",
                    b // 2,
                    n,
                    path_edges,
                    [(0, 2), (n - 1, 1)],
                    roots=(1,),
                    internal=tuple(range(1, n)),
                )
            )
    else:
        raise ValueError(f"unknown reduction kind {kind!r}")
    return [s for s in shapes if len(s.ground) <= max_ground]


def shape_colorings(shape: Shape) -> Iterator[frozenset[int]]:
    """All independent black-subsets of ground ∪ contacts."""
    verts = shape.vertices
    constraints = list(shape.edges) + list(shape.contact_edges)
    for bits in product((False, True), repeat=len(verts)):
        black = {v for v, bit in zip(verts, bits) if bit}
        if all(not (u in black and v in black) for u, v in constraints):
            yield frozenset(black)


def shape_phi(
    shape: Shape, black: frozenset[int], params: PotentialParams
) -> Fraction:
    n_black = sum(1 for u in shape.ground if u in black)
    ln = sum(1 for _, c in shape.contact_edges if c not in black)
    dbt = sum(
        params.delta - shape.pre_degree[u] for u in shape.ground if u not in black
    )
    return params.gamma * shape.size - params.sigma * n_black + ln - dbt


@dataclass(frozen=True)
class TableEntry:
    minimum: Fraction
    shape: Shape
    coloring: frozenset[int]
    per_shape: tuple[tuple[str, Fraction], ...]


def min_potential_table(
    params: PotentialParams | None = None, max_ground: int = 9
) -> dict[str, TableEntry]:
    """Minimum potential over all shapes (up to ``max_ground`` ground
    vertices) and all colorings, per reduction kind."""
    if params is None:
        params = PotentialParams.subcubic()
    out: dict[str, TableEntry] = {}
    for kind in (POINT, EDGE, PATH, BRANCHING, LOOP, CYCLE, EVEN_BACKBONE, ODD_BACKBONE):
        best = None
        per_shape = []
        for shape in table_shapes(kind, max_ground):
            smin = None
            for coloring in shape_colorings(shape):
                val = shape_phi(shape, coloring, params)
                if smin is None or val < smin[0]:
                    smin = (val, coloring)
            per_shape.append((shape.label, smin[0]))
            if best is None or smin[0] < best[0]:
                best = (smin[0], shape, smin[1])
        out[kind] = TableEntry(
            minimum=best[0],
            shape=best[1],
            coloring=best[2],
            per_shape=tuple(per_shape),
        )
    return out


def view_min_potential(
    g: Graph, view: ReductionView, params: PotentialParams
) -> Fraction:
    """Minimum of phi over all colorings of this reduction's actual shape
    (independence judged in the input graph)."""
    verts = tuple(view.ground) + tuple(sorted({c for _, c in view.contact_edges}))
    best = None
    for bits in product((False, True), repeat=len(verts)):
        black = frozenset(v for v, bit in zip(verts, bits) if bit)
        if not all(
            not (u in black and w in black and g.has_edge(u, w))
            for i, u in enumerate(verts)
            for w in verts[i + 1 :]
        ):
            continue
        val = phi(view, black, params)
        if best is None or val < best:
            best = val
    return best


# ---------------------------------------------------------------------------
# Black/white reduction types and potentially problematic graphs
# ---------------------------------------------------------------------------


def classify_reduction_type(
    kind: str,
    roots: Sequence[int],
    ground: Sequence[int],
    black: frozenset[int],
    middle: int | None = None,
    internal: Sequence[int] | None = None,
) -> str | None:
    """Black/white type of a reduction under a coloring, or None.

    Rules: (1) a path or branching reduction is black-typed when its root is
    black and its middle white, white-typed in the mirrored case; (2) a loop
    whose ground holds a maximum independent set is white-typed when both
    roots are white, black-typed when some root is black; (3) an
    even-backbone with an alternating backbone is white-typed (black-typed)
    when both roots are white (black).
    """
    if kind in (PATH, BRANCHING):
        root = roots[0]
        if root in black and middle not in black:
            return "black"
        if root not in black and middle in black:
            return "white"
        return None
    if kind == LOOP:
        if sum(1 for u in ground if u in black) != len(ground) // 2:
            return None
        if all(r not in black for r in roots):
            return "white"
        return "black"
    if kind == EVEN_BACKBONE:
        seq = list(internal or ())
        if any((seq[i] in black) == (seq[i + 1] in black) for i in range(len(seq) - 1)):
            return None
        if all(r not in black for r in roots):
            return "white"
        if all(r in black for r in roots):
            return "black"
        return None
    return None


@dataclass(frozen=True)
class StructuralReduction:
    kind: str
    roots: tuple[int, ...]
    ground: tuple[int, ...]
    middle: int | None = None
    internal: tuple[int, ...] = ()


def structural_reductions(g: Graph) -> list[StructuralReduction]:
    """Every reduction structurally present in ``g`` (no minimum-degree
    filter): degree-1 rooted Path/Branching and all Loop/Even/Odd backbones.
    Used for the potentially-problematic test, whose rules only mention these
    kinds."""
    from .reductions import _walk_degree_two

    state = GraphState(g)
    out: list[StructuralReduction] = []
    for v in range(g.n):
        if g.degree(v) == 1:
            m = g.adj[v][0]
            md = g.degree(m)
            if md == 2:
                out.append(StructuralReduction(PATH, (v,), (v, m), middle=m))
            elif md >= 3:
                out.append(StructuralReduction(BRANCHING, (v,), (v, m), middle=m))
    seen: set[int] = set()
    for v in range(g.n):
        if g.degree(v) != 2 or v in seen:
            continue
        try:
            kind, payload = _walk_degree_two(state, v)
        except Exception:
            continue
        if kind == "cycle":
            seen.update(payload)
            continue
        b = payload
        seen.update(b.internal)
        r1, r2 = b.roots
        if b.is_loop:
            ground = tuple(sorted((b.endpoints[0], *b.internal)))
            out.append(
                StructuralReduction(LOOP, (r1, r2), ground, internal=b.internal)
            )
        elif b.parity == "even":
            ground = tuple(sorted((*b.endpoints, *b.internal)))
            out.append(
                StructuralReduction(
                    EVEN_BACKBONE, (r1, r2), ground, internal=b.internal
                )
            )
        else:
            out.append(
                StructuralReduction(
                    ODD_BACKBONE,
                    (r1, r2),
                    tuple(sorted((*b.endpoints, *b.internal))),
                    internal=b.internal,
                )
            )
    return out


def is_potentially_problematic(
    g: Graph, black: Iterable[int]
) -> tuple[bool, tuple | None]:
    """Necessary condition for an execution potential of -1: the graph is a
    maximum-colored odd cycle or edge, or it holds both a black-typed and a
    white-typed reduction. Returns (flag, witness)."""
    black = frozenset(black)
    if g.n == 0:
        return False, None
    if g.n == 2 and g.m == 1 and len(black) == 1:
        return True, ("edge", tuple(range(g.n)))
    if (
        g.n >= 3
        and g.n % 2 == 1
        and all(g.degree(v) == 2 for v in range(g.n))
        and len(connected(g)) == 1
        and len(black) == g.n // 2
    ):
        return True, ("odd-cycle", tuple(range(g.n)))
    black_red = None
    white_red = None
    for red in structural_reductions(g):
        t = classify_reduction_type(
            red.kind, red.roots, red.ground, black, red.middle, red.internal
        )
        if t == "black" and black_red is None:
            black_red = red
        elif t == "white" and white_red is None:
            white_red = red
        if black_red and white_red:
            return True, ("pair", black_red, white_red)
    return False, None


def connected(g: Graph):
    from .graph import connected_components

    return connected_components(g)


# ---------------------------------------------------------------------------
# The quadratic lower-bound form behind the (Delta+2)/3 analysis
# ---------------------------------------------------------------------------


def basic_potential_bound(delta: int, n_black: int, n_white: int) -> Fraction:
    """Lower bound on the potential of a basic reduction with ``n_black``
    black and ``n_white`` white ground vertices under the general-Delta
    parameters. Non-negative over the integer grid."""
    if delta < 1 or n_black < 0 or n_white < 0:
        raise ValueError("arguments out of range")
    b = 1 if delta % 3 == 2 else 0
    i, ell, d = Fraction(n_black), Fraction(n_white), Fraction(delta)
    return (
        ell * ell
        - (d - i + 1) * ell
        + Fraction((delta + b) * (delta + 2), 3)
        - (d + b) * i
        + (i - 1) * i
    )


def basic_potential_bound_real_min(delta: int) -> Fraction:
    """Unconstrained real minimum of the bound: b/3 - b^2/3 - 1/3."""
    b = 1 if delta % 3 == 2 else 0
    return Fraction(b, 3) - Fraction(b * b, 3) - Fraction(1, 3)


# ---------------------------------------------------------------------------
# Vertex-cover duality audit
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DualityRecord:
    step: int
    basic_index: int
    tag: str
    neg_phi: Fraction
    psi: Fraction
    neg_phi_exact: Fraction
    psi_exact: Fraction

    @property
    def ok(self) -> bool:
        return self.neg_phi >= self.psi and self.neg_phi_exact >= self.psi_exact


@dataclass
class DualityReport:
    records: list[DualityRecord]
    psi_exact_total: Fraction
    phi_exact_total: Fraction
    violations: list[DualityRecord]


def duality_audit(
    g: Graph,
    trace: ExecutionTrace,
    black: Iterable[int],
    params: PotentialParams | None = None,
) -> DualityReport:
    """Check -phi >= psi per basic reduction (isolated-vertex basics are
    exempt and instead satisfy psi <= 0), in both the Delta-bounded and exact
    variants, with C = V - I; also total up the exact dual potential."""
    if params is None:
        params = PotentialParams.subcubic()
    black = frozenset(black)
    cover = frozenset(range(g.n)) - black
    degs = g.degrees()
    views = replay_views(g, trace)
    records: list[DualityRecord] = []
    psi_exact_total = Fraction(0)
    phi_exact_total = Fraction(0)
    for v in views:
        phi_exact_total += phi(v, black, params, degs)
        for idx, bview in enumerate(v.basics):
            p = psi(bview, cover, params)
            pe = psi(bview, cover, params, degs)
            psi_exact_total += pe
            if bview.tag == "0.a":
                if p > 0 or pe > 0:
                    records.append(
                        DualityRecord(v.step, idx, bview.tag, Fraction(0), p, Fraction(0), pe)
                    )
                continue
            records.append(
                DualityRecord(
                    step=v.step,
                    basic_index=idx,
                    tag=bview.tag,
                    neg_phi=-phi(bview, black, params),
                    psi=p,
                    neg_phi_exact=-phi(bview, black, params, degs),
                    psi_exact=pe,
                )
            )
    violations = [r for r in records if not r.ok]
    return DualityReport(
        records=records,
        psi_exact_total=psi_exact_total,
        phi_exact_total=phi_exact_total,
        violations=violations,
    )
