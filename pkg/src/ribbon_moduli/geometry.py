"""Strata, irreducible components and the degeneration graph of the
semistable locus, plus tangent-space dimensions and smoothness calls.

Everything is indexed by partitions: the locus of descriptors with local
index multiset (b_1 >= ... >= b_k) has dimension g - sum(b_i - 1), lives
in the stable range while the total index stays below 1 + g - 2*gbar,
and degenerates along two elementary moves (raise an entry by 2, or
absorb a 1 into another entry).
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from collections.abc import Iterable, Iterator

from .core import GLBDescriptor, RibbonInvariants, UNKNOWN, VBDescriptor, mk_glb
from .stability import SplitClass, StabilityVerdict, classify_glb, classify_vb, gr_class

BOUNDARY_KEY = "boundary"


@dataclass(frozen=True)
class Stratum:
    indices: tuple[int, ...]
    dim: int
    stability: StabilityVerdict

    @property
    def total_index(self) -> int:
        return sum(self.indices)


def _partitions(total: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of positive ints summing to `total`."""
    if total == 0:
        yield ()
        return
    top = total if max_part is None else min(max_part, total)
    for first in range(top, 0, -1):
        for rest in _partitions(total - first, first):
            yield (first,) + rest


def enumerate_strata(
    ribbon: RibbonInvariants, d: int, include_semistable: bool = False
) -> list[Stratum]:
    """Index strata in degree d, sorted by (total index, partition).

    Stable strata are the partitions with sum <= g - 2*gbar; the
    strictly semistable ones sit at sum = 1 + g - 2*gbar exactly.
    Partitions whose sum disagrees with d mod 2 admit no descriptor and
    are skipped.
    """
    g, gbar = ribbon.g, ribbon.gbar
    out = []

    def add(total: int, verdict: StabilityVerdict) -> None:
        if total < 0 or (d - total) % 2 != 0:
            return
        for part in _partitions(total):
            out.append(Stratum(part, g - (total - len(part)), verdict))

    for m in range(0, g - 2 * gbar + 1):
        add(m, StabilityVerdict.STABLE)
    if include_semistable:
        add(ribbon.index_bound, StabilityVerdict.STRICTLY_SEMISTABLE)
    return sorted(out, key=lambda s: (s.total_index, s.indices))


class VBStatus(enum.Enum):
    EXISTS = "exists"
    NOT_A_COMPONENT = "not-a-component"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class VBComponentInfo:
    status: VBStatus
    dim: int | None = None


@dataclass(frozen=True)
class GLBComponent:
    indices: tuple[int, ...]
    dim: int


@dataclass(frozen=True)
class SpecialCase:
    """Degenerate regime g <= 2*gbar - 1: the whole space is one component
    of pushed-down rank-2 bundles, or empty."""

    empty: bool
    dim: int | None


@dataclass(frozen=True)
class ComponentTable:
    glb_components: tuple[GLBComponent, ...]
    vb_component: VBComponentInfo
    special_case: SpecialCase | None


def component_table(ribbon: RibbonInvariants, d: int) -> ComponentTable:
    """Irreducible components of the degree-d semistable space.

    In the stratified regime (g > 2*gbar - 1) the rank-1 components are
    the closures of the dimension-g strata, i.e. exactly the all-ones
    partitions; whether the rank-2 locus adds a component of its own is
    decided where known and reported UNKNOWN where it is not.
    """
    g, gbar = ribbon.g, ribbon.gbar
    if g <= 2 * gbar - 1:
        if gbar == 0:
            empty = (d - g) % 2 == 0
            dim = None if empty else 0
        elif gbar == 1:
            empty = False
            dim = 1 if (d - g) % 2 == 0 else 2
        else:
            empty = False
            dim = 4 * gbar - 3
        vb = (
            VBComponentInfo(VBStatus.NOT_A_COMPONENT)
            if empty
            else VBComponentInfo(VBStatus.EXISTS, dim)
        )
        return ComponentTable((), vb, SpecialCase(empty, dim))

    comps = tuple(
        GLBComponent(s.indices, s.dim)
        for s in enumerate_strata(ribbon, d)
        if s.dim == g
    )
    if gbar <= 1:
        vb = VBComponentInfo(VBStatus.NOT_A_COMPONENT)
    elif 4 * gbar - 3 >= g:
        vb = VBComponentInfo(VBStatus.EXISTS, 4 * gbar - 3)
    else:
        vb = VBComponentInfo(VBStatus.UNKNOWN)
    return ComponentTable(comps, vb, None)


@dataclass(frozen=True)
class SpecEdge:
    src: tuple[int, ...]
    dst: tuple[int, ...]
    move: str


def _raise_entry(indices: tuple[int, ...], b0: int) -> tuple[int, ...]:
    out = list(indices)
    if b0 == 0:
        out.append(2)
    else:
        out.remove(b0)
        out.append(b0 + 2)
    return tuple(sorted(out, reverse=True))


def specialization_edges(strata: Iterable[Stratum]) -> list[SpecEdge]:
    """Directed degeneration moves between the given strata.

    "raise" bumps one entry b -> b + 2 (b = 0 allowed: a fresh 2
    appears); "merge" absorbs an entry 1 into another entry b1, leaving
    b1 + 1.  Edges point from the generic stratum to the special one;
    both moves preserve index-sum parity, never lower the sum, and
    strictly drop the dimension.  Moves landing outside the given strata
    are dropped.
    """
    pool = {s.indices: s for s in strata}
    edges = set()
    for s in pool.values():
        for b0 in set(s.indices) | {0}:
            target = pool.get(_raise_entry(s.indices, b0))
            if target is not None:
                assert target.dim < s.dim
                assert target.total_index == s.total_index + 2
                edges.add(SpecEdge(s.indices, target.indices, "raise"))
        if 1 in s.indices and len(s.indices) >= 2:
            rest = list(s.indices)
            rest.remove(1)
            for b1 in set(rest):
                merged = list(rest)
                merged.remove(b1)
                merged.append(b1 + 1)
                target = pool.get(tuple(sorted(merged, reverse=True)))
                if target is not None:
                    assert target.dim == s.dim - 1
                    assert target.total_index == s.total_index
                    edges.add(SpecEdge(s.indices, target.indices, "merge"))
    return sorted(edges, key=lambda e: (e.src, e.dst, e.move))


def partition_key(indices: tuple[int, ...]) -> str:
    return "(" + ",".join(str(b) for b in indices) + ")"


@dataclass(frozen=True)
class BoundaryNode:
    """The single node carrying every strictly semistable class.

    gr is the split limit class of the strictly semistable rank-1 locus
    (None when that locus is empty); has_vb records whether semistable
    rank-2 pushdowns exist in this degree.  The two never need separate
    nodes: a strictly semistable rank-1 limit class is itself a split
    rank-2 pushdown.
    """

    gr: SplitClass | None
    has_vb: bool


@dataclass(frozen=True)
class GraphEdge:
    src: str
    dst: str
    move: str


@dataclass(frozen=True)
class StratGraph:
    strata: tuple[Stratum, ...]
    boundary: BoundaryNode | None
    edges: tuple[GraphEdge, ...]
    connected: bool

    @property
    def node_count(self) -> int:
        return len(self.strata) + (1 if self.boundary is not None else 0)

    @property
    def is_empty(self) -> bool:
        return self.node_count == 0


def _is_connected(keys: list[str], edges: tuple[GraphEdge, ...]) -> bool:
    if len(keys) <= 1:
        return True
    adj: dict[str, set[str]] = {k: set() for k in keys}
    for e in edges:
        adj[e.src].add(e.dst)
        adj[e.dst].add(e.src)
    seen = {keys[0]}
    queue = deque([keys[0]])
    while queue:
        for nxt in adj[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return len(seen) == len(keys)


def stratification_graph(ribbon: RibbonInvariants, d: int) -> StratGraph:
    """Degeneration graph of the degree-d semistable space.

    Nodes are the stable strata plus at most one boundary node for the
    strictly semistable classes; edges are the two elementary moves
    (retargeted to the boundary when they land on a strictly semistable
    partition) plus, when the matching rank-2 degree is odd and the
    reduction irrational, a glue edge from each deepest stable stratum
    into the boundary: pushing line bundles down from a blow-up of total
    length g - 2*gbar degenerates onto stable rank-2 points.
    """
    g, gbar = ribbon.g, ribbon.gbar
    everything = enumerate_strata(ribbon, d, include_semistable=True)
    stable = tuple(s for s in everything if s.stability is StabilityVerdict.STABLE)
    semi = [s for s in everything if s.stability is StabilityVerdict.STRICTLY_SEMISTABLE]
    e = ribbon.vb_degree(d)
    has_vb = gbar >= 1 or e % 2 == 0
    gr = None
    if semi:
        cls = gr_class(ribbon, mk_glb(ribbon, d, semi[0].indices))
        assert isinstance(cls, SplitClass)
        if gbar == 0:
            assert cls == SplitClass(e // 2, e // 2)
        gr = cls
    boundary = BoundaryNode(gr, has_vb) if (gr is not None or has_vb) else None

    semi_keys = {s.indices for s in semi}
    edge_set = set()
    for move in specialization_edges(everything):
        if move.src in semi_keys:
            continue  # strictly semistable classes do not degenerate further here
        dst = BOUNDARY_KEY if move.dst in semi_keys else partition_key(move.dst)
        edge_set.add(GraphEdge(partition_key(move.src), dst, move.move))
    if boundary is not None and gbar >= 1 and e % 2 != 0:
        for s in stable:
            if s.total_index == g - 2 * gbar:
                edge_set.add(GraphEdge(partition_key(s.indices), BOUNDARY_KEY, "glue"))

    edges = tuple(sorted(edge_set, key=lambda x: (x.src, x.dst, x.move)))
    keys = [partition_key(s.indices) for s in stable]
    if boundary is not None:
        keys.append(BOUNDARY_KEY)
    return StratGraph(stable, boundary, edges, _is_connected(keys, edges))


def graph_to_dot(graph: StratGraph) -> str:
    """Plain-text DOT rendering, dependency-free, stable ordering."""
    lines = ["digraph strata {"]
    for s in graph.strata:
        key = partition_key(s.indices)
        lines.append(f'  "{key}" [label="{key} | dim {s.dim}"];')
    if graph.boundary is not None:
        parts = []
        if graph.boundary.gr is not None:
            cls = graph.boundary.gr
            parts.append(f"Gr({cls.subsheaf_degree},{cls.quotient_degree})")
        if graph.boundary.has_vb:
            parts.append("rank-2 locus")
        lines.append(f'  "{BOUNDARY_KEY}" [label="{" + ".join(parts)}"];')
    for edge in graph.edges:
        lines.append(f'  "{edge.src}" -> "{edge.dst}" [label="{edge.move}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class TangentRange:
    """Tangent dimension pinned only to [lo, hi]: the global-section
    correction from the blow-up is not determined numerically."""

    lo: int
    hi: int


def tangent_dim_glb(ribbon: RibbonInvariants, glb: GLBDescriptor):
    """Tangent space dimension at a rank-1 descriptor point."""
    g, gbar, b = ribbon.g, ribbon.gbar, glb.total_index
    if gbar == 0:
        # rational reduction: the correction term is forced
        return g + b + max(0, b - g)
    if 2 * gbar <= g:
        return g + b
    return TangentRange(g + b, g + b + 1)


def tangent_dim_vb(ribbon: RibbonInvariants, h_end: int | None = None):
    """Tangent space dimension at a stable pushed-down rank-2 bundle.

    For g >= 4*gbar - 2 cohomology vanishing gives the closed form
    4g + 5 - 8*gbar (h_end is ignored there); otherwise the answer needs
    h_end, the section count of the twisted endomorphism sheaf, and is
    UNKNOWN without it.
    """
    if h_end is not None and h_end < 0:
        raise ValueError(f"h_end must be >= 0, got {h_end}")
    g, gbar = ribbon.g, ribbon.gbar
    if g >= 4 * gbar - 2:
        return 4 * g + 5 - 8 * gbar
    if h_end is not None:
        return 4 * gbar - 3 + h_end
    return UNKNOWN


class Smoothness(enum.Enum):
    SMOOTH = "smooth"
    SINGULAR = "singular"
    UNKNOWN = "unknown"


def smoothness_verdict(
    ribbon: RibbonInvariants, d: int, point: GLBDescriptor | VBDescriptor
) -> Smoothness:
    """Smooth/singular call at a stable point of the degree-d space.

    In the ample regime (gbar >= 2, g >= 4*gbar - 2) the smooth locus is
    exactly the stable line bundles.  Outside it the call falls back to
    comparing tangent dimension against the possible component
    dimensions and says UNKNOWN when they cannot separate.
    """
    g, gbar = ribbon.g, ribbon.gbar
    ample = gbar >= 2 and g >= 4 * gbar - 2
    if isinstance(point, GLBDescriptor):
        if point.d != d:
            raise ValueError(f"descriptor degree {point.d} disagrees with d = {d}")
        if classify_glb(ribbon, point) is not StabilityVerdict.STABLE:
            raise ValueError("smoothness is only decided at stable points")
        b = point.total_index
        if ample:
            return Smoothness.SMOOTH if b == 0 else Smoothness.SINGULAR
        tangent = tangent_dim_glb(ribbon, point)
        if not isinstance(tangent, int):
            return Smoothness.UNKNOWN
        if b == 0:
            return Smoothness.SMOOTH if tangent == g else Smoothness.UNKNOWN
        return Smoothness.SINGULAR if tangent > g else Smoothness.UNKNOWN

    if point.e != ribbon.vb_degree(d):
        raise ValueError(f"bundle degree {point.e} disagrees with d = {d}")
    if classify_vb(ribbon, point) is not StabilityVerdict.STABLE:
        raise ValueError("smoothness is only decided at stable points")
    if ample:
        return Smoothness.SINGULAR
    tangent = tangent_dim_vb(ribbon)
    if tangent is UNKNOWN:
        return Smoothness.UNKNOWN
    bound = max(g, 4 * gbar - 3)
    return Smoothness.SINGULAR if tangent > bound else Smoothness.UNKNOWN
