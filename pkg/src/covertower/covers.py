"""Z/2-homology covers of multigraphs and their deck transformations.

Given a graph with a maximal tree and r cotree edges, the cover has vertex
set V x (Z/2)^r and edge set E x (Z/2)^r.  An edge (e, a) joins (u, a) to
(v, a) when e is a tree edge, and (tail, a) to (head, a + e_j) when e is the
j-th cotree edge, where e_j flips coordinate j only.  Bitvectors are packed
into integers with coordinate j stored in bit j-1, so e_j = 1 << (j - 1).

For a cotree loop at v, the edge (e_j, a) joins (v, a) to (v, a + e_j); the
flip is nonzero, so loops downstairs never lift to loops upstairs.

Cover vertex (v, a) gets id v * 2^r + a, and similarly for edges, i.e. ids
are lexicographic in (base id, bitvector-as-integer).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    DisconnectedGraphError,
    SizeCapError,
    ValidationError,
)
from .multigraph import CoverSpec, MultiGraph, is_connected


def _bitstring(value: int, rank: int) -> str:
    return "".join("1" if (value >> j) & 1 else "0" for j in range(rank))


@dataclass(frozen=True)
class CoveredGraph:
    """A constructed cover together with its fiber coordinates.

    ``vertex_fiber[vid]`` and ``edge_fiber[eid]`` give (base id, bitvector)
    for every cover vertex and edge; the bitvector is packed as an integer.
    """

    graph: MultiGraph
    base: MultiGraph
    spec: CoverSpec
    vertex_fiber: tuple[tuple[int, int], ...]
    edge_fiber: tuple[tuple[int, int], ...]

    @property
    def rank(self) -> int:
        return self.spec.rank

    @property
    def sheets(self) -> int:
        return 1 << self.spec.rank

    @cached_property
    def vertex_index(self) -> dict[tuple[int, int], int]:
        return {fiber: vid for vid, fiber in enumerate(self.vertex_fiber)}

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {fiber: eid for eid, fiber in enumerate(self.edge_fiber)}


@dataclass(frozen=True)
class DeckElement:
    """An element of the deck group (Z/2)^r, acting by bitvector translation."""

    bits: tuple[int, ...]

    def __post_init__(self):
        if any(b not in (0, 1) for b in self.bits):
            raise ValidationError("deck element bits must be 0 or 1")

    @property
    def rank(self) -> int:
        return len(self.bits)

    @property
    def as_int(self) -> int:
        return sum(b << j for j, b in enumerate(self.bits))

    @classmethod
    def from_int(cls, value: int, rank: int) -> "DeckElement":
        if not 0 <= value < (1 << rank):
            raise ValidationError(f"deck element value {value} out of range for rank {rank}")
        return cls(bits=tuple((value >> j) & 1 for j in range(rank)))


@dataclass(frozen=True)
class RegularCoverReport:
    """Outcome of the regular-cover verification; failures are recorded, not raised."""

    automorphism_ok: bool
    free_action_ok: bool
    quotient_ok: bool
    star_bijection_ok: bool
    orbit_count: int
    deck_order: int
    failures: tuple[str, ...]

    @property
    def all_ok(self) -> bool:
        return (
            self.automorphism_ok
            and self.free_action_ok
            and self.quotient_ok
            and self.star_bijection_ok
        )


def z2_cover(
    base: MultiGraph,
    spec: CoverSpec,
    vertex_cap: int | None = None,
) -> CoveredGraph:
    """Construct the homology double-cover tower step for one graph.

    Rejects disconnected bases: downstream tower semantics assume connected
    Cayley-like graphs, and a disconnected base would silently produce a
    cover of only one piece's worth of structure.
    """
    spec.validate_for(base)
    if base.num_vertices > 0 and not is_connected(base):
        raise DisconnectedGraphError("cover construction requires a connected base")
    r = spec.rank
    sheets = 1 << r
    predicted_vertices = base.num_vertices * sheets
    if vertex_cap is not None and predicted_vertices > vertex_cap:
        raise SizeCapError(
            f"cover would have {predicted_vertices} vertices, above the cap {vertex_cap}"
        )

    flip_of_edge = {e: 1 << j for j, (e, _, _) in enumerate(spec.cotree_edges)}
    direction = {e: (tail, head) for e, tail, head in spec.cotree_edges}

    labels = tuple(
        f"{base.label_of(v)}|{_bitstring(a, r)}"
        for v in range(base.num_vertices)
        for a in range(sheets)
    )
    vertex_fiber = tuple(
        (v, a) for v in range(base.num_vertices) for a in range(sheets)
    )

    def vid(v: int, a: int) -> int:
        return v * sheets + a

    edges = []
    edge_fiber = []
    for e in range(base.num_edges):
        if e in flip_of_edge:
            tail, head = direction[e]
            flip = flip_of_edge[e]
            for a in range(sheets):
                x, y = vid(tail, a), vid(head, a ^ flip)
                edges.append((x, y) if x <= y else (y, x))
                edge_fiber.append((e, a))
        else:
            u, v = base.endpoints(e)
            for a in range(sheets):
                x, y = vid(u, a), vid(v, a)
                edges.append((x, y) if x <= y else (y, x))
                edge_fiber.append((e, a))

    graph = MultiGraph(
        num_vertices=predicted_vertices, edges=tuple(edges), labels=labels
    )
    return CoveredGraph(
        graph=graph,
        base=base,
        spec=spec,
        vertex_fiber=vertex_fiber,
        edge_fiber=tuple(edge_fiber),
    )


def deck_action(
    cover: CoveredGraph, beta: DeckElement
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Vertex and edge permutations of the translation a -> a + beta.

    Returned as explicit id -> id maps (tuples indexed by id).
    """
    if beta.rank != cover.rank:
        raise ValidationError(
            f"deck element has rank {beta.rank}, cover has rank {cover.rank}"
        )
    b = beta.as_int
    vertex_map = tuple(
        cover.vertex_index[(v, a ^ b)] for v, a in cover.vertex_fiber
    )
    edge_map = tuple(cover.edge_index[(e, a ^ b)] for e, a in cover.edge_fiber)
    return vertex_map, edge_map


def verify_regular_cover(cover: CoveredGraph) -> RegularCoverReport:
    """Check the four regular-cover conditions, reporting failures in the record.

    All checks read the fiber maps as ground truth, so a corrupted fiber
    assignment is detected rather than assumed away.
    """
    base = cover.base
    g = cover.graph
    r = cover.rank
    sheets = 1 << r
    failures: list[str] = []

    expected_fibers = {
        (v, a) for v in range(base.num_vertices) for a in range(sheets)
    }
    vertex_bijection = (
        len(cover.vertex_fiber) == len(expected_fibers)
        and set(cover.vertex_fiber) == expected_fibers
        and len(cover.vertex_fiber) == g.num_vertices
    )
    expected_edge_fibers = {
        (e, a) for e in range(base.num_edges) for a in range(sheets)
    }
    edge_bijection = (
        len(cover.edge_fiber) == len(expected_edge_fibers)
        and set(cover.edge_fiber) == expected_edge_fibers
        and len(cover.edge_fiber) == g.num_edges
    )
    if not vertex_bijection:
        failures.append("vertex fibers are not a bijection onto V(base) x (Z/2)^r")
    if not edge_bijection:
        failures.append("edge fibers are not a bijection onto E(base) x (Z/2)^r")

    # (i) every deck element is a graph automorphism, (ii) the action is free
    automorphism_ok = vertex_bijection and edge_bijection
    free_action_ok = vertex_bijection
    if automorphism_ok:
        for b in range(sheets):
            vmap = [cover.vertex_index[(v, a ^ b)] for v, a in cover.vertex_fiber]
            emap = [cover.edge_index[(e, a ^ b)] for e, a in cover.edge_fiber]
            for eid in range(g.num_edges):
                u, v = g.endpoints(eid)
                image = g.endpoints(emap[eid])
                moved = (vmap[u], vmap[v])
                if tuple(sorted(moved)) != image:
                    failures.append(
                        f"deck element {b} does not preserve incidence at edge {eid}"
                    )
                    automorphism_ok = False
                    break
            if b != 0 and any(vmap[x] == x for x in range(g.num_vertices)):
                failures.append(f"deck element {b} fixes a vertex")
                free_action_ok = False
            if not automorphism_ok:
                break

    # (iii) vertex orbits biject with base vertices and the projected quotient
    # graph is the base
    quotient_ok = vertex_bijection and edge_bijection
    if quotient_ok:
        orbit_sizes = Counter(v for v, _ in cover.vertex_fiber)
        if len(orbit_sizes) != base.num_vertices or any(
            size != sheets for size in orbit_sizes.values()
        ):
            failures.append("vertex orbits do not biject with base vertices")
            quotient_ok = False
        edge_groups = Counter(e for e, _ in cover.edge_fiber)
        if len(edge_groups) != base.num_edges or any(
            size != sheets for size in edge_groups.values()
        ):
            failures.append("edge orbits do not biject with base edges")
            quotient_ok = False
        if quotient_ok:
            for eid in range(g.num_edges):
                e, _ = cover.edge_fiber[eid]
                u, v = g.endpoints(eid)
                projected = tuple(
                    sorted((cover.vertex_fiber[u][0], cover.vertex_fiber[v][0]))
                )
                if projected != base.endpoints(e):
                    failures.append(
                        f"cover edge {eid} projects to {projected}, "
                        f"not to base edge {e}"
                    )
                    quotient_ok = False
                    break
    orbit_count = len({v for v, _ in cover.vertex_fiber})

    # (iv) projection restricted to each vertex star is a bijection
    star_bijection_ok = vertex_bijection and edge_bijection
    if star_bijection_ok:
        base_star = [Counter() for _ in range(base.num_vertices)]
        for e, (u, v) in enumerate(base.edges):
            base_star[u][e] += 1
            base_star[v][e] += 1
        cover_star = [Counter() for _ in range(g.num_vertices)]
        for eid, (u, v) in enumerate(g.edges):
            e, _ = cover.edge_fiber[eid]
            cover_star[u][e] += 1
            cover_star[v][e] += 1
        for vid_, (v, _) in enumerate(cover.vertex_fiber):
            if cover_star[vid_] != base_star[v]:
                failures.append(
                    f"star of cover vertex {vid_} does not project bijectively "
                    f"onto the star of base vertex {v}"
                )
                star_bijection_ok = False
                break

    return RegularCoverReport(
        automorphism_ok=automorphism_ok,
        free_action_ok=free_action_ok,
        quotient_ok=quotient_ok,
        star_bijection_ok=star_bijection_ok,
        orbit_count=orbit_count,
        deck_order=sheets,
        failures=tuple(failures),
    )


def flip_cotree_orientation(spec: CoverSpec, position: int) -> CoverSpec:
    """Reverse the direction of the cotree edge at the given position."""
    if not 0 <= position < spec.rank:
        raise ValidationError(f"cotree position {position} out of range")
    cotree = list(spec.cotree_edges)
    e, tail, head = cotree[position]
    cotree[position] = (e, head, tail)
    return CoverSpec(tree_edges=spec.tree_edges, cotree_edges=tuple(cotree))
