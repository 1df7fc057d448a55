"""Cheeger constants: exact brute force, certified cuts, and sweep bounds.

All ratios are exact rationals (crossing count over smaller-side size).
Crossing counts include parallel-edge multiplicity; loops never cross.

The exhaustive search fixes vertex 0 on side A, halving the 2^n subsets.
Ties between minimum-ratio cuts are broken by the lexicographically smallest
A as a sorted id list (so a shorter prefix beats its extensions).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .covers import CoveredGraph
from .errors import (
    DegenerateCutError,
    DisconnectedGraphError,
    SizeCapError,
    ValidationError,
)
from .multigraph import MultiGraph, is_connected

EXACT = "exact"
UPPER_BOUND = "upper_bound"

METHOD_BRUTE_FORCE = "brute_force"
METHOD_LEMMA_CUT = "lemma_cut"
METHOD_SWEEP = "sweep"

DEFAULT_BRUTE_FORCE_CAP = 26
_CHUNK_BITS = 20


@dataclass(frozen=True)
class Cut:
    """A vertex bipartition with its crossing count and expansion ratio."""

    side_a: tuple[int, ...]
    side_b: tuple[int, ...]
    crossing_edges: int
    ratio: Fraction

    def to_json_dict(self) -> dict:
        return {
            "side_a": list(self.side_a),
            "side_b": list(self.side_b),
            "crossing_edges": self.crossing_edges,
            "ratio": str(self.ratio),
        }


@dataclass(frozen=True)
class CheegerResult:
    """A Cheeger value together with the cut witnessing it."""

    value: Fraction
    witness: Cut
    certified: str  # EXACT or UPPER_BOUND
    method: str  # METHOD_BRUTE_FORCE, METHOD_LEMMA_CUT, or METHOD_SWEEP

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "value": str(self.value),
            "certified": self.certified,
            "method": self.method,
            "witness": self.witness.to_json_dict(),
        }


def cut_ratio(g: MultiGraph, side_a: Iterable[int]) -> Cut:
    """Exact crossing count and ratio for the bipartition (side_a, complement)."""
    a_set = set(side_a)
    for v in a_set:
        if not (isinstance(v, (int, np.integer)) and 0 <= v < g.num_vertices):
            raise ValidationError(f"vertex id {v!r} out of range")
    if not a_set:
        raise DegenerateCutError("side A is empty")
    if len(a_set) == g.num_vertices:
        raise DegenerateCutError("side A is the whole vertex set")
    crossing = 0
    for u, v in g.edges:
        if u != v and ((u in a_set) != (v in a_set)):
            crossing += 1
    side_a_sorted = tuple(sorted(int(v) for v in a_set))
    side_b_sorted = tuple(v for v in range(g.num_vertices) if v not in a_set)
    smaller = min(len(side_a_sorted), len(side_b_sorted))
    return Cut(
        side_a=side_a_sorted,
        side_b=side_b_sorted,
        crossing_edges=crossing,
        ratio=Fraction(crossing, smaller),
    )


def verify_witness(g: MultiGraph, result: CheegerResult) -> None:
    """Recompute the witness cut and insist it matches the claimed value."""
    cut = cut_ratio(g, result.witness.side_a)
    if (
        cut.crossing_edges != result.witness.crossing_edges
        or cut.ratio != result.witness.ratio
        or cut.ratio != result.value
    ):
        raise ValidationError(
            f"witness does not re-verify: recomputed {cut.crossing_edges} crossing "
            f"edges and ratio {cut.ratio}, claimed {result.witness.crossing_edges} "
            f"and {result.value}"
        )


def _bit_reverse(masks: np.ndarray, width: int) -> np.ndarray:
    """Reverse the low `width` bits of each uint64 (vectorized)."""
    v = masks.astype(np.uint64)
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    v = ((v >> np.uint64(1)) & m1) | ((v & m1) << np.uint64(1))
    v = ((v >> np.uint64(2)) & m2) | ((v & m2) << np.uint64(2))
    v = ((v >> np.uint64(4)) & m4) | ((v & m4) << np.uint64(4))
    v = v.byteswap()
    return v >> np.uint64(64 - width)


def _edge_multiplicities(g: MultiGraph) -> list[tuple[int, int, int]]:
    counts = Counter((u, v) for u, v in g.edges if u != v)
    return [(u, v, m) for (u, v), m in sorted(counts.items())]


def _mask_to_tuple(mask: int, width: int) -> tuple[int, ...]:
    return tuple(v for v in range(width) if (mask >> v) & 1)


def exact_cheeger(
    g: MultiGraph, max_vertices: int = DEFAULT_BRUTE_FORCE_CAP
) -> CheegerResult:
    """Exhaustive minimum over all 2^(n-1) - 1 bipartitions.

    The enumeration runs over fixed-size chunks of the subset range with a
    deterministic minimum-and-tiebreak reduction, so any partitioning of the
    range (serial or parallel) yields the identical result.
    """
    n = g.num_vertices
    if n < 2:
        raise DegenerateCutError(
            "cheeger constant needs at least two vertices to form a bipartition"
        )
    if n > max_vertices:
        raise SizeCapError(
            f"graph has {n} vertices, above the brute-force cap {max_vertices}"
        )
    if n > 62:
        raise SizeCapError("brute force is limited to 62 vertices (uint64 masks)")
    if not is_connected(g):
        raise DisconnectedGraphError(
            "cheeger constant of a disconnected graph degenerates to 0; "
            "refusing the trivial answer"
        )
    edge_mults = _edge_multiplicities(g)
    total = (1 << (n - 1)) - 1  # subsets containing vertex 0, minus the full set
    best_crossing = best_side = -1
    best_tuple: tuple[int, ...] | None = None
    chunk = 1 << _CHUNK_BITS
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        k = np.arange(start, stop, dtype=np.uint64)
        masks = (k << np.uint64(1)) | np.uint64(1)
        crossing = np.zeros(masks.shape, dtype=np.uint64)
        for u, v, mult in edge_mults:
            diff = ((masks >> np.uint64(u)) ^ (masks >> np.uint64(v))) & np.uint64(1)
            if mult == 1:
                crossing += diff
            else:
                crossing += diff * np.uint64(mult)
        size_a = np.bitwise_count(masks).astype(np.uint64)
        side = np.minimum(size_a, np.uint64(n) - size_a)
        ratio = crossing / side
        i_min = int(np.argmin(ratio))
        c, s = int(crossing[i_min]), int(side[i_min])
        if best_crossing >= 0 and c * best_side > best_crossing * s:
            continue
        # Tie resolution: bit-reversed mask order equals sorted-list order
        # within one |A| size class (the lowest differing vertex belongs to
        # the smaller set), so reduce each class to one finalist and compare
        # the few finalists as decoded tuples (which also honors the
        # shorter-prefix-wins rule across sizes).
        ties = np.nonzero(ratio == ratio[i_min])[0]
        tie_masks = masks[ties]
        tie_sizes = size_a[ties]
        chunk_best: tuple[int, ...] | None = None
        for size in np.unique(tie_sizes):
            group = tie_masks[tie_sizes == size]
            winner = int(group[int(np.argmax(_bit_reverse(group, n)))])
            decoded = _mask_to_tuple(winner, n)
            if chunk_best is None or decoded < chunk_best:
                chunk_best = decoded
        assert chunk_best is not None
        if (
            best_crossing < 0
            or c * best_side < best_crossing * s
            or (c * best_side == best_crossing * s and chunk_best < best_tuple)
        ):
            best_crossing, best_side, best_tuple = c, s, chunk_best
    assert best_tuple is not None
    cut = cut_ratio(g, best_tuple)
    if cut.ratio != Fraction(best_crossing, best_side):
        raise ValidationError("internal: enumerated minimum disagrees with recount")
    return CheegerResult(
        value=cut.ratio, witness=cut, certified=EXACT, method=METHOD_BRUTE_FORCE
    )


def lemma_cut(cover: CoveredGraph) -> CheegerResult:
    """The certified cut splitting fibers on their last bitvector coordinate.

    Side A holds the fibers whose last coordinate is 0.  Exactly the lifts of
    the last cotree edge cross, so the ratio is 2^r / (2^(r-1) #V(base)) =
    2 / #V(base).  Any coordinate would do; the last is fixed for determinism.
    """
    r = cover.rank
    if r < 1:
        raise ValidationError("trivial cover (rank 0) has no coordinate cut")
    high_bit = 1 << (r - 1)
    side_a = [
        vid for vid, (_, a) in enumerate(cover.vertex_fiber) if not a & high_bit
    ]
    cut = cut_ratio(cover.graph, side_a)
    return CheegerResult(
        value=cut.ratio, witness=cut, certified=UPPER_BOUND, method=METHOD_LEMMA_CUT
    )


def sweep_cut(g: MultiGraph, second_eigenvector: Sequence[float]) -> CheegerResult:
    """Best prefix cut of the vertices sorted by eigenvector value.

    Ties in the eigenvector are broken by vertex id; ties between equal-ratio
    prefixes keep the shortest prefix.  The result is an upper bound on the
    Cheeger constant (and equals it whenever the optimum cut is a prefix).
    """
    n = g.num_vertices
    vec = list(second_eigenvector)
    if len(vec) != n:
        raise ValidationError(f"eigenvector has length {len(vec)}, graph has {n} vertices")
    if n < 2:
        raise DegenerateCutError("sweep cut needs at least two vertices")
    if not is_connected(g):
        raise DisconnectedGraphError("sweep cut requires a connected graph")
    order = sorted(range(n), key=lambda v: (vec[v], v))
    adjacency: list[Counter] = [Counter() for _ in range(n)]
    nonloop_degree = [0] * n
    for u, v in g.edges:
        if u == v:
            continue
        adjacency[u][v] += 1
        adjacency[v][u] += 1
        nonloop_degree[u] += 1
        nonloop_degree[v] += 1
    in_a = [False] * n
    crossing = 0
    best: tuple[Fraction, int] | None = None
    for k, v in enumerate(order[:-1]):
        crossing += nonloop_degree[v] - 2 * sum(
            mult for nb, mult in adjacency[v].items() if in_a[nb]
        )
        in_a[v] = True
        size = k + 1
        ratio = Fraction(crossing, min(size, n - size))
        if best is None or ratio < best[0]:
            best = (ratio, size)
    assert best is not None
    cut = cut_ratio(g, order[: best[1]])
    return CheegerResult(
        value=cut.ratio, witness=cut, certified=UPPER_BOUND, method=METHOD_SWEEP
    )
