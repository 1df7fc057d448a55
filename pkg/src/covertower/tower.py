"""Iterated cover towers: construction loop, per-level analysis, reports.

Level 0 is the seed graph; level n+1 is the homology double cover of level n
over a freshly computed spanning tree.  Counts multiply by 2^rank per level,
so the loop stops at the first level whose predicted size exceeds the vertex
cap and records that level with predicted (exact big-integer) counts instead
of constructing it.

Per-level wall-clock timings are kept on the in-memory report but excluded
from serialized artifacts, which must be byte-identical across reruns.
"""
from __future__ import annotations

import csv
import io
import time
from dataclasses import dataclass
from fractions import Fraction

from . import cheeger as cheeger_mod
from . import spectrum as spectrum_mod
from .covers import z2_cover
from .errors import DisconnectedGraphError, ValidationError
from .multigraph import MultiGraph, is_connected, rank_pi1, spanning_tree

DEFAULT_VERTEX_CAP = 10**6


@dataclass(frozen=True)
class TowerLevel:
    """One row of a tower report; analysis fields are None when infeasible."""

    level: int
    constructed: bool
    vertex_count: int
    edge_count: int
    rank: int
    lemma_bound: Fraction | None
    cheeger_value: Fraction | None
    cheeger_certified: str | None
    cheeger_method: str | None
    lambda1_combinatorial: float | None
    lambda1_normalized: float | None
    elapsed_seconds: float


@dataclass(frozen=True)
class TowerReport:
    seed_description: str
    levels_requested: int
    vertex_cap: int
    cheeger_cap: int
    spectrum_cap: int
    truncated: bool
    truncated_level: int | None
    levels: tuple[TowerLevel, ...]


def iterate_tower(
    seed: MultiGraph,
    levels: int,
    vertex_cap: int = DEFAULT_VERTEX_CAP,
    *,
    cheeger_cap: int = cheeger_mod.DEFAULT_BRUTE_FORCE_CAP,
    spectrum_cap: int = spectrum_mod.DEFAULT_SPECTRUM_CAP,
    kinds: tuple[str, ...] = (spectrum_mod.COMBINATORIAL, spectrum_mod.NORMALIZED),
    seed_description: str = "custom",
) -> TowerReport:
    """Build and analyze the tower over the seed graph.

    levels is the number of covering steps requested; the report gets one
    entry per realized level plus, when the cap bites, one truncated entry
    holding the predicted counts of the first unconstructible level.
    `kinds` selects which Laplacian conventions get a lambda1 column.
    """
    if levels < 0:
        raise ValidationError("levels must be nonnegative")
    if vertex_cap <= 0 or cheeger_cap <= 0 or spectrum_cap <= 0:
        raise ValidationError("caps must be positive")
    for kind in kinds:
        if kind not in (spectrum_mod.COMBINATORIAL, spectrum_mod.NORMALIZED):
            raise ValidationError(f"unknown laplacian kind {kind!r}")
    if seed.num_vertices == 0 or not is_connected(seed):
        raise DisconnectedGraphError("tower seed must be a nonempty connected graph")

    rows: list[TowerLevel] = []
    truncated = False
    truncated_level: int | None = None

    start = time.perf_counter()
    current = seed
    rows.append(
        _analyze_level(0, seed, None, cheeger_cap, spectrum_cap, kinds, start)
    )

    for level in range(1, levels + 1):
        rank = rank_pi1(current)
        predicted_vertices = current.num_vertices * (1 << rank)
        if predicted_vertices > vertex_cap:
            predicted_edges = current.num_edges * (1 << rank)
            rows.append(
                TowerLevel(
                    level=level,
                    constructed=False,
                    vertex_count=predicted_vertices,
                    edge_count=predicted_edges,
                    rank=predicted_edges - predicted_vertices + 1,
                    lemma_bound=(
                        Fraction(2, current.num_vertices) if rank >= 1 else None
                    ),
                    cheeger_value=None,
                    cheeger_certified=None,
                    cheeger_method=None,
                    lambda1_combinatorial=None,
                    lambda1_normalized=None,
                    elapsed_seconds=0.0,
                )
            )
            truncated = True
            truncated_level = level
            break
        t0 = time.perf_counter()
        cover = z2_cover(current, spanning_tree(current), vertex_cap=vertex_cap)
        lemma: Fraction | None = None
        if cover.rank >= 1:
            lemma_result = cheeger_mod.lemma_cut(cover)
            cheeger_mod.verify_witness(cover.graph, lemma_result)
            lemma = lemma_result.value
        rows.append(
            _analyze_level(
                level, cover.graph, lemma, cheeger_cap, spectrum_cap, kinds, t0
            )
        )
        current = cover.graph

    return TowerReport(
        seed_description=seed_description,
        levels_requested=levels,
        vertex_cap=vertex_cap,
        cheeger_cap=cheeger_cap,
        spectrum_cap=spectrum_cap,
        truncated=truncated,
        truncated_level=truncated_level,
        levels=tuple(rows),
    )


def _analyze_level(
    level: int,
    g: MultiGraph,
    lemma_bound: Fraction | None,
    cheeger_cap: int,
    spectrum_cap: int,
    kinds: tuple[str, ...],
    t0: float,
) -> TowerLevel:
    lambda1_comb: float | None = None
    lambda1_norm: float | None = None
    fiedler = None
    if g.num_vertices <= spectrum_cap:
        need_vectors = g.num_vertices > cheeger_cap and g.num_vertices >= 2
        if spectrum_mod.COMBINATORIAL in kinds or need_vectors:
            w, vecs = spectrum_mod.laplacian_eigensystem(
                g, spectrum_mod.COMBINATORIAL, vectors=need_vectors
            )
            if spectrum_mod.COMBINATORIAL in kinds:
                lambda1_comb = spectrum_mod.summarize_spectrum(
                    g, spectrum_mod.COMBINATORIAL, w
                ).lambda1
            if need_vectors:
                fiedler = vecs[:, 1]
        if spectrum_mod.NORMALIZED in kinds:
            w_norm, _ = spectrum_mod.laplacian_eigensystem(
                g, spectrum_mod.NORMALIZED, vectors=False
            )
            lambda1_norm = spectrum_mod.summarize_spectrum(
                g, spectrum_mod.NORMALIZED, w_norm
            ).lambda1

    cheeger_value: Fraction | None = None
    certified: str | None = None
    method: str | None = None
    if 2 <= g.num_vertices <= cheeger_cap:
        result = cheeger_mod.exact_cheeger(g, max_vertices=cheeger_cap)
        cheeger_mod.verify_witness(g, result)
        cheeger_value, certified, method = result.value, result.certified, result.method
    else:
        best: tuple[Fraction, str] | None = None
        if lemma_bound is not None:
            best = (lemma_bound, cheeger_mod.METHOD_LEMMA_CUT)
        if fiedler is not None:
            sweep = cheeger_mod.sweep_cut(g, fiedler)
            cheeger_mod.verify_witness(g, sweep)
            if best is None or sweep.value < best[0]:
                best = (sweep.value, cheeger_mod.METHOD_SWEEP)
        if best is not None:
            cheeger_value, certified, method = best[0], cheeger_mod.UPPER_BOUND, best[1]

    return TowerLevel(
        level=level,
        constructed=True,
        vertex_count=g.num_vertices,
        edge_count=g.num_edges,
        rank=rank_pi1(g),
        lemma_bound=lemma_bound,
        cheeger_value=cheeger_value,
        cheeger_certified=certified,
        cheeger_method=method,
        lambda1_combinatorial=lambda1_comb,
        lambda1_normalized=lambda1_norm,
        elapsed_seconds=time.perf_counter() - t0,
    )


# -- serialization -----------------------------------------------------------

LEVEL_FIELDS = (
    "level",
    "constructed",
    "vertices",
    "edges",
    "rank",
    "lemma_bound",
    "cheeger_value",
    "cheeger_certified",
    "cheeger_method",
    "lambda1_combinatorial",
    "lambda1_normalized",
)


def _level_values(row: TowerLevel) -> dict:
    return {
        "level": row.level,
        "constructed": row.constructed,
        "vertices": row.vertex_count,
        "edges": row.edge_count,
        "rank": row.rank,
        "lemma_bound": row.lemma_bound,
        "cheeger_value": row.cheeger_value,
        "cheeger_certified": row.cheeger_certified,
        "cheeger_method": row.cheeger_method,
        "lambda1_combinatorial": row.lambda1_combinatorial,
        "lambda1_normalized": row.lambda1_normalized,
    }


def _json_value(value):
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return spectrum_mod.round_sig(value)
    raise TypeError(f"unexpected report value {value!r}")


def _csv_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{spectrum_mod.round_sig(value):.12g}"
    return str(value)


def report_to_json_dict(report: TowerReport, include_timings: bool = False) -> dict:
    levels = []
    for row in report.levels:
        doc = {key: _json_value(val) for key, val in _level_values(row).items()}
        if include_timings:
            doc["elapsed_seconds"] = row.elapsed_seconds
        levels.append(doc)
    return {
        "schema": 1,
        "seed": report.seed_description,
        "levels_requested": report.levels_requested,
        "vertex_cap": report.vertex_cap,
        "cheeger_cap": report.cheeger_cap,
        "spectrum_cap": report.spectrum_cap,
        "truncated": report.truncated,
        "truncated_level": report.truncated_level,
        "levels": levels,
    }


def report_to_csv_text(report: TowerReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(LEVEL_FIELDS)
    for row in report.levels:
        values = _level_values(row)
        writer.writerow([_csv_value(values[key]) for key in LEVEL_FIELDS])
    return buffer.getvalue()
