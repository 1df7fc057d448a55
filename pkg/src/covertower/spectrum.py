"""Graph Laplacians, spectral summaries, and discrete Cheeger inequalities.

Degree convention: a loop adds 2 to both the adjacency diagonal and the
degree, so loops cancel exactly in the combinatorial Laplacian L = D - A.
Normalized spectra are computed from entrywise-symmetric formulas so the
matrix handed to the eigensolver is symmetric to the last bit.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cheeger import CheegerResult
from .eigen import symmetric_eigensystem
from .errors import SpectrumError, ValidationError
from .multigraph import MultiGraph

COMBINATORIAL = "combinatorial"
NORMALIZED = "normalized"

DEFAULT_SPECTRUM_CAP = 2048


@dataclass(frozen=True)
class SpectralSummary:
    """Sorted Laplacian spectrum with its first nonzero eigenvalue.

    lambda1 is None when no eigenvalue exceeds the zero tolerance (single
    vertex, or loops-only graphs); a disconnected graph reports lambda1 = 0.0
    with zero_multiplicity > 1 as the flag.
    """

    kind: str
    eigenvalues: tuple[float, ...]
    lambda1: float | None
    zero_multiplicity: int
    max_degree: int

    def to_json_dict(self) -> dict:
        return {
            "schema": 1,
            "kind": self.kind,
            "eigenvalues": [round_sig(x) for x in self.eigenvalues],
            "lambda1": round_sig(self.lambda1) if self.lambda1 is not None else None,
            "zero_multiplicity": self.zero_multiplicity,
            "max_degree": self.max_degree,
        }


def round_sig(x: float, digits: int = 12) -> float:
    """Round to the given significant digits (stable float formatting)."""
    return float(f"{x:.{digits}g}")


def adjacency_matrix(g: MultiGraph) -> np.ndarray:
    """Integer adjacency with multiplicity; a loop adds 2 on the diagonal."""
    a = np.zeros((g.num_vertices, g.num_vertices), dtype=np.int64)
    for u, v in g.edges:
        if u == v:
            a[u, u] += 2
        else:
            a[u, v] += 1
            a[v, u] += 1
    return a


def laplacian(g: MultiGraph, kind: str = COMBINATORIAL) -> np.ndarray:
    """Combinatorial L = D - A, or the symmetric normalized variant."""
    if kind not in (COMBINATORIAL, NORMALIZED):
        raise ValidationError(f"unknown laplacian kind {kind!r}")
    a = adjacency_matrix(g)
    deg = np.asarray(g.degrees, dtype=np.int64)
    if kind == COMBINATORIAL:
        lap = np.diag(deg) - a
        return lap.astype(float)
    if np.any(deg == 0):
        isolated = int(np.argmin(deg))
        raise SpectrumError(
            f"normalized laplacian undefined: vertex {isolated} is isolated"
        )
    # Entrywise-symmetric construction: off-diagonal -A_uv / sqrt(deg_u deg_v),
    # diagonal (deg_v - A_vv) / deg_v.
    denom = np.sqrt(np.outer(deg, deg).astype(float))
    lap = -(a.astype(float)) / denom
    np.fill_diagonal(lap, (deg - np.diag(a)).astype(float) / deg.astype(float))
    return lap


def laplacian_eigensystem(
    g: MultiGraph, kind: str = COMBINATORIAL, vectors: bool = True
) -> tuple[np.ndarray, np.ndarray | None]:
    """Full eigensystem of the chosen Laplacian, eigenvalues ascending."""
    return symmetric_eigensystem(laplacian(g, kind), vectors=vectors)


def zero_tolerance(eigenvalues: np.ndarray) -> float:
    radius = float(np.max(np.abs(eigenvalues))) if len(eigenvalues) else 0.0
    return 1e-9 * max(1.0, radius)


def summarize_spectrum(g: MultiGraph, kind: str, eigenvalues: np.ndarray) -> SpectralSummary:
    tol = zero_tolerance(eigenvalues)
    zero_multiplicity = int(np.sum(np.abs(eigenvalues) <= tol))
    nonzero = eigenvalues[eigenvalues > tol]
    if zero_multiplicity > 1:
        lambda1: float | None = 0.0
    elif len(nonzero):
        lambda1 = float(nonzero[0])
    else:
        lambda1 = None
    return SpectralSummary(
        kind=kind,
        eigenvalues=tuple(float(x) for x in eigenvalues),
        lambda1=lambda1,
        zero_multiplicity=zero_multiplicity,
        max_degree=max(g.degrees, default=0),
    )


def full_spectrum(
    g: MultiGraph, kind: str = COMBINATORIAL, max_vertices: int = DEFAULT_SPECTRUM_CAP
) -> SpectralSummary:
    if g.num_vertices > max_vertices:
        raise SpectrumError(
            f"graph has {g.num_vertices} vertices, above the dense-solver cap {max_vertices}"
        )
    w, _ = laplacian_eigensystem(g, kind, vectors=False)
    return summarize_spectrum(g, kind, w)


def fiedler_vector(g: MultiGraph) -> np.ndarray:
    """Eigenvector for the second-smallest combinatorial Laplacian eigenvalue."""
    if g.num_vertices < 2:
        raise ValidationError("fiedler vector needs at least two vertices")
    _, v = laplacian_eigensystem(g, COMBINATORIAL, vectors=True)
    return v[:, 1].copy()


@dataclass(frozen=True)
class SandwichReport:
    """Result of checking lambda1/2 <= h <= sqrt(2 d lambda1) on a regular graph."""

    performed: bool
    skip_reason: str | None
    degree: int | None
    lambda1: float | None
    h_value: Fraction
    lower_ok: bool | None
    upper_ok: bool | None
    lower_slack: float | None
    upper_slack: float | None

    @property
    def holds(self) -> bool:
        return bool(self.lower_ok) and (self.upper_ok is not False)


def cheeger_sandwich(
    g: MultiGraph,
    h: CheegerResult,
    s: SpectralSummary,
    tol: float = 1e-8,
) -> SandwichReport:
    """Check the discrete Cheeger inequalities against an exact Cheeger value.

    Requires the combinatorial spectrum of a connected regular graph.  With a
    non-exact (upper-bound) h only the lower inequality is checked, since
    lambda1/2 <= h_true <= h_upper still holds.
    """
    if s.kind != COMBINATORIAL:
        raise ValidationError("cheeger sandwich uses the combinatorial spectrum")
    degrees = set(g.degrees)
    if len(degrees) != 1:
        return SandwichReport(
            performed=False,
            skip_reason="graph is not regular",
            degree=None,
            lambda1=s.lambda1,
            h_value=h.value,
            lower_ok=None,
            upper_ok=None,
            lower_slack=None,
            upper_slack=None,
        )
    if s.zero_multiplicity > 1:
        return SandwichReport(
            performed=False,
            skip_reason="graph is disconnected",
            degree=next(iter(degrees)),
            lambda1=s.lambda1,
            h_value=h.value,
            lower_ok=None,
            upper_ok=None,
            lower_slack=None,
            upper_slack=None,
        )
    d = next(iter(degrees))
    lam = s.lambda1 if s.lambda1 is not None else 0.0
    h_float = float(h.value)
    lower_ok = lam / 2.0 <= h_float + tol
    lower_slack = h_float - lam / 2.0
    if h.certified == "exact":
        bound = math.sqrt(2.0 * d * lam)
        upper_ok: bool | None = h_float <= bound + tol
        upper_slack: float | None = bound - h_float
    else:
        upper_ok = None
        upper_slack = None
    return SandwichReport(
        performed=True,
        skip_reason=None,
        degree=d,
        lambda1=lam,
        h_value=h.value,
        lower_ok=lower_ok,
        upper_ok=upper_ok,
        lower_slack=lower_slack,
        upper_slack=upper_slack,
    )


def spectrum_inclusion(
    base: SpectralSummary, cover: SpectralSummary, tol: float = 1e-9
) -> bool:
    """Whether the base eigenvalue multiset embeds in the cover's, within tol.

    Greedy two-pointer matching on the ascending lists; correct because both
    lists are sorted.
    """
    if base.kind != cover.kind:
        raise ValidationError(
            f"kind mismatch: {base.kind!r} vs {cover.kind!r}"
        )
    i = 0
    cover_vals = cover.eigenvalues
    for value in base.eigenvalues:
        while i < len(cover_vals) and cover_vals[i] < value - tol:
            i += 1
        if i >= len(cover_vals) or abs(cover_vals[i] - value) > tol:
            return False
        i += 1
    return True
