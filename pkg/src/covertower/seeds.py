"""Named builtin seed graphs and input resolution for the CLI.

Builtins:
  figure8    one vertex with two loops
  theta      two vertices joined by three parallel edges
  cycle:n    the n-cycle; cycle:1 is a loop and cycle:2 a doubled edge
  bouquet:r  one vertex with r loops (figure8 = bouquet:2)

Cycles and bouquets use one edge per (vertex, generator-step) pair, so
cycle:2 really has two parallel edges; that convention keeps every cover
level satisfying #E = 2 #V on the bouquet towers.
"""
from __future__ import annotations

import os

from .errors import ValidationError
from .multigraph import MultiGraph, build_graph


def builtin_seed(name: str) -> MultiGraph | None:
    """The named builtin graph, or None when the name is not a builtin."""
    if name == "figure8":
        return build_graph(1, [(0, 0), (0, 0)])
    if name == "theta":
        return build_graph(2, [(0, 1), (0, 1), (0, 1)])
    if name.startswith("cycle:"):
        n = _positive_int(name, "cycle")
        if n == 1:
            return build_graph(1, [(0, 0)])
        return build_graph(n, [(i, (i + 1) % n) for i in range(n)])
    if name.startswith("bouquet:"):
        r = _positive_int(name, "bouquet", minimum=0)
        return build_graph(1, [(0, 0)] * r)
    return None


def _positive_int(name: str, prefix: str, minimum: int = 1) -> int:
    raw = name[len(prefix) + 1 :]
    try:
        value = int(raw)
    except ValueError:
        raise ValidationError(f"bad {prefix} parameter {raw!r}") from None
    if value < minimum:
        raise ValidationError(f"{prefix} parameter must be >= {minimum}, got {value}")
    return value


def resolve_graph_input(spec: str) -> tuple[MultiGraph, str]:
    """Resolve a seed name or JSON file path to (graph, description)."""
    g = builtin_seed(spec)
    if g is not None:
        return g, spec
    if os.path.exists(spec):
        with open(spec, "r", encoding="utf-8") as fh:
            return MultiGraph.from_json(fh.read()), spec
    raise ValidationError(
        f"{spec!r} is neither a builtin seed (figure8, theta, cycle:n, bouquet:r) "
        "nor an existing file"
    )
