"""Command-line front end: tower, cover, cheeger, spectrum.

Exit codes (frozen contract):
  0  success
  2  configuration or input validation error
  3  tower truncated by the vertex cap while --strict is set
  4  computation infeasible for the input (size cap, degenerate cut)
  5  spectral computation rejected its input (cap, isolated vertex)
  6  filesystem I/O error

Errors are emitted as one-line JSON objects on stderr:
  {"error": "<ErrorClass>", "message": "..."}

All artifacts are byte-deterministic for a fixed command line.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import cheeger as cheeger_mod
from . import spectrum as spectrum_mod
from .covers import z2_cover
from .errors import (
    ConvergenceError,
    CovertowerError,
    DegenerateCutError,
    DisconnectedGraphError,
    SizeCapError,
    SpecMismatchError,
    SpectrumError,
    ValidationError,
)
from .multigraph import spanning_tree
from .seeds import resolve_graph_input
from .svgplot import tower_svg
from .tower import (
    DEFAULT_VERTEX_CAP,
    iterate_tower,
    report_to_csv_text,
    report_to_json_dict,
)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_TRUNCATED = 3
EXIT_INFEASIBLE = 4
EXIT_SPECTRUM = 5
EXIT_IO = 6

_ERROR_CODES: tuple[tuple[type, int], ...] = (
    (SizeCapError, EXIT_INFEASIBLE),
    (DegenerateCutError, EXIT_INFEASIBLE),
    (SpectrumError, EXIT_SPECTRUM),
    (ConvergenceError, EXIT_SPECTRUM),
    (SpecMismatchError, EXIT_CONFIG),
    (DisconnectedGraphError, EXIT_CONFIG),
    (ValidationError, EXIT_CONFIG),
    (CovertowerError, EXIT_CONFIG),
    (OSError, EXIT_IO),
)


class _TruncatedStrict(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    """Validated tower-run settings assembled from the command line."""

    seed: str
    levels: int
    vertex_cap: int
    cheeger_cap: int
    spectrum_cap: int
    kinds: tuple[str, ...]
    out_prefix: str
    formats: tuple[str, ...]
    strict: bool

    def __post_init__(self):
        if self.levels < 0:
            raise ValidationError("levels must be nonnegative")
        if min(self.vertex_cap, self.cheeger_cap, self.spectrum_cap) <= 0:
            raise ValidationError("caps must be positive")

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        return cls(
            seed=args.seed,
            levels=args.levels,
            vertex_cap=args.vertex_cap,
            cheeger_cap=args.cheeger_cap,
            spectrum_cap=args.spectrum_cap,
            kinds=(spectrum_mod.COMBINATORIAL, spectrum_mod.NORMALIZED),
            out_prefix=args.out,
            formats=(args.format,) if args.format else ("json", "csv", "svg"),
            strict=args.strict,
        )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="covertower",
        description=(
            "Iterated homology double covers of multigraphs, with certified "
            "Cheeger cuts and Laplacian spectral gaps."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tower = sub.add_parser("tower", help="build a cover tower and write report artifacts")
    tower.add_argument("--seed", required=True, help="builtin name or graph JSON path")
    tower.add_argument("--levels", type=int, required=True, help="covering steps to take")
    tower.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    tower.add_argument("--cheeger-cap", type=int, default=cheeger_mod.DEFAULT_BRUTE_FORCE_CAP)
    tower.add_argument("--spectrum-cap", type=int, default=spectrum_mod.DEFAULT_SPECTRUM_CAP)
    tower.add_argument("--strict", action="store_true", help="exit 3 when the cap truncates")
    tower.add_argument(
        "--out",
        default="tower_report",
        help="artifact path prefix (writes PREFIX.json, PREFIX.csv, PREFIX.svg)",
    )
    tower.add_argument(
        "--format",
        choices=("json", "csv", "svg"),
        default=None,
        help="restrict output to one artifact (default: all three)",
    )

    cover = sub.add_parser("cover", help="construct an iterated cover of a graph")
    cover.add_argument("input", help="builtin name or graph JSON path")
    cover.add_argument("--iterate", type=int, default=1, help="number of covering steps")
    cover.add_argument("--vertex-cap", type=int, default=DEFAULT_VERTEX_CAP)
    cover.add_argument("--out", default=None, help="output path (default: stdout)")
    cover.add_argument("--format", choices=("json", "dot"), default="json")

    cheeger = sub.add_parser("cheeger", help="compute a Cheeger value with witness cut")
    cheeger.add_argument("input", help="builtin name or graph JSON path")
    cheeger.add_argument("--method", choices=("exact", "lemma", "sweep"), default="exact")
    cheeger.add_argument("--cheeger-cap", type=int, default=cheeger_mod.DEFAULT_BRUTE_FORCE_CAP)
    cheeger.add_argument("--out", default=None, help="output path (default: stdout)")

    spectrum = sub.add_parser("spectrum", help="compute a Laplacian spectral summary")
    spectrum.add_argument("input", help="builtin name or graph JSON path")
    spectrum.add_argument(
        "--kind",
        choices=(spectrum_mod.COMBINATORIAL, spectrum_mod.NORMALIZED),
        default=spectrum_mod.COMBINATORIAL,
    )
    spectrum.add_argument("--spectrum-cap", type=int, default=spectrum_mod.DEFAULT_SPECTRUM_CAP)
    spectrum.add_argument("--out", default=None, help="output path (default: stdout)")

    return parser


def cmd_tower(args: argparse.Namespace) -> int:
    config = RunConfig.from_args(args)
    seed, description = resolve_graph_input(config.seed)
    report = iterate_tower(
        seed,
        config.levels,
        config.vertex_cap,
        cheeger_cap=config.cheeger_cap,
        spectrum_cap=config.spectrum_cap,
        kinds=config.kinds,
        seed_description=description,
    )
    artifacts = {
        "json": lambda: json.dumps(report_to_json_dict(report), indent=2) + "\n",
        "csv": lambda: report_to_csv_text(report),
        "svg": lambda: tower_svg(report),
    }
    for fmt in config.formats:
        _write_text(f"{config.out_prefix}.{fmt}", artifacts[fmt]())
    if report.truncated and config.strict:
        raise _TruncatedStrict(
            f"tower truncated at level {report.truncated_level} by vertex cap "
            f"{report.vertex_cap}"
        )
    return EXIT_OK


def cmd_cover(args: argparse.Namespace) -> int:
    if args.iterate < 0:
        raise ValidationError("--iterate must be nonnegative")
    g, _ = resolve_graph_input(args.input)
    for _ in range(args.iterate):
        g = z2_cover(g, spanning_tree(g), vertex_cap=args.vertex_cap).graph
    text = g.to_json() if args.format == "json" else g.to_dot()
    _emit(args.out, text)
    return EXIT_OK


def cmd_cheeger(args: argparse.Namespace) -> int:
    g, _ = resolve_graph_input(args.input)
    if args.method == "exact":
        result = cheeger_mod.exact_cheeger(g, max_vertices=args.cheeger_cap)
        target = g
        extra: dict = {"input_vertices": g.num_vertices}
    elif args.method == "lemma":
        # The certified cut lives on the homology cover of the input, giving
        # the bound h(cover) <= 2 / #V(input).
        cover = z2_cover(g, spanning_tree(g))
        result = cheeger_mod.lemma_cut(cover)
        target = cover.graph
        extra = {
            "input_vertices": g.num_vertices,
            "cover_vertices": cover.graph.num_vertices,
            "cover_edges": cover.graph.num_edges,
            "cover_rank": cover.rank,
        }
    else:
        result = cheeger_mod.sweep_cut(g, spectrum_mod.fiedler_vector(g))
        target = g
        extra = {"input_vertices": g.num_vertices}
    cheeger_mod.verify_witness(target, result)
    doc = result.to_json_dict()
    doc.update(extra)
    _emit(args.out, json.dumps(doc, indent=2) + "\n")
    return EXIT_OK


def cmd_spectrum(args: argparse.Namespace) -> int:
    g, _ = resolve_graph_input(args.input)
    summary = spectrum_mod.full_spectrum(g, args.kind, max_vertices=args.spectrum_cap)
    _emit(args.out, json.dumps(summary.to_json_dict(), indent=2) + "\n")
    return EXIT_OK


def _write_text(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _emit(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        _write_text(path, text)


def _error_exit_code(exc: BaseException) -> int:
    for klass, code in _ERROR_CODES:
        if isinstance(exc, klass):
            return code
    return EXIT_CONFIG


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "tower": cmd_tower,
        "cover": cmd_cover,
        "cheeger": cmd_cheeger,
        "spectrum": cmd_spectrum,
    }
    try:
        return handlers[args.command](args)
    except _TruncatedStrict as exc:
        print(
            json.dumps({"error": "Truncated", "message": str(exc)}),
            file=sys.stderr,
        )
        return EXIT_TRUNCATED
    except (CovertowerError, OSError) as exc:
        print(
            json.dumps({"error": type(exc).__name__, "message": str(exc)}),
            file=sys.stderr,
        )
        return _error_exit_code(exc)


if __name__ == "__main__":
    sys.exit(main())
