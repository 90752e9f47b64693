"""Command-line front end.

Four subcommands share one pipeline: ``analyze`` computes the census
and coefficients, ``ensemble`` runs the null model, ``score`` applies
driving scores against supplied intervals, and ``report`` chains all
three.  Every command writes a ``report.json`` into --out, plus
``nodes.csv`` (analyze/score/report) and ``replicas.csv``
(ensemble/report).

Exit codes: 0 success, 1 input parse error, 2 validation error,
3 configuration error.  All randomness flows from --seed; outputs are
byte-identical across reruns with the same flags.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import __version__
from .census import NotAPath, TooLarge, census, opsahl
from .coefficients import (
    SEMANTICS,
    InvalidNode,
    format_value,
    global_profile,
    local_profile,
)
from .errors import BimotifError
from .graph import (
    BipartiteGraph,
    BipartiteViolation,
    DimensionMismatch,
    EmptyInput,
    MalformedInput,
    NonBinaryEntry,
    Side,
    detect_format,
    load_graph,
)
from .null_model import (
    NULL_MODELS,
    EnsembleConfig,
    EnsembleStats,
    InvalidConfig,
    run_ensemble,
)
from .scoring import (
    AllUndefined,
    CIBand,
    DegenerateMidpoint,
    DrivingScoreReport,
    MissingCI,
    classify,
    load_ci_bands,
)

log = logging.getLogger("bimotif")

SCHEMA_VERSION = 1

_PARSE_ERRORS = (
    EmptyInput,
    NonBinaryEntry,
    DimensionMismatch,
    MalformedInput,
    OSError,
    UnicodeDecodeError,
    json.JSONDecodeError,
)
_VALIDATION_ERRORS = (BipartiteViolation, TooLarge, InvalidNode, NotAPath, AllUndefined)
_CONFIG_ERRORS = (MissingCI, InvalidConfig, DegenerateMidpoint)

_ARROWS = {"below": "↓", "inside": "=", "above": "↑", None: "n/a"}


class _Parser(argparse.ArgumentParser):
    """argparse that reports flag misuse with the config-error exit code."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(3, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="bimotif",
        description="Structure-aware clustering analysis for two-mode networks.",
    )
    parser.add_argument("--version", action="version", version=f"bimotif {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p):
        p.add_argument("--input", required=True, help="path to the network file")
        p.add_argument(
            "--format",
            choices=("auto", "edgelist", "biadjacency"),
            default="auto",
            help="input format (default: detected from the file)",
        )
        p.add_argument(
            "--side",
            choices=("primary", "secondary"),
            default="primary",
            help="which side to analyze (default: primary)",
        )
        p.add_argument(
            "--semantics",
            choices=SEMANTICS,
            default="configuration",
            help="closure counting policy (default: configuration)",
        )
        p.add_argument("--out", default=".", help="output directory (default: .)")

    def ensemble_flags(p):
        p.add_argument("--runs", type=int, default=100, help="replica count (default: 100)")
        p.add_argument("--seed", type=int, default=0, help="base random seed (default: 0)")
        p.add_argument(
            "--swaps-per-edge",
            type=int,
            default=10,
            help="swap attempts per edge for the degree model (default: 10)",
        )
        p.add_argument(
            "--null-model",
            choices=NULL_MODELS,
            default="density",
            help="replica generator (default: density)",
        )

    def score_flags(p, ci_required):
        p.add_argument(
            "--ci-file",
            required=ci_required,
            help="JSON with interval midpoints or a prior ensemble report",
        )
        p.add_argument(
            "--literal-divisor",
            action="store_true",
            help="average node scores over 4 instead of the defined components",
        )

    p = sub.add_parser("analyze", help="census, coefficients and the reference measure")
    common(p)

    p = sub.add_parser("ensemble", help="random-replica confidence intervals")
    common(p)
    ensemble_flags(p)

    p = sub.add_parser("score", help="driving scores against supplied intervals")
    common(p)
    score_flags(p, ci_required=True)

    p = sub.add_parser("report", help="analyze + ensemble + score in one run")
    common(p)
    ensemble_flags(p)
    score_flags(p, ci_required=False)

    return parser


def _float(x) -> Optional[float]:
    return None if x is None else float(x)


def _profile_json(p) -> dict:
    return {
        "cc": [_float(v) for v in p.cc],
        "cc_display": list(p.rounded()),
        "numerators": list(p.numerators),
        "denominators": list(p.denominators),
        "exact": [
            None if v is None else [v.numerator, v.denominator] for v in p.cc
        ],
    }


def _load(args) -> tuple[BipartiteGraph, dict]:
    fmt = args.format
    if fmt == "auto":
        fmt = detect_format(args.input)
    g, duplicates = load_graph(args.input, fmt)
    meta = {
        "path": args.input,
        "format": fmt,
        "primary_count": len(g.primary_labels),
        "secondary_count": len(g.secondary_labels),
        "edge_count": g.edge_count,
        "duplicate_rows": duplicates,
    }
    return g, meta


def _config_echo(args, fmt: str) -> dict:
    echo = {
        "command": args.command,
        "input": args.input,
        "format": fmt,
        "side": args.side,
        "semantics": args.semantics,
        "out": args.out,
        "runs": getattr(args, "runs", None),
        "seed": getattr(args, "seed", None),
        "swaps_per_edge": getattr(args, "swaps_per_edge", None),
        "null_model": getattr(args, "null_model", None),
        "ci_file": getattr(args, "ci_file", None),
        "literal_divisor": getattr(args, "literal_divisor", None),
    }
    return echo


def _report_skeleton(args, meta: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "tool": {"name": "bimotif", "version": __version__},
        "config": _config_echo(args, meta["format"]),
        "input": meta,
    }


def _write_json(out_dir: Path, obj: dict) -> None:
    path = out_dir / "report.json"
    with path.open("w", encoding="utf-8", newline="\n") as f:
        json.dump(obj, f, indent=2, allow_nan=False)
        f.write("\n")


def _analysis_sections(g: BipartiteGraph, side: Side, semantics: str):
    c = census(g, side)
    gp = global_profile(c, semantics)
    ops = opsahl(g, side)
    labels = g.labels(side)
    degrees = g.degree_sequence(side)
    nodes = []
    for i in range(c.node_count):
        lp = local_profile(c, i, semantics)
        nodes.append(
            {
                "label": labels[i],
                "degree": degrees[i],
                **_profile_json(lp),
                "opsahl_c": _float(ops.per_node_c[i]),
            }
        )
    sections = {
        "global": {"semantics": semantics, **_profile_json(gp)},
        "opsahl": {
            "tau_star": ops.tau_star,
            "tau_star_closed": ops.tau_star_closed,
            "c_star": _float(ops.c_star),
        },
        "nodes": nodes,
    }
    return c, sections


def _write_analyze_csv(out_dir: Path, sections: dict) -> None:
    with (out_dir / "nodes.csv").open("w", encoding="utf-8", newline="") as f:
        w = csv.writer(f)
        w.writerow(["label", "degree", "cc0", "cc1", "cc2", "cc3"])
        for n in sections["nodes"]:
            w.writerow([n["label"], n["degree"], *n["cc_display"]])


def _stats_json(stats: EnsembleStats) -> dict:
    return {
        "runs": stats.config.runs,
        "seed": stats.config.seed,
        "swaps_per_edge": stats.config.swaps_per_edge,
        "null_model": stats.config.null_model,
        "classes": [
            {
                "mean": c.mean,
                "std": c.std,
                "ci_low": c.ci_low,
                "ci_high": c.ci_high,
                "midpoint": c.midpoint,
                "defined_count": c.defined_count,
            }
            for c in stats.classes
        ],
        "replica_values": [list(row) for row in stats.replica_values],
    }


def _write_replicas_csv(out_dir: Path, stats: EnsembleStats) -> None:
    with (out_dir / "replicas.csv").open("w", encoding="utf-8", newline="") as f:
        w = csv.writer(f)
        w.writerow(["replica", "cc0", "cc1", "cc2", "cc3"])
        for r, row in enumerate(stats.replica_values):
            w.writerow(
                [r]
                + [
                    "n/a" if v is None else format_value(Fraction(v))
                    for v in row
                ]
            )


def _bands_json(bands, source: Optional[str]) -> dict:
    return {
        "source": source,
        "bands": [
            None
            if b is None
            else {
                "midpoint": _float(b.midpoint),
                "low": _float(b.low),
                "high": _float(b.high),
            }
            for b in bands
        ],
    }


def _score_sections(report: DrivingScoreReport) -> dict:
    nodes = []
    for n in report.nodes:
        nodes.append(
            {
                "label": n.label,
                "degree": n.degree,
                "cc": [_float(v) for v in n.local_cc],
                "cc_display": [format_value(v) for v in n.local_cc],
                "directions": list(n.directions),
                "ds": _float(n.ds),
                "ds_display": format_value(n.ds),
                "defined_components": n.defined_component_count,
                "influential": n.influential,
                "anti_driver": n.anti_driver,
            }
        )
    return {
        "ds_global": _float(report.ds_global),
        "ds_global_display": format_value(report.ds_global),
        "influential": list(report.influential_labels),
        "anti_drivers": list(report.anti_driver_labels),
        "nodes": nodes,
    }


def _write_score_csv(out_dir: Path, report: DrivingScoreReport) -> None:
    with (out_dir / "nodes.csv").open("w", encoding="utf-8", newline="") as f:
        f.write(f"# ds_global={format_value(report.ds_global)}\n")
        w = csv.writer(f)
        w.writerow(
            [
                "label",
                "degree",
                "cc0", "dir0",
                "cc1", "dir1",
                "cc2", "dir2",
                "cc3", "dir3",
                "ds",
                "influential",
            ]
        )
        for n in report.nodes:
            row = [n.label, n.degree]
            for v, d in zip(n.local_cc, n.directions):
                row.append(format_value(v))
                row.append(_ARROWS[d])
            row.append(format_value(n.ds))
            row.append("true" if n.influential else "false")
            w.writerow(row)


def _stats_bands(stats: EnsembleStats) -> tuple[Optional[CIBand], ...]:
    bands = []
    for c in stats.classes:
        if c.midpoint is None:
            bands.append(None)
        else:
            bands.append(
                CIBand(
                    Fraction(c.midpoint),
                    None if c.ci_low is None else Fraction(c.ci_low),
                    None if c.ci_high is None else Fraction(c.ci_high),
                )
            )
    return tuple(bands)


def _file_bands(args, side: Side):
    file_side, bands = load_ci_bands(args.ci_file)
    if file_side is not None and file_side is not side:
        raise InvalidConfig(
            f"--ci-file is for the {file_side.value} side, requested {side.value}"
        )
    return bands


def _cmd_analyze(args, out_dir: Path) -> None:
    g, meta = _load(args)
    side = Side(args.side)
    _, sections = _analysis_sections(g, side, args.semantics)
    obj = _report_skeleton(args, meta)
    obj.update(sections)
    _write_json(out_dir, obj)
    _write_analyze_csv(out_dir, sections)


def _cmd_ensemble(args, out_dir: Path) -> None:
    g, meta = _load(args)
    cfg = EnsembleConfig(
        runs=args.runs,
        seed=args.seed,
        swaps_per_edge=args.swaps_per_edge,
        side=Side(args.side),
        null_model=args.null_model,
        semantics=args.semantics,
    )
    stats = run_ensemble(g, cfg)
    obj = _report_skeleton(args, meta)
    obj["side"] = args.side
    obj["ensemble"] = _stats_json(stats)
    _write_json(out_dir, obj)
    _write_replicas_csv(out_dir, stats)


def _cmd_score(args, out_dir: Path) -> None:
    g, meta = _load(args)
    side = Side(args.side)
    bands = _file_bands(args, side)
    report = classify(
        g, bands, side=side, semantics=args.semantics,
        literal_divisor=args.literal_divisor,
    )
    obj = _report_skeleton(args, meta)
    obj["ci"] = _bands_json(bands, args.ci_file)
    obj["global"] = {"semantics": args.semantics, **_profile_json(report.global_cc)}
    obj["scores"] = _score_sections(report)
    _write_json(out_dir, obj)
    _write_score_csv(out_dir, report)


def _cmd_report(args, out_dir: Path) -> None:
    g, meta = _load(args)
    side = Side(args.side)
    c, sections = _analysis_sections(g, side, args.semantics)
    cfg = EnsembleConfig(
        runs=args.runs,
        seed=args.seed,
        swaps_per_edge=args.swaps_per_edge,
        side=side,
        null_model=args.null_model,
        semantics=args.semantics,
    )
    stats = run_ensemble(g, cfg)
    if args.ci_file:
        bands = _file_bands(args, side)
        ci_source = args.ci_file
    else:
        bands = _stats_bands(stats)
        ci_source = "ensemble"
    report = classify(
        g, bands, side=side, semantics=args.semantics,
        literal_divisor=args.literal_divisor, census_result=c,
    )
    obj = _report_skeleton(args, meta)
    obj.update(sections)
    obj["ensemble"] = _stats_json(stats)
    obj["ci"] = _bands_json(bands, ci_source)
    obj["scores"] = _score_sections(report)
    _write_json(out_dir, obj)
    _write_score_csv(out_dir, report)
    _write_replicas_csv(out_dir, stats)


_COMMANDS = {
    "analyze": _cmd_analyze,
    "ensemble": _cmd_ensemble,
    "score": _cmd_score,
    "report": _cmd_report,
}


def main(argv=None) -> int:
    logging.basicConfig(
        stream=sys.stderr, level=logging.WARNING, format="bimotif: %(levelname)s: %(message)s"
    )
    parser = build_parser()
    args = parser.parse_args(argv)
    out_dir = Path(args.out)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        _COMMANDS[args.command](args, out_dir)
    except _CONFIG_ERRORS as exc:
        log.error("%s", exc)
        return 3
    except _VALIDATION_ERRORS as exc:
        log.error("%s", exc)
        return 2
    except _PARSE_ERRORS as exc:
        log.error("%s", exc)
        return 1
    except BimotifError as exc:
        log.error("%s", exc)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
