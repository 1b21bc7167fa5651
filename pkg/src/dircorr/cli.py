"""Command-line interface: ``dircorr analyze | thresholds | scan``."""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict
from enum import Enum
from pathlib import Path

from . import scan as scan_mod
from .classify import ClassLabel, classify, unified_signature
from .errors import DircorrError
from .gaussian_core import (
    CovarianceMatrix,
    StsParams,
    is_physical,
    sts_covariance,
    symplectic_spectrum,
)
from .measures import correlation_report
from .teleport import teleport_report
from .thresholds import Criterion, bisection_threshold, closed_form_thresholds

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNPHYSICAL = 2


class CliError(Exception):
    pass


def _floats(text: str, count: int, what: str) -> list[float]:
    parts = [p.strip() for p in str(text).split(",")]
    if len(parts) != count:
        raise CliError(f"{what} expects {count} comma-separated numbers, got {text!r}")
    try:
        values = [float(p) for p in parts]
    except ValueError:
        raise CliError(f"{what}: cannot parse {text!r} as numbers") from None
    if not all(math.isfinite(v) for v in values):
        raise CliError(f"{what}: values must be finite")
    return values


def _round(value):
    """Round floats to 12 significant digits, recursively."""
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        if math.isnan(value):
            return None
        if math.isinf(value):
            return str(value)
        if value == 0.0:
            return 0.0
        return float(format(value, ".12g"))
    if isinstance(value, dict):
        return {str(k): _round(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_round(v) for v in value]
    return _round(float(value))


def _flatten(data, prefix=""):
    items = {}
    for key, value in data.items():
        name = f"{prefix}{key}"
        if isinstance(value, dict):
            items.update(_flatten(value, name + "."))
        elif isinstance(value, list):
            items[name] = ";".join(str(v) for v in value)
        else:
            items[name] = value
    return items


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, ".12g")
    return str(value)


def _render(data: dict, fmt: str) -> str:
    data = _round(data)
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    flat = _flatten(data)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(flat.keys())
        writer.writerow(_cell(v) for v in flat.values())
        return buf.getvalue()
    width = max(len(k) for k in flat)
    return "".join(f"{k:<{width}}  {_cell(v)}\n" for k, v in flat.items())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def analyze_state(cm: CovarianceMatrix, source: dict) -> tuple[dict, int]:
    """Full report dict and the exit code for one covariance matrix."""
    report = {
        "input": source,
        "covariance": asdict(cm),
        "physical": is_physical(cm),
    }
    try:
        report["spectrum"] = asdict(symplectic_spectrum(cm))
    except DircorrError as exc:
        report["spectrum"] = None
        report["spectrum_error"] = str(exc)

    flags, label = classify(cm)
    report["label"] = label.value
    report["flags"] = flags.to_dict()
    if label is ClassLabel.UNPHYSICAL:
        report.update(measures=None, unified=None, teleport=None)
        return report, EXIT_UNPHYSICAL

    report["measures"] = correlation_report(cm).to_dict()
    report["unified"] = {
        d: unified_signature(cm, d).to_dict() for d in ("A|B", "B|A")
    }
    report["teleport"] = None if flags.product else teleport_report(cm).to_dict()
    return report, EXIT_OK


def cmd_analyze(args) -> int:
    if args.sts is not None:
        r, nA, nB = _floats(args.sts, 3, "--sts")
        params = StsParams(r, nA, nB)
        cm = sts_covariance(params)
        source = {"sts": asdict(params)}
    else:
        n, m, c = _floats(args.cm, 3, "--cm")
        cm = CovarianceMatrix.from_sts_entries(n, m, c)
        source = {"cm": {"n": n, "m": m, "c": c}}
    report, code = analyze_state(cm, source)
    _emit(_render(report, args.format), args.out)
    return code


def cmd_thresholds(args) -> int:
    nA, nB = _floats(args.noise, 2, "--noise")
    result = {"noise": {"nA": nA, "nB": nB}, "thresholds": closed_form_thresholds(nA, nB).to_dict()}
    if args.check:
        result["bisection"] = {
            c.value: bisection_threshold(nA, nB, c) for c in Criterion
        }
    _emit(_render(result, args.format), args.out)
    return EXIT_OK


def _scan_spec(args) -> scan_mod.ScanSpec:
    if args.spec:
        try:
            data = json.loads(Path(args.spec).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise CliError(f"cannot read scan spec {args.spec!r}: {exc}") from None
        if args.quantities:
            data["quantities"] = args.quantities.split(",")
        return scan_mod.ScanSpec.from_dict(data)

    quantities = tuple(args.quantities.split(",")) if args.quantities else scan_mod.QUANTITIES
    sts_flags = (args.r, args.grid_na, args.grid_nb)
    raw_flags = (args.c, args.grid_n, args.grid_m)
    if any(v is not None for v in sts_flags) and any(v is not None for v in raw_flags):
        raise CliError("use either --r/--grid-na/--grid-nb or --c/--grid-n/--grid-m")
    if any(v is not None for v in raw_flags):
        if None in raw_flags:
            raise CliError("RAW_NM_GRID needs --c, --grid-n and --grid-m")
        return scan_mod.ScanSpec(
            scan_mod.ScanMode.RAW_NM_GRID,
            args.c,
            scan_mod.Axis.parse(args.grid_n),
            scan_mod.Axis.parse(args.grid_m),
            quantities,
        )
    if None in sts_flags:
        raise CliError("STS_NOISE_GRID needs --r, --grid-na and --grid-nb (or --spec)")
    return scan_mod.ScanSpec(
        scan_mod.ScanMode.STS_NOISE_GRID,
        args.r,
        scan_mod.Axis.parse(args.grid_na),
        scan_mod.Axis.parse(args.grid_nb),
        quantities,
    )


def cmd_scan(args) -> int:
    spec = _scan_spec(args)
    result = scan_mod.run_scan(spec, workers=args.workers)
    text = scan_mod.to_json(result) if args.format == "json" else scan_mod.to_csv(result)
    _emit(text, args.out)
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """Usage errors exit with status 1 like every other validation failure."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="dircorr",
        description="Entanglement, EPR steering and discord of two-mode squeezed thermal states.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="all measures, classes and teleportation report of one state")
    state = p.add_mutually_exclusive_group(required=True)
    state.add_argument("--sts", metavar="r,nA,nB", help="squeezing and thermal occupations")
    state.add_argument("--cm", metavar="n,m,c", help="CM entries (c1 = c, c2 = -c)")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("thresholds", help="squeezing thresholds for given thermal noise")
    p.add_argument("--noise", metavar="nA,nB", required=True)
    p.add_argument("--check", action="store_true", help="also run the bisection oracle")
    p.add_argument("--format", choices=("json", "csv", "table"), default="json")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_thresholds)

    p = sub.add_parser("scan", help="grid sweep to CSV or JSON")
    p.add_argument("--spec", metavar="FILE", help="JSON scan specification")
    p.add_argument("--r", type=float, help="fixed squeezing (STS_NOISE_GRID)")
    p.add_argument("--grid-na", metavar="lo:hi:steps")
    p.add_argument("--grid-nb", metavar="lo:hi:steps")
    p.add_argument("--c", type=float, help="fixed correlation (RAW_NM_GRID)")
    p.add_argument("--grid-n", metavar="lo:hi:steps")
    p.add_argument("--grid-m", metavar="lo:hi:steps")
    p.add_argument("--quantities", metavar="Q1,Q2,...",
                   help=f"subset of {','.join(scan_mod.QUANTITIES)} (default: all)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("json", "csv"), default="csv")
    p.add_argument("--out", metavar="PATH")
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CliError, DircorrError, ValueError) as exc:
        print(f"dircorr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
