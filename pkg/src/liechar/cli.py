"""Command line front end.

Subcommands: analyze, forms, cohomology, curvature, catalog, verify.
Reports go to stdout as JSON with sorted keys (or --format text);
diagnostics go to stderr. Exit codes: 0 success, 1 mathematical
validation failure, 2 parse/IO/usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from pathlib import Path

from . import catalog, cohomology, forms, geometry, verify
from .algebra import LieAlgebra
from .cohomology import BETTI_DIM_CAP
from .fileformat import AlgebraFileError, parse_algebra, serialize_algebra
from .forms import PERMUTATION_CAP
from .linalg import symmetric_signature

EXIT_OK = 0
EXIT_MATH = 1
EXIT_USAGE = 2


class CliError(Exception):
    """Usage or I/O failure; maps to exit code 2."""


def _load_algebra(source: str) -> tuple[str, LieAlgebra]:
    if source.startswith("catalog:"):
        name = source[len("catalog:") :]
        try:
            entry = catalog.get(name, kind="algebra")
        except KeyError as exc:
            raise CliError(str(exc)) from exc
        return name, entry.payload
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as exc:
        raise CliError(f"cannot read {source}: {exc}") from exc
    try:
        return path.stem, parse_algebra(text)
    except AlgebraFileError as exc:
        raise CliError(f"{source}: {exc}") from exc


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _subset_key(subset: tuple[int, ...]) -> str:
    return ",".join(str(i) for i in subset)


def _emit(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        for line in _text_lines(report, prefix=""):
            print(line)


def _text_lines(tree: dict, prefix: str) -> list[str]:
    lines = []
    for key in sorted(tree):
        value = tree[key]
        if isinstance(value, dict):
            lines.append(f"{prefix}{key}:")
            lines.extend(_text_lines(value, prefix + "  "))
        elif isinstance(value, list):
            lines.append(f"{prefix}{key}: " + " ".join(str(v) for v in value))
        else:
            lines.append(f"{prefix}{key}: {value}")
    return lines


def _analyze_report(name: str, alg: LieAlgebra, max_degree: int | None) -> tuple[dict, int]:
    start = time.monotonic()
    report: dict = {"name": name, "dim": alg.dim}
    validation = alg.validate()
    report["jacobi_ok"] = validation.ok
    if not validation.ok:
        report["jacobi_violations"] = [list(v) for v in validation.violations]
        report["timing"] = {"seconds": int(time.monotonic() - start)}
        return report, EXIT_MATH
    if alg.dim > BETTI_DIM_CAP:
        raise CliError(f"dimension {alg.dim} exceeds the Betti table cap ({BETTI_DIM_CAP})")
    cap = alg.dim if max_degree is None else min(max_degree, alg.dim)
    report["solvable"] = alg.is_solvable()
    report["nilpotent"] = alg.is_nilpotent()
    report["semisimple"] = alg.is_semisimple()
    report["unimodular"] = alg.is_unimodular()
    pos, neg, zero = symmetric_signature(alg.killing())
    report["killing_signature"] = [pos, neg, zero]
    report["betti"] = [cohomology.betti(alg, k) for k in range(cap + 1)]
    classes = {}
    for degree, status in cohomology.class_report(alg).items():
        if degree <= min(cap, PERMUTATION_CAP):
            classes[str(degree)] = status
    report["classes"] = classes
    report["timing"] = {"seconds": int(time.monotonic() - start)}
    return report, EXIT_OK


def _cmd_analyze(args: argparse.Namespace) -> int:
    name, alg = _load_algebra(args.source)
    report, code = _analyze_report(name, alg, args.max_degree)
    _emit(report, args.format)
    return code


def _cmd_forms(args: argparse.Namespace) -> int:
    name, alg = _load_algebra(args.source)
    validation = alg.validate()
    if not validation.ok:
        _emit({"name": name, "jacobi_ok": False, "jacobi_violations": [list(v) for v in validation.violations]}, args.format)
        return EXIT_MATH
    try:
        form = forms.trace_form(alg, args.degree)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    components = {_subset_key(subset): _fraction_str(value) for subset, value in sorted(form.components.items())}
    for subset in cohomology.cochain_basis(alg.dim, args.degree):
        components.setdefault(_subset_key(subset), "0")
    report = {"name": name, "dim": alg.dim, "degree": args.degree, "components": components}
    _emit(report, args.format)
    return EXIT_OK


def _cmd_cohomology(args: argparse.Namespace) -> int:
    name, alg = _load_algebra(args.source)
    validation = alg.validate()
    if not validation.ok:
        _emit({"name": name, "jacobi_ok": False, "jacobi_violations": [list(v) for v in validation.violations]}, args.format)
        return EXIT_MATH
    k = args.degree
    if not 0 <= k <= alg.dim:
        raise CliError(f"degree {k} outside 0..{alg.dim}")
    if alg.dim > BETTI_DIM_CAP:
        raise CliError(f"dimension {alg.dim} exceeds the Betti table cap ({BETTI_DIM_CAP})")
    report: dict = {"name": name, "dim": alg.dim, "degree": k, "betti": cohomology.betti(alg, k)}
    if 1 <= k <= min(alg.dim, PERMUTATION_CAP):
        w = forms.trace_form(alg, k)
        closed = cohomology.is_closed(alg, w)
        report["w_closed"] = closed
        if w.is_zero():
            report["w_status"] = cohomology.STATUS_ZERO
            report["w_primitive"] = None
        elif closed:
            exact, primitive = cohomology.is_exact(alg, w)
            report["w_status"] = cohomology.STATUS_EXACT if exact else cohomology.STATUS_NONZERO_CLASS
            if exact and primitive is not None:
                report["w_primitive"] = {
                    _subset_key(subset): _fraction_str(value) for subset, value in sorted(primitive.components.items())
                }
            else:
                report["w_primitive"] = None
        else:
            report["w_status"] = "not closed"
            report["w_primitive"] = None
    _emit(report, args.format)
    return EXIT_OK


def _curvature_sweep(frame: geometry.FrameField, points_per_axis: int) -> dict[str, float]:
    lattice = frame.chart.lattice(points_per_axis)
    pairs = list(zip(lattice, reversed(lattice)))
    stats = {
        "r1_max": max(geometry.r1(frame, x).max_abs for x in lattice),
        "r2_max": max(geometry.r2(frame, x).max_abs for x in lattice),
        "torsion_max": max(geometry.sup_norm(geometry.torsion(geometry.gamma(frame, x))) for x in lattice),
        "w_max": max(geometry.sup_norm(geometry.w_form(frame, x)) for x in lattice),
        "r_full_max": max(geometry.r_full(frame, x, y).max_abs for x, y in pairs),
        "r_full_diagonal_max": max(geometry.r_full(frame, x, x).max_abs for x in lattice),
        "dw_tr_r2_residual": max(geometry.dw_tr_r2_residual(frame, x) for x in lattice),
    }
    return stats


def _cmd_curvature(args: argparse.Namespace) -> int:
    try:
        entry = catalog.get(args.frame, kind="frame")
    except KeyError as exc:
        raise CliError(str(exc)) from exc
    frame = entry.payload
    if args.h is not None:
        if args.h <= 0:
            raise CliError("--h must be positive")
        try:
            frame = geometry.FrameField(chart=frame.chart.with_step(args.h), matrix=frame.matrix)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    if args.lattice < 2:
        raise CliError("--lattice must be at least 2")
    coarse = _curvature_sweep(frame, args.lattice)
    halved = geometry.FrameField(chart=frame.chart.with_step(frame.chart.h / 2), matrix=frame.matrix)
    fine = _curvature_sweep(halved, args.lattice)
    ratios = {}
    for key in ("r1_max", "dw_tr_r2_residual", "r_full_diagonal_max"):
        # a ratio only means something when the coarse residual is signal,
        # not float noise
        ratios[key] = round(coarse[key] / fine[key], 3) if coarse[key] > 1e-10 and fine[key] > 0 else None
    report = {
        "frame": args.frame,
        "h": frame.chart.h,
        "lattice_points": len(frame.chart.lattice(args.lattice)),
        "max_norms": {k: float(f"{v:.12e}") for k, v in coarse.items()},
        "halved_h_ratios": ratios,
    }
    _emit(report, args.format)
    return EXIT_OK


def _cmd_catalog(args: argparse.Namespace) -> int:
    if args.action == "list":
        for entry in catalog.list_entries():
            print(f"{entry.kind:15s} {entry.name}")
        return EXIT_OK
    try:
        entry = catalog.get(args.name)
    except KeyError as exc:
        raise CliError(str(exc)) from exc
    report: dict = {"name": entry.name, "kind": entry.kind, "note": entry.note}
    payload = entry.payload
    if isinstance(payload, LieAlgebra):
        report["dim"] = payload.dim
        report["definition"] = serialize_algebra(payload).strip().splitlines()
    else:
        chart = payload.chart
        report["dim"] = chart.dim
        report["chart"] = {
            "lower": list(chart.lower),
            "upper": list(chart.upper),
            "h": chart.h,
        }
        if isinstance(payload, geometry.LocalGroupMultiplication):
            report["identity"] = [float(v) for v in payload.identity]
    _emit(report, args.format)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    try:
        results = verify.run_suites([args.suite] if args.suite else None)
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from exc
    failures = 0
    for result in results:
        if result.ok:
            print(f"PASS {result.suite}.{result.name}")
        else:
            failures += 1
            print(f"FAIL {result.suite}.{result.name}: {result.detail}")
    print(f"{len(results) - failures} passed, {failures} failed")
    return EXIT_OK if failures == 0 else EXIT_MATH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liechar",
        description="Characteristic invariants of local Lie groups: exact Lie-algebra"
        " computations and finite-difference chart geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "text"), default="json", help="output style")

    p_analyze = sub.add_parser("analyze", help="full report for an algebra (file path or catalog:name)")
    p_analyze.add_argument("source")
    p_analyze.add_argument("--max-degree", type=int, default=None, help="cap Betti/class degrees")
    add_format(p_analyze)
    p_analyze.set_defaults(func=_cmd_analyze)

    p_forms = sub.add_parser("forms", help="components of the degree-k trace form")
    p_forms.add_argument("source")
    p_forms.add_argument("--degree", type=int, required=True)
    add_format(p_forms)
    p_forms.set_defaults(func=_cmd_forms)

    p_coh = sub.add_parser("cohomology", help="Betti number and trace-form class in degree k")
    p_coh.add_argument("source")
    p_coh.add_argument("--degree", type=int, required=True)
    add_format(p_coh)
    p_coh.set_defaults(func=_cmd_cohomology)

    p_curv = sub.add_parser("curvature", help="lattice curvature statistics for a catalog frame")
    p_curv.add_argument("--frame", required=True, help="catalog frame name")
    p_curv.add_argument("--h", type=float, default=None, help="finite-difference step")
    p_curv.add_argument("--lattice", type=int, default=5, help="points per axis")
    add_format(p_curv)
    p_curv.set_defaults(func=_cmd_curvature)

    p_cat = sub.add_parser("catalog", help="list or show built-in entries")
    cat_sub = p_cat.add_subparsers(dest="action", required=True)
    cat_list = cat_sub.add_parser("list")
    cat_list.set_defaults(func=_cmd_catalog)
    cat_show = cat_sub.add_parser("show")
    cat_show.add_argument("name")
    add_format(cat_show)
    cat_show.set_defaults(func=_cmd_catalog)

    p_verify = sub.add_parser("verify", help="run invariant verification suites")
    p_verify.add_argument("--suite", choices=sorted(verify.SUITES), default=None)
    p_verify.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
