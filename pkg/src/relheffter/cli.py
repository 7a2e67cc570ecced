"""Command-line front end: construct, verify, knight, embed."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import constructions as cons
from .group import GroupError
from .heffter import (
    HeffterParams,
    VerificationReport,
    verify_archdeacon,
    verify_integer,
    verify_relative_heffter,
)
from .orderings import (
    LiftSpec,
    Orientation,
    is_globally_simple,
    knight_search,
    knight_tour,
    nine_diagonal_orientation,
    lift_solution,
    orientation_to_orderings,
    search_lift_shape,
)
from .pfarray import PFArray, Skeleton
from .topology import (
    CayleyGraph,
    CertificationError,
    base_cycles,
    build_rho0,
    develop_and_verify,
    heffter_genus_formula,
    trace_faces,
    two_color_check,
    verify_orthogonal,
)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def _load_array(path: Path, v: int | None = None) -> PFArray:
    text = path.read_text()
    if path.suffix == ".json":
        data = json.loads(text)
        if "cells" in data and data["cells"] and "v" not in data["cells"][0]:
            raise UsageError(f"{path} looks like a skeleton file, not an array")
        return PFArray.from_json(data)
    if path.suffix == ".csv":
        if v is None:
            raise UsageError("CSV input requires --v (the group order)")
        return PFArray.from_csv(text, v)
    raise UsageError(f"unsupported input format: {path}")


def _load_array_or_skeleton(path: Path, v: int | None = None) -> PFArray | Skeleton:
    if path.suffix == ".json":
        data = json.loads(path.read_text())
        if "group" not in data:
            return Skeleton.from_json(data)
        return PFArray.from_json(data)
    return _load_array(path, v)


def _emit(payload: dict) -> None:
    json.dump(payload, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _write_outputs(obj: PFArray | Skeleton, out: str | None) -> list[str]:
    if out is None:
        return []
    paths = []
    json_path = Path(out + ".json")
    json_path.write_text(json.dumps(obj.to_json(), indent=2, sort_keys=True) + "\n")
    paths.append(str(json_path))
    if isinstance(obj, PFArray) and obj.spec.is_cyclic_single:
        csv_path = Path(out + ".csv")
        csv_path.write_text(obj.to_csv())
        paths.append(str(csv_path))
    return paths


def _square_params(array: PFArray, t: int) -> HeffterParams:
    counts_r = {len(array.row(i)) for i in range(1, array.m + 1)}
    counts_c = {len(array.col(j)) for j in range(1, array.n + 1)}
    if len(counts_r) != 1 or len(counts_c) != 1:
        raise UsageError("rows/columns do not have uniform fill counts")
    s, k = counts_r.pop(), counts_c.pop()
    params = HeffterParams(array.m, array.n, s, k, t)
    if not array.spec.is_cyclic_single or array.spec.orders[0] != params.v:
        raise UsageError(
            f"array group {array.spec.orders} is not Z_{{2nk+t}} = Z_{params.v}"
        )
    return params


# -- construct ----------------------------------------------------------


def cmd_construct(args: argparse.Namespace) -> int:
    family = args.family
    report: VerificationReport | None = None
    payload: dict = {"family": family}

    if family in ("h-n-3", "h-2n-3", "h7", "h9"):
        if args.n is None:
            raise UsageError("--n is required")
        builder = {
            "h-n-3": (cons.build_h_n_3, lambda n: n),
            "h-2n-3": (cons.build_h_2n_3, lambda n: 2 * n),
            "h7": (cons.build_h7, lambda n: 7),
            "h9": (cons.build_h9, lambda n: 9),
        }[family]
        try:
            array = builder[0](args.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        t = builder[1](args.n)
        report = verify_integer(array, _square_params(array, t))
        payload["t"] = t
        payload["globally_simple"] = is_globally_simple(array)
        obj: PFArray | Skeleton = array
    elif family == "B":
        required = (args.m, args.n, args.d, args.i1, args.i2, args.j1, args.j2)
        if any(x is None for x in required):
            raise UsageError("B requires --m --n --d --i1 --i2 --j1 --j2")
        try:
            obj = cons.build_B(args.m, args.n, args.d, args.i1, args.i2, args.j1, args.j2)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        # the gadget alone only promises zero row/column sums
        report = verify_archdeacon(obj)
        report.violations = [
            (t, m) for t, m in report.violations if t in ("row-sum", "col-sum")
        ]
    elif family == "archdeacon-composite":
        if args.base is None or args.d is None:
            raise UsageError("archdeacon-composite requires --base and --d")
        base = _load_array(Path(args.base), args.v)
        try:
            obj = cons.build_archdeacon_composite(base, args.d)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        report = verify_archdeacon(obj)
        payload["globally_simple"] = is_globally_simple(obj)
    elif family == "skeleton-cor39":
        if args.n is None or args.k is None:
            raise UsageError("skeleton-cor39 requires --n and --k")
        try:
            obj = cons.build_skeleton_cor39(args.n, args.k)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown family {family}")

    payload["artifacts"] = _write_outputs(obj, args.out)
    if report is not None:
        payload["report"] = report.to_json()
    payload["status"] = "ok" if report is None or report.valid else "violation"
    _emit(payload)
    return EXIT_OK if payload["status"] == "ok" else EXIT_VIOLATION


# -- verify -------------------------------------------------------------


def cmd_verify(args: argparse.Namespace) -> int:
    array = _load_array(Path(args.input), args.v)
    payload: dict = {"input": args.input}
    violations: list = []

    if args.archdeacon:
        report = verify_archdeacon(array)
        payload["archdeacon"] = report.to_json()
        violations.extend(report.violations)
    if args.t is not None:
        params = _square_params(array, args.t)
        report = (verify_integer if args.integer else verify_relative_heffter)(array, params)
        key = "integer" if args.integer else "relative"
        payload[key] = report.to_json()
        violations.extend(report.violations)
    elif args.integer:
        raise UsageError("--integer requires --t")
    if args.globally_simple:
        ok = is_globally_simple(array)
        payload["globally_simple"] = ok
        if not ok:
            violations.append(("globally-simple", "a natural row/column ordering is not simple"))
    if not (args.archdeacon or args.t is not None or args.globally_simple):
        raise UsageError("nothing to verify: pass --t, --archdeacon, or --globally-simple")

    payload["status"] = "ok" if not violations else "violation"
    _emit(payload)
    return EXIT_OK if not violations else EXIT_VIOLATION


# -- knight -------------------------------------------------------------


def _parse_orientation(text: str) -> Orientation:
    try:
        rows, cols = text.split(",")
        return Orientation.from_strings(rows, cols)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"bad orientation {text!r}: expected e.g. '+++,++-'") from exc


def cmd_knight(args: argparse.Namespace) -> int:
    obj = _load_array_or_skeleton(Path(args.input), args.v)
    skel = obj if isinstance(obj, Skeleton) else obj.skeleton
    payload: dict = {"input": args.input, "filled_cells": len(skel.cells)}

    if args.search:
        if args.lift:
            try:
                spec = LiftSpec(tuple(int(x) for x in args.lift.split(",")))
                sol = search_lift_shape(spec, skel.n)
            except ValueError as exc:
                raise UsageError(str(exc)) from exc
        else:
            sol = knight_search(skel, parity_prefilter=not args.no_parity_filter)
        if sol is None:
            payload.update(status="violation", solution=None)
            _emit(payload)
            return EXIT_VIOLATION
        orientation = sol
    elif args.lemma410:
        if skel.m != skel.n:
            raise UsageError("--lemma410 requires a square input")
        try:
            orientation = nine_diagonal_orientation(skel.n)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    elif args.orientation:
        orientation = _parse_orientation(args.orientation)
        if len(orientation.r) != skel.m or len(orientation.c) != skel.n:
            raise UsageError("orientation length does not match the array")
    else:
        raise UsageError("pass one of --search, --orientation, --lemma410")

    if args.lift:
        try:
            indices = tuple(int(x) for x in args.lift.split(","))
            spec = LiftSpec(indices)
            lifted = lift_solution(spec, skel.n, orientation)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
        big_skel = spec.skeleton(skel.n + spec.M)
        orbit, ok = knight_tour(big_skel, lifted, min(big_skel.cells))
        rs, cs = lifted.to_strings()
        payload.update(
            lifted_n=skel.n + spec.M, orientation_rows=rs, orientation_cols=cs,
            orbit_length=len(orbit), is_solution=ok,
        )
        if args.emit_orbit:
            payload["orbit"] = [[r, c] for r, c in orbit]
    else:
        orbit, ok = knight_tour(skel, orientation, min(skel.cells))
        rs, cs = orientation.to_strings()
        payload.update(
            orientation_rows=rs, orientation_cols=cs,
            orbit_length=len(orbit), is_solution=ok,
        )
        if args.emit_orbit:
            payload["orbit"] = [[r, c] for r, c in orbit]

    payload["status"] = "ok" if payload["is_solution"] else "violation"
    _emit(payload)
    return EXIT_OK if payload["is_solution"] else EXIT_VIOLATION


# -- embed --------------------------------------------------------------


def cmd_embed(args: argparse.Namespace) -> int:
    array = _load_array(Path(args.input), args.v)
    orientation = _parse_orientation(args.orientation)
    if len(orientation.r) != array.m or len(orientation.c) != array.n:
        raise UsageError("orientation length does not match the array")
    if not is_globally_simple(array):
        raise UsageError("input array is not globally simple")

    ordering = orientation_to_orderings(array, orientation)
    try:
        rho0 = build_rho0(array, ordering)
    except CertificationError as exc:
        _emit({"input": args.input, "status": "violation", "error": str(exc)})
        return EXIT_VIOLATION

    graph = CayleyGraph.from_entries(array)
    report = trace_faces(graph, rho0)
    two_colorable = two_color_check(report, array, ordering)

    d_col = develop_and_verify(base_cycles(array, ordering, by="col"), graph)
    rev_rows = orientation_to_orderings(array, Orientation(
        tuple(-x for x in orientation.r), orientation.c))
    d_row = develop_and_verify(base_cycles(array, rev_rows, by="row"), graph)
    orthogonal = verify_orthogonal(d_row, d_col)

    payload = {
        "input": args.input,
        "embedding": report.to_json(),
        "two_colorable": two_colorable,
        "row_decomposition": d_row.to_json(),
        "col_decomposition": d_col.to_json(),
        "orthogonal": orthogonal,
    }
    if args.t is not None:
        params = _square_params(array, args.t)
        payload["embedding"]["formula_genus"] = heffter_genus_formula(
            params.m, params.n, params.s, params.k, params.t
        )
        report.formula_genus = payload["embedding"]["formula_genus"]
    ok = two_colorable and orthogonal and (
        report.formula_genus is None or report.formula_genus == report.genus
    )
    payload["status"] = "ok" if ok else "violation"
    _emit(payload)
    return EXIT_OK if ok else EXIT_VIOLATION


# -- parser -------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relheffter",
        description="Construct, verify, and certify relative Heffter and Archdeacon arrays.",
    )
    parser.add_argument(
        "--jobs", type=int, default=int(os.environ.get("HEFFTER_JOBS", "1")),
        help="worker hint for search/certification loops (current implementation is serial)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build an array family and verify it")
    p.add_argument("family", choices=[
        "h-n-3", "h-2n-3", "h7", "h9", "B", "archdeacon-composite", "skeleton-cor39",
    ])
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--i1", type=int)
    p.add_argument("--i2", type=int)
    p.add_argument("--j1", type=int)
    p.add_argument("--j2", type=int)
    p.add_argument("--base", help="base array file for archdeacon-composite")
    p.add_argument("--v", type=int, help="group order when the base is CSV")
    p.add_argument("--out", help="output path prefix (writes PREFIX.json and PREFIX.csv)")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="verify an array file")
    p.add_argument("input")
    p.add_argument("--t", type=int, help="subgroup order for the relative Heffter check")
    p.add_argument("--v", type=int, help="group order when the input is CSV")
    p.add_argument("--integer", action="store_true")
    p.add_argument("--archdeacon", action="store_true")
    p.add_argument("--globally-simple", dest="globally_simple", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("knight", help="solve or check the Crazy Knight's Tour Problem")
    p.add_argument("input")
    p.add_argument("--v", type=int)
    p.add_argument("--search", action="store_true")
    p.add_argument("--orientation", help="row and column signs, e.g. '+++,++-'")
    p.add_argument("--lemma410", action="store_true")
    p.add_argument("--lift", help="comma-separated diagonal indices of the family to lift")
    p.add_argument("--no-parity-filter", action="store_true")
    p.add_argument("--emit-orbit", action="store_true")
    p.set_defaults(func=cmd_knight)

    p = sub.add_parser("embed", help="trace and certify the biembedding")
    p.add_argument("input")
    p.add_argument("--v", type=int)
    p.add_argument("--t", type=int, help="subgroup order to cross-check the genus formula")
    p.add_argument("--orientation", required=True)
    p.set_defaults(func=cmd_embed)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (OSError, json.JSONDecodeError, GroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
