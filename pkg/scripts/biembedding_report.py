#!/usr/bin/env python3
"""End-to-end biembedding pipeline for a construction family member: build the
array, find a Knight's Tour solution, trace the faces, and certify the
two cycle decompositions."""

import argparse
import json
import sys
from dataclasses import dataclass

from relheffter.constructions import build_h7, build_h9, build_h_2n_3, build_h_n_3
from relheffter.heffter import HeffterParams, verify_integer
from relheffter.orderings import Orientation, knight_search, orientation_to_orderings
from relheffter.topology import (
    CayleyGraph,
    base_cycles,
    build_rho0,
    develop_and_verify,
    heffter_genus_formula,
    trace_faces,
    two_color_check,
    verify_orthogonal,
)

BUILDERS = {
    "h-n-3": (build_h_n_3, 3, lambda n: n),
    "h-2n-3": (build_h_2n_3, 3, lambda n: 2 * n),
    "h7": (build_h7, 7, lambda n: 7),
    "h9": (build_h9, 9, lambda n: 9),
}


@dataclass
class PipelineConfig:
    family: str
    n: int
    emit_faces: bool = False


def run(config: PipelineConfig) -> dict:
    build, k, t_of_n = BUILDERS[config.family]
    n, t = config.n, t_of_n(config.n)
    array = build(n)
    params = HeffterParams.square(n, k, t)
    assert verify_integer(array, params).valid

    solution = knight_search(array)
    if solution is None:
        return {"family": config.family, "n": n, "status": "no-knight-solution"}
    ordering = orientation_to_orderings(array, solution)

    rho0 = build_rho0(array, ordering)
    graph = CayleyGraph.from_entries(array)
    report = trace_faces(graph, rho0)
    report.formula_genus = heffter_genus_formula(n, n, k, k, t)
    colored = two_color_check(report, array, ordering)

    cols = develop_and_verify(base_cycles(array, ordering, by="col"), graph)
    reversed_rows = orientation_to_orderings(
        array, Orientation(tuple(-x for x in solution.r), solution.c)
    )
    rows = develop_and_verify(base_cycles(array, reversed_rows, by="row"), graph)

    result = {
        "family": config.family,
        "n": n,
        "t": t,
        "orientation": solution.to_strings(),
        "embedding": report.to_json(),
        "two_colorable": colored,
        "orthogonal": verify_orthogonal(rows, cols),
        "status": "ok" if colored and report.genus == report.formula_genus else "violation",
    }
    if config.emit_faces:
        result["faces"] = [
            [[list(x.coords) for x in e] for e in face] for face in report.faces
        ]
    return result


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("family", choices=list(BUILDERS))
    parser.add_argument("n", type=int)
    parser.add_argument("--emit-faces", action="store_true")
    args = parser.parse_args()
    result = run(PipelineConfig(args.family, args.n, args.emit_faces))
    json.dump(result, sys.stdout, indent=2, sort_keys=True)
    print()
    return 0 if result["status"] == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
