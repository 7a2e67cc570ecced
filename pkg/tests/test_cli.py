"""Command-line interface: subcommands, exit codes, determinism, round trips."""

import json
from pathlib import Path

from relheffter.cli import main

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip().startswith("{") else out)


def test_construct_h_n_3_matches_fixture(tmp_path, capsys):
    out = tmp_path / "a"
    code, payload = run(capsys, "construct", "h-n-3", "--n", "9", "--out", str(out))
    assert code == 0 and payload["status"] == "ok"
    assert payload["report"]["valid"]
    assert (tmp_path / "a.csv").read_text() == (FIXTURES / "h9_9_3.csv").read_text()


def test_construct_h9_matches_fixture(tmp_path, capsys):
    out = tmp_path / "b"
    code, _ = run(capsys, "construct", "h9", "--n", "15", "--out", str(out))
    assert code == 0
    assert (tmp_path / "b.csv").read_text() == (FIXTURES / "h9_15_9.csv").read_text()


def test_construct_usage_error(capsys):
    code = main(["construct", "h7", "--n", "6"])
    assert code == 2
    assert "error" in capsys.readouterr().err


def test_verify_fixture_csv(capsys):
    code, payload = run(
        capsys, "verify", str(FIXTURES / "h7_11_7.csv"), "--v", "161",
        "--t", "7", "--integer", "--globally-simple",
    )
    assert code == 0 and payload["status"] == "ok"
    assert payload["integer"]["valid"] and payload["globally_simple"]


def test_verify_archdeacon_fixture(capsys):
    code, payload = run(
        capsys, "verify", str(FIXTURES / "archdeacon_8x8_z51xz3.json"),
        "--archdeacon", "--globally-simple",
    )
    assert code == 0 and payload["archdeacon"]["valid"]


def test_verify_perturbed_array_fails(tmp_path, capsys):
    rows = (FIXTURES / "h9_9_3.csv").read_text().splitlines()
    rows[0] = rows[0].replace("-27", "-26", 1)
    bad = tmp_path / "bad.csv"
    bad.write_text("\n".join(rows) + "\n")
    code, payload = run(capsys, "verify", str(bad), "--v", "63", "--t", "9")
    assert code == 1 and payload["status"] == "violation"
    tags = {v["tag"] for v in payload["relative"]["violations"]}
    assert "row-sum" in tags


def test_verify_requires_a_check(capsys):
    assert main(["verify", str(FIXTURES / "h9_9_3.csv"), "--v", "63"]) == 2


def test_knight_search_and_orientation(tmp_path, capsys):
    out = tmp_path / "sk"
    assert main(["construct", "skeleton-cor39", "--n", "5", "--k", "3",
                 "--out", str(out)]) == 0
    capsys.readouterr()
    code, payload = run(capsys, "knight", str(out) + ".json", "--search")
    assert code == 0 and payload["is_solution"]
    code, payload = run(capsys, "knight", str(out) + ".json",
                        "--orientation", f"{payload['orientation_rows']},{payload['orientation_cols']}")
    assert code == 0 and payload["is_solution"]


def test_knight_no_solution_exit_1(tmp_path, capsys):
    grid = tmp_path / "full2.json"
    grid.write_text(json.dumps({"m": 2, "n": 2, "cells": [[1, 1], [1, 2], [2, 1], [2, 2]]}))
    code, payload = run(capsys, "knight", str(grid), "--search", "--no-parity-filter")
    assert code == 1 and payload["status"] == "violation"


def test_knight_closed_form_flag(tmp_path, capsys):
    import relheffter.orderings as o
    skel = o.nine_diagonal_skeleton(21)
    f = tmp_path / "l410.json"
    f.write_text(json.dumps(skel.to_json()))
    code, payload = run(capsys, "knight", str(f), "--lemma410")
    assert code == 0 and payload["orbit_length"] == 189


def test_knight_lift(tmp_path, capsys):
    out = tmp_path / "sk"
    main(["construct", "skeleton-cor39", "--n", "5", "--k", "3", "--out", str(out)])
    capsys.readouterr()
    code, payload = run(capsys, "knight", str(out) + ".json", "--search", "--lift", "2,3,4")
    assert code == 0 and payload["lifted_n"] == 7 and payload["is_solution"]


def test_embed_pipeline(tmp_path, capsys):
    out = tmp_path / "h3"
    main(["construct", "h-n-3", "--n", "3", "--out", str(out)])
    capsys.readouterr()
    code, payload = run(capsys, "knight", str(out) + ".json", "--search")
    orientation = f"{payload['orientation_rows']},{payload['orientation_cols']}"
    code, payload = run(capsys, "embed", str(out) + ".json", "--t", "3",
                        "--orientation", orientation)
    assert code == 0
    emb = payload["embedding"]
    assert (emb["V"], emb["S"], emb["F"]) == (21, 189, 126)
    assert emb["genus"] == emb["formula_genus"] == 22
    assert payload["two_colorable"] and payload["orthogonal"]
    assert payload["row_decomposition"]["cycle_lengths"] == {"3": 63}


def test_embed_incompatible_orientation_exit_1(tmp_path, capsys):
    out = tmp_path / "h3"
    main(["construct", "h-n-3", "--n", "3", "--out", str(out)])
    capsys.readouterr()
    code, payload = run(capsys, "embed", str(out) + ".json",
                        "--orientation", "+++,+++")
    assert code == 1 and payload["status"] == "violation"


def test_determinism(tmp_path, capsys):
    outputs = []
    for tag in ("x", "y"):
        out = tmp_path / tag
        main(["construct", "h7", "--n", "11", "--out", str(out)])
        outputs.append(capsys.readouterr().out.replace(str(out), "OUT"))
    assert outputs[0] == outputs[1]
    assert (tmp_path / "x.csv").read_text() == (tmp_path / "y.csv").read_text()


def test_round_trip_construct_verify(tmp_path, capsys):
    out = tmp_path / "h2n"
    main(["construct", "h-2n-3", "--n", "7", "--out", str(out)])
    capsys.readouterr()
    for path in (str(out) + ".json",):
        assert main(["verify", path, "--t", "14", "--integer"]) == 0
        capsys.readouterr()


def test_jobs_flag_accepted(capsys):
    code, payload = run(capsys, "--jobs", "4", "construct", "h-n-3", "--n", "3")
    assert code == 0
