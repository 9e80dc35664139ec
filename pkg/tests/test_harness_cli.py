import json

import pytest

from monopos.cli import main
from monopos.errors import InputError
from monopos.harness import available_checks, run_check, run_suite


def test_registry_nonempty_unique():
    ids = [cid for cid, _ in available_checks()]
    assert len(ids) == len(set(ids)) >= 30


def test_unknown_check_rejected():
    with pytest.raises(InputError):
        run_suite(["no-such-check"])
    with pytest.raises(InputError):
        run_check("nope")
    with pytest.raises(InputError):
        run_check("cages-mp", profile="extreme")


def test_run_report_determinism():
    ids = ["cages-mp", "multipartite-formula", "unicyclic-formula", "graph6-roundtrip"]
    a = run_suite(ids, seeds=(7,), profile="quick")
    b = run_suite(ids, seeds=(7,), profile="quick")
    assert a.to_json(stable=True) == b.to_json(stable=True)
    c = run_suite(ids, seeds=(8,), profile="quick")
    assert a.outcome("cages-mp").status == c.outcome("cages-mp").status == "pass"


def test_multi_seed_merge():
    rep = run_suite(["multipartite-formula"], seeds=(1, 2), profile="quick")
    out = rep.outcome("multipartite-formula")
    assert out.status == "pass"
    single = run_suite(["multipartite-formula"], seeds=(1,), profile="quick")
    assert out.instances == 2 * single.outcome("multipartite-formula").instances


def test_quick_profile_subset_passes():
    ids = ["dh-mp-equals-gp", "split-phi-formula", "hall-equality-condition",
           "hull-invariants", "clique-reduction"]
    rep = run_suite(ids, profile="quick")
    assert rep.passed, rep.to_json(indent=2)


def test_parallel_jobs_match_sequential():
    ids = ["multipartite-formula", "cages-mp"]
    seq = run_suite(ids, profile="quick", jobs=1)
    par = run_suite(ids, profile="quick", jobs=2)
    assert seq.to_json(stable=True) == par.to_json(stable=True)


# -- command line ----------------------------------------------------------------


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_cli_compute_petersen(tmp_path, capsys):
    from monopos.families import petersen_graph
    from monopos.graph6 import emit_graph6

    path = tmp_path / "petersen.g6"
    path.write_text(emit_graph6(petersen_graph()) + "\n")
    code, out, _ = run_cli(capsys, "compute", str(path), "--param", "mp,gp", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    values = {p["parameter"]: p["value"] for p in doc["parameters"]}
    assert values == {"mp": 3, "gp": 6}


def test_cli_compute_edge_list(tmp_path, capsys):
    path = tmp_path / "c5.txt"
    path.write_text("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run_cli(capsys, "compute", str(path), "--param", "mp,hm")
    assert code == 0
    assert "mp = 2" in out and "hm = 2" in out


def test_cli_compute_all(tmp_path, capsys):
    path = tmp_path / "c6.g6"
    from monopos.graph import cycle_graph
    from monopos.graph6 import emit_graph6

    path.write_text(emit_graph6(cycle_graph(6)) + "\n")
    code, out, _ = run_cli(capsys, "compute", str(path), "--param", "all", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    values = {p["parameter"]: p["value"] for p in doc["parameters"]}
    assert values["mp"] == 2 and values["gp"] == 3 and values["alpha"] == 3
    assert values["hm"] == 2 and values["rho"] == 2


def test_cli_family(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "family", "half_wheel:4", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 9
    assert {p["parameter"]: p["value"] for p in doc["predictions"]} == {"mp": 2, "gp": 4}
    code, out, _ = run_cli(capsys, "family", "G_abl:3,5,2", "--out", str(tmp_path))
    assert code == 0
    written = list(tmp_path.glob("*.g6"))
    assert len(written) == 1
    sidecar = json.loads(written[0].with_suffix(".json").read_text())
    assert sidecar["order"] == 8


def test_cli_family_domain_error(capsys):
    code, _, err = run_cli(capsys, "family", "half_wheel:1")
    assert code == 2 and "error" in err


def test_cli_family_seed_determinism(capsys):
    _, out1, _ = run_cli(capsys, "family", "random_tree:8", "--seed", "3", "--format", "json")
    _, out2, _ = run_cli(capsys, "family", "random_tree:8:seed=3", "--format", "json")
    assert json.loads(out1) == json.loads(out2)


def test_cli_oracle(tmp_path, capsys):
    from monopos.graph import cycle_graph
    from monopos.graph6 import emit_graph6

    path = tmp_path / "c6.g6"
    path.write_text(emit_graph6(cycle_graph(6)) + "\n")
    code, out, _ = run_cli(capsys, "oracle", str(path), "--mode", "geo", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["parameter"] == "gp" and doc["value"] == 3 and doc["method"] == "oracle"


def test_cli_oracle_cap_exit_code(tmp_path, capsys):
    from monopos.graph import path_graph
    from monopos.graph6 import emit_graph6

    path = tmp_path / "p13.g6"
    path.write_text(emit_graph6(path_graph(13)) + "\n")
    code, _, err = run_cli(capsys, "oracle", str(path))
    assert code == 3 and "cap" in err


def test_cli_reduce(tmp_path, capsys):
    from monopos.graph import cycle_graph
    from monopos.graph6 import emit_graph6

    path = tmp_path / "c5.g6"
    path.write_text(emit_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run_cli(capsys, "reduce", str(path), "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["k_prime"] == 8 and doc["identity_holds"] and doc["answers_agree"]
    assert doc["mp_product"] == 7


def test_cli_paths(tmp_path, capsys):
    from monopos.graph import cycle_graph
    from monopos.graph6 import emit_graph6

    path = tmp_path / "c5.g6"
    path.write_text(emit_graph6(cycle_graph(5)) + "\n")
    code, out, _ = run_cli(capsys, "paths", str(path), "--interval", "0", "2",
                           "--hull", "0,2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["interval"]["vertices"] == [0, 1, 2, 3, 4]
    assert doc["hull"]["vertices"] == [0, 1, 2, 3, 4] and doc["hull"]["iterations"] == 1
    code, _, err = run_cli(capsys, "paths", str(path))
    assert code == 2


def test_cli_bad_input_exit_code(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("D?\n")
    code, _, err = run_cli(capsys, "compute", str(path))
    assert code == 2 and "error" in err


def test_cli_verify_list_and_quick(capsys):
    code, out, _ = run_cli(capsys, "verify", "--list")
    assert code == 0 and "cages-mp" in out
    code, out, _ = run_cli(capsys, "verify", "--check", "cages-mp,hypercube-complement-formula",
                           "--profile", "quick", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["totals"]["fail"] == 0


def test_cli_verify_strict_flag(capsys):
    code, _, _ = run_cli(capsys, "verify", "--check", "cages-mp", "--profile", "quick",
                         "--strict")
    assert code == 0
