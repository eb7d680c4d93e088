import json

import pytest

from monopath.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_count_partitions(capsys):
    # down-sets of the grid [n]^d
    code, doc = run_json(capsys, "count", "--kind", "partitions", "--d", "2", "--n", "2")
    assert code == 0
    assert doc["value"] == "6"
    code, doc = run_json(capsys, "count", "--kind", "partitions", "--d", "2", "--n", "3")
    assert code == 0
    assert doc["value"] == "20"
    code, doc = run_json(capsys, "count", "--kind", "partitions", "--d", "3", "--n", "3")
    assert code == 0
    assert doc["value"] == "980"


def test_count_rho_and_dedekind(capsys):
    code, doc = run_json(capsys, "count", "--kind", "rho", "--k", "4", "--d", "2", "--n", "2")
    assert code == 0 and doc["value"] == "8"
    code, doc = run_json(capsys, "count", "--kind", "dedekind", "--d", "5")
    assert code == 0 and doc["value"] == "7581"


def test_count_rank_profile_json(capsys):
    code, doc = run_json(capsys, "count", "--kind", "rank-profile", "--n", "3", "--d", "2")
    assert code == 0
    assert doc["sizes"][0] == "1"
    assert sum(int(s) for s in doc["sizes"]) == 3 ** 2
    assert doc["total"] == "9"


def test_count_rank_profile_table(capsys):
    code, out = run(capsys, "count", "--kind", "rank-profile", "--n", "2", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].startswith("#")
    assert any(line.split()[-1] == "2" for line in out.splitlines()[1:])


def test_formula_commands(capsys):
    code, doc = run_json(capsys, "formula", "--kind", "macmahon", "--n", "3")
    assert code == 0 and doc["value"] == "980"
    code, doc = run_json(capsys, "formula", "--kind", "p1", "--n", "4")
    assert code == 0 and doc["value"] == "70"
    code, doc = run_json(capsys, "formula", "--kind", "rectangular", "--a", "2", "--b", "3")
    assert code == 0 and doc["value"] == "10"
    code, doc = run_json(
        capsys, "formula", "--kind", "rectangular", "--a", "2", "--b", "2", "--c", "2"
    )
    assert code == 0 and doc["value"] == "20"


def test_construct_then_verify_roundtrip(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    code, doc = run_json(capsys, "construct", "--family", "3uniform", "--q", "2", "--n", "3")
    assert code == 0
    assert doc["N"] == 20
    assert (tmp_path / doc["file"]).exists()
    code, rep = run_json(capsys, "verify", "--n", "3")
    assert code == 0
    assert rep["certificate"] == "distinct"
    assert all(v <= 2 for v in rep["per_color_max"])


def test_verify_explicit_file_and_oversize(tmp_path, capsys):
    target = str(tmp_path / "c.json")
    code, doc = run_json(
        capsys, "construct", "--family", "random", "--k", "3", "--q", "2", "--N", "7",
        "--seed", "3", "--out", target,
    )
    assert code == 0 and doc["file"] == target
    code, rep = run_json(capsys, "verify", "--file", target, "--n", "2")
    assert code == 1
    assert isinstance(rep["certificate"], dict)
    assert "path" in rep["certificate"]


def test_construct_graph_and_kuniform(tmp_path, capsys):
    g = str(tmp_path / "g.json")
    code, doc = run_json(capsys, "construct", "--family", "graph", "--q", "2", "--n", "3", "--out", g)
    assert code == 0 and doc["N"] == 9
    k4 = str(tmp_path / "k4.json")
    code, doc = run_json(capsys, "construct", "--family", "kuniform", "--k", "4", "--n", "2", "--out", k4)
    assert code == 0 and doc["N"] == 8
    code, doc = run_json(
        capsys, "construct", "--family", "3uniform", "--q", "2", "--bounds", "2,4",
        "--out", str(tmp_path / "r.json"),
    )
    assert code == 0 and doc["N"] == 15


def test_transitive_exit_codes(tmp_path, capsys):
    t = str(tmp_path / "t.json")
    run_json(capsys, "construct", "--family", "3uniform", "--q", "2", "--n", "2", "--out", t)
    code, doc = run_json(capsys, "transitive", "--file", t)
    assert code == 0 and doc["transitive"] is True

    r = str(tmp_path / "r.json")
    run_json(capsys, "construct", "--family", "random", "--k", "3", "--q", "2", "--N", "7",
             "--seed", "5", "--out", r)
    code, doc = run_json(capsys, "transitive", "--file", r)
    assert code == 1
    assert doc["transitive"] is False
    assert len(doc["witness"]) == 4
    assert min(doc["witness"]) >= 1  # vertices reported 1-based


def test_search_exact(tmp_path, capsys):
    ext = str(tmp_path / "ext.json")
    code, doc = run_json(
        capsys, "search", "--k", "3", "--q", "2", "--n", "2", "--extremal-out", ext,
    )
    assert code == 0
    assert doc["status"] == "exact"
    assert doc["value"] == 7
    code, rep = run_json(capsys, "verify", "--file", ext, "--n", "2")
    assert code == 0 and rep["certificate"] == "distinct"


def test_search_capped_and_starved(capsys):
    code, doc = run_json(capsys, "search", "--k", "3", "--q", "2", "--n", "2",
                         "--max-N", "5")
    assert code == 0
    assert doc["status"] == "lower_bound_only"
    assert doc["value"] is None
    code, doc = run_json(capsys, "search", "--k", "3", "--q", "2", "--n", "3",
                         "--max-nodes", "40")
    assert code == 3
    assert doc["status"] == "budget_exhausted"
    assert doc["lower_bound"] >= 6


def test_bounds_subcommand(capsys):
    code, doc = run_json(capsys, "bounds", "--d-max", "2", "--n-max", "2",
                         "--k-max", "4", "--budget", "2000000")
    assert code == 0
    assert doc["failures"] == 0
    assert doc["rows"]


def test_bounds_table(capsys):
    code, out = run(capsys, "bounds", "--d-max", "2", "--n-max", "2",
                    "--k-max", "4", "--budget", "2000000", "--format", "table")
    assert code == 0
    assert out.splitlines()[0].split()[0] == "name"
    assert out.rstrip().splitlines()[-1].startswith("#")


def test_global_flags_both_positions(capsys):
    code1, doc1 = run_json(capsys, "--budget", "100000", "count", "--kind", "partitions",
                           "--d", "2", "--n", "2")
    code2, doc2 = run_json(capsys, "count", "--kind", "partitions", "--d", "2", "--n", "2",
                           "--budget", "100000")
    assert code1 == code2 == 0
    assert doc1 == doc2


def test_exit_code_2_on_bad_input(tmp_path, capsys):
    assert main(["count", "--kind", "partitions", "--d", "0", "--n", "2"]) == 2
    capsys.readouterr()
    assert main(["verify", "--file", str(tmp_path / "missing.json"), "--n", "2"]) == 2
    capsys.readouterr()
    bad = tmp_path / "bad.json"
    bad.write_text("not json")
    assert main(["verify", "--file", str(bad), "--n", "2"]) == 2
    capsys.readouterr()
    assert main(["count", "--kind", "partitions", "--d", "2", "--n", "2", "--budget", "-5"]) == 2
    capsys.readouterr()
    assert main(["construct", "--family", "3uniform", "--q", "2"]) == 2  # neither n nor bounds
    capsys.readouterr()


def test_exit_code_3_on_budget(capsys):
    assert main(["count", "--kind", "rho", "--k", "5", "--d", "3", "--n", "3",
                 "--budget", "10000"]) == 3
    out = capsys.readouterr()
    assert out.out == "" or "budget" in out.out.lower()


def test_big_values_are_decimal_strings(capsys):
    code, doc = run_json(capsys, "count", "--kind", "dedekind", "--d", "6")
    assert code == 0
    assert doc["value"] == "7828354"
    assert isinstance(doc["value"], str)
