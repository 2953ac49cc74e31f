import json

import pytest

from hypcolor import cli


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    report = json.loads(capsys.readouterr().out)
    return code, report


@pytest.fixture(scope="module")
def artifacts(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli")
    cli.main(["build-long-graph", "-o", str(d / "long.edges")])
    cli.main(["color", "--kind", "qr", "--k", "3", "-o", str(d / "qr.mat")])
    cli.main(["color", "--kind", "basis", "-o", str(d / "basis.mat")])
    return d


def test_build_f5_graph_header(tmp_path, capsys):
    code, rep = run(capsys, "build-f5-graph", "-o", tmp_path / "g.edges")
    assert code == 0 and rep["ok"]
    assert (tmp_path / "g.edges").read_text().splitlines()[0] == "p edge 650 78000"
    code, rep = run(capsys, "build-f5-graph", "--unordered", "-o", tmp_path / "u.edges")
    assert (tmp_path / "u.edges").read_text().splitlines()[0] == "p edge 650 39000"


def test_artifacts_are_deterministic(tmp_path, artifacts, capsys):
    run(capsys, "build-long-graph", "-o", tmp_path / "again.edges")
    run(capsys, "color", "--kind", "qr", "--k", "3", "-o", tmp_path / "again.mat")
    assert (tmp_path / "again.edges").read_bytes() == (artifacts / "long.edges").read_bytes()
    assert (tmp_path / "again.mat").read_bytes() == (artifacts / "qr.mat").read_bytes()


def test_validate_and_b1(artifacts, capsys):
    code, rep = run(capsys, "validate", "--graph", artifacts / "long.edges", "--coloring", artifacts / "qr.mat")
    assert code == 0 and rep["results"]["valid"]
    assert rep["results"]["orientation_witness"] == [1, 0, 0, 1, 1, 1, 0, 0, 1]
    code, rep = run(capsys, "b1", "--graph", artifacts / "long.edges", "--coloring", artifacts / "qr.mat",
                    "--expect-zero")
    assert code == 0 and rep["results"]["b1"] == 0
    assert rep["results"]["min_support"] >= 80


def test_b1_coordinate_word_diagnostic(artifacts, capsys):
    code, rep = run(capsys, "b1", "--graph", artifacts / "long.edges", "--coloring", artifacts / "basis.mat",
                    "--coordinate-words")
    assert rep["results"]["coordinate_word_contributions"] == [15] * 17


def test_ledger_with_quotient(artifacts, capsys):
    code, rep = run(capsys, "ledger", "--graph", artifacts / "long.edges", "--coloring", artifacts / "qr.mat",
                    "--quotient", "17", "--k", "3", "--no-volume")
    assert code == 0
    assert rep["results"]["prisms"] == 117_964_800
    assert rep["results"]["copies_of_Q"] == 8192
    # the basis coloring cannot descend
    code, rep = run(capsys, "ledger", "--graph", artifacts / "long.edges", "--coloring", artifacts / "basis.mat",
                    "--quotient", "17", "--no-volume")
    assert code == 1 and "error" in rep["results"]


def test_volume(capsys):
    code, rep = run(capsys, "volume", "--prisms", 117964800)
    assert code == 0
    assert abs(float(rep["results"]["value"]) - 234124.3175) < 1e-3
    assert float(rep["results"]["error_bound"]) <= 1e-9 * 234124.3175


def test_volume_cutoff_follows_tolerance(capsys):
    _, loose = run(capsys, "volume", "--tolerance", "1e-6")
    _, tight = run(capsys, "volume", "--tolerance", "1e-10")
    assert loose["ok"] and tight["ok"]
    assert loose["results"]["cutoff"] < tight["results"]["cutoff"]


def test_volume_fixed_cutoff_reports_unmet_tolerance(capsys):
    code, rep = run(capsys, "volume", "--cutoff", 1000, "--tolerance", "1e-15")
    assert code == 1 and rep["results"]["cutoff"] == 1000


def test_missing_file_is_an_error(capsys, tmp_path):
    code, rep = run(capsys, "validate", "--graph", tmp_path / "nope", "--coloring", tmp_path / "nope")
    assert code == 1 and "FileNotFoundError" in rep["results"]["error"]


def test_unknown_subcommand():
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])


def test_certify_subset(capsys):
    code, rep = run(capsys, "certify-all", "--only", "1,5", "--quiet")
    assert code == 0
    assert [c["criterion"] for c in rep["results"]["criteria"]] == [1, 5]


def test_tables_dump(capsys):
    code, rep = run(capsys, "tables", "dump")
    assert code == 0
    assert rep["results"]["A"][0] == "11101011100000000"
