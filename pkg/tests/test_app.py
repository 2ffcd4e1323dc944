import csv
import json

import pytest

from superinv.app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main
from superinv.utils.settings import OUTPUT_DIR_ENV

GL_CHECK = ["check", "--family", "gl", "--dim", "1,1", "--copies", "1,1,1,1", "--max-degree", "2"]


@pytest.fixture(autouse=True)
def _isolated_output(tmp_path, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "reports"))


def test_check_passes(tmp_path):
    out = tmp_path / "gl.json"
    assert main(GL_CHECK + ["--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["family"] == "gl"
    assert data["copies"] == [1, 1, 1, 1]
    assert [r["degree"] for r in data["rows"]] == [0, 1, 2]
    assert all(r["pass"] for r in data["rows"])
    assert data["fixtures_version"] == "1.1"
    assert len(data["fixtures_hash"]) == 16


def test_check_failure_exit_code(tmp_path, caplog):
    argv = ["check", "--family", "sl", "--dim", "1,1", "--copies", "1,1,1,1", "--max-degree", "4",
            "--omit", "f", "--out", str(tmp_path / "sl.json")]
    assert main(argv) == EXIT_FAILED
    assert "degree 4" in caplog.text


def test_check_csv(tmp_path):
    out = tmp_path / "gl.csv"
    assert main(GL_CHECK + ["--format", "csv", "--out", str(out)]) == EXIT_OK
    rows = list(csv.reader(out.read_text().splitlines()))
    assert rows[0] == ["degree", "dim_invariants", "dim_closure", "pass"]
    assert rows[1:] == [["0", "1", "1", "true"], ["1", "0", "0", "true"], ["2", "4", "4", "true"]]


def test_reports_are_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    main(GL_CHECK + ["--out", str(a)])
    main(GL_CHECK + ["--out", str(b), "--workers", "2"])
    assert a.read_bytes() == b.read_bytes()


def test_default_output_dir_from_environment(tmp_path):
    assert main(GL_CHECK) == EXIT_OK
    assert len(list((tmp_path / "reports").glob("*.json"))) == 1


def test_config_file(tmp_path):
    config = tmp_path / "settings.json"
    config.write_text(json.dumps({"format": "text"}))
    assert main(GL_CHECK + ["--config", str(config)]) == EXIT_OK
    assert len(list((tmp_path / "reports").glob("*.txt"))) == 1


def test_save_config(tmp_path):
    saved = tmp_path / "saved.json"
    assert main(GL_CHECK + ["--format", "csv", "--out", str(tmp_path / "gl.csv"), "--save-config", str(saved)]) == EXIT_OK
    data = json.loads(saved.read_text())
    assert data["format"] == "csv"
    assert data["max_degree"] == 2
    assert main(GL_CHECK + ["--config", str(saved)]) == EXIT_OK
    assert len(list((tmp_path / "reports").glob("*.csv"))) == 1


@pytest.mark.parametrize("argv", [
    ["check", "--family", "osp", "--dim", "1,1", "--copies", "0,0,1,1"],
    ["check", "--family", "gl", "--dim", "1", "--copies", "1,1,1,1"],
    ["check", "--family", "pe", "--dim", "1,1", "--copies", "1,0,1,0"],
    GL_CHECK + ["--fixtures-version", "9.9"],
    ["invariant", "--name", "nope", "--dim", "1,1", "--copies", "1,1,1,1"],
    ["invariant", "--name", "scalar_product", "--dim", "1,1", "--copies", "1,1,1,1", "--params", "t"],
])
def test_usage_errors(argv):
    assert main(argv) == EXIT_USAGE


def test_missing_required_flag_exits_2():
    with pytest.raises(SystemExit) as info:
        main(["check", "--family", "gl", "--dim", "1,1"])
    assert info.value.code == 2


def test_invariant_prints_canonical_text(tmp_path, capsys):
    argv = ["invariant", "--name", "scalar_product", "--dim", "1,0", "--copies", "1,0,1,0",
            "--params", "t=1", "s=1", "--family", "gl", "--out", str(tmp_path / "sp.json")]
    assert main(argv) == EXIT_OK
    assert "1 * x[1,1]*xs[1,1]" in capsys.readouterr().out
    data = json.loads((tmp_path / "sp.json").read_text())
    assert data["invariant"] is True
    assert data["multidegree"] == [1, 1]


def test_non_invariant_exits_1(tmp_path):
    argv = ["invariant", "--name", "f", "--dim", "1,1", "--copies", "1,1,1,1", "--params", "k=1",
            "--family", "gl", "--out", str(tmp_path / "f.json")]
    assert main(argv) == EXIT_FAILED
    data = json.loads((tmp_path / "f.json").read_text())
    assert data["invariant"] is False
    assert data["witness"]


def test_basis_text(tmp_path, capsys):
    assert main(["basis", "--family", "osp", "--dim", "1,2", "--format", "text",
                 "--out", str(tmp_path / "b.txt")]) == EXIT_OK
    assert "5 elements" in capsys.readouterr().out


def test_decompose(tmp_path):
    out = tmp_path / "c.json"
    assert main(["decompose", "--dimU", "1,1", "--dimV", "1,1", "--k", "2", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["lhs"] == data["rhs"] == 8


def test_qet_demo(tmp_path):
    out = tmp_path / "q.json"
    assert main(["qet-demo", "--n", "1", "--samples", "5", "--seed", "3", "--out", str(out)]) == EXIT_OK
    data = json.loads(out.read_text())
    assert data["ok"] is True
    assert data["seed"] == 3
