import json
import subprocess
import sys

import pytest

import npaths.oeis
from npaths.cli import run


def invoke(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_paths_count_stats_json(capsys):
    code, out, _ = invoke(capsys, "paths", "count", "--n", "4", "--group-by", "stats", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert list(data) == ["(4,0)", "(0,1)", "(1,1)", "(2,1)", "(0,2)"]
    assert {k: int(v) for k, v in data.items()} == {
        "(4,0)": 1, "(0,1)": 1, "(1,1)": 6, "(2,1)": 11, "(0,2)": 4,
    }


def test_paths_count_endpoint_text(capsys):
    code, out, _ = invoke(capsys, "paths", "count", "--n", "3")
    assert code == 0
    assert out.splitlines() == ["111\t1", "12\t2", "21\t2", "3\t1"]


def test_paths_count_height_bound_csv(capsys):
    code, out, _ = invoke(
        capsys, "paths", "count", "--n", "8", "--group-by", "stats", "--height-bound", "2", "--format", "csv"
    )
    assert code == 0
    assert "\"(0,4)\",336" in out or "(0,4),336" in out


def test_paths_enumerate(capsys):
    code, out, _ = invoke(capsys, "paths", "enumerate", "--n", "2")
    assert code == 0
    assert sorted(out.splitlines()) == ["() 1 11", "() 1 2"]


def test_hasse_dot_single_node(capsys):
    code, out, _ = invoke(capsys, "hasse", "--poset", "N", "--max-weight", "0", "--format", "dot")
    assert code == 0
    assert '"()"' in out
    assert "->" not in out


def test_hasse_gamma_edge(capsys):
    _, gamma, _ = invoke(capsys, "hasse", "--poset", "Gamma", "--max-weight", "5", "--format", "text")
    _, n, _ = invoke(capsys, "hasse", "--poset", "N", "--max-weight", "5", "--format", "text")
    assert "22 -> 212" in gamma.splitlines()
    assert "22 -> 212" not in n.splitlines()


def test_outputs_are_byte_identical(capsys):
    argv = ["gf", "unrestricted", "--n", "6", "--format", "json"]
    _, first, _ = invoke(capsys, *argv)
    _, second, _ = invoke(capsys, *argv)
    assert first == second
    assert json.loads(first)[5]["total"] == "103"


def test_gf_width(capsys):
    code, out, _ = invoke(capsys, "gf", "width", "--k", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["L_tilde"] == ["1", "5", "-2"]
    assert data["v_kk"] == "9/2"


def test_gf_height2(capsys):
    code, out, _ = invoke(capsys, "gf", "height2", "--imax", "3", "--jmax", "3", "--format", "json")
    assert code == 0
    assert json.loads(out)["(3,3)"] == "10800"


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["paths", "count", "--n", "4", "--bogus"],
        ["paths", "count", "--n", "-1"],
        ["hasse", "--poset", "Q", "--max-weight", "2"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = invoke(capsys, *argv)
    assert code == 2
    assert out == ""
    assert "usage" in err


def test_oeis_check_offline(capsys, monkeypatch):
    monkeypatch.setattr(npaths.oeis.urllib.request, "urlopen", None)
    code, out, _ = invoke(capsys, "oeis", "check", "--id", "A001761", "--offline", "--format", "json")
    assert code == 0
    assert json.loads(out)["compared"] == 20


def test_no_network_env_forces_offline(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("NO_NETWORK", "1")
    monkeypatch.setenv("OEIS_CACHE_DIR", str(tmp_path))
    code, out, _ = invoke(capsys, "oeis", "check", "--id", "A001761", "--against", "c1n", "--terms", "10")
    assert code == 0
    assert "10 terms match from index 1" in out
    assert list(tmp_path.iterdir()) == []


def test_oeis_missing_fixture_exit_1(capsys, monkeypatch):
    monkeypatch.setenv("NO_NETWORK", "1")
    code, _, err = invoke(capsys, "oeis", "check", "--id", "A000045")
    assert code == 1
    assert "A000045" in err


def test_verify_all_reports_each_check(capsys):
    code, out, _ = invoke(capsys, "verify", "all", "--max-weight", "6")
    lines = out.splitlines()
    checks = [line for line in lines if line.startswith("[")]
    assert len(checks) == 15
    failed = [line for line in checks if line.startswith("[FAIL]")]
    assert code == (1 if failed else 0)
    assert lines[-1] == f"{15 - len(failed)}/15 checks passed"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "npaths", "paths", "count", "--n", "2", "--format", "json"],
        capture_output=True,
        text=True,
        check=True,
    )
    assert json.loads(proc.stdout) == {"11": "1", "2": "1"}
