import io
import json

import pytest

from fatlab.cli import run


def _run(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_fvector_text():
    code, out = _run("fvector", "720", "3600", "3600", "720")
    assert code == 0
    assert "fatness: 5" in out


def test_fvector_json_fraction():
    code, out = _run("fvector", "6", "12", "8", "--json")
    assert code == 0
    d = json.loads(out)
    assert d["data"]["fatness"] == "6/7"
    assert d["pass"] is True


def test_exit_codes():
    assert _run("fvector", "1", "3", "1", "1")[0] == 1  # euler fails
    assert _run("fvector", "1", "2")[0] == 2
    assert _run("fvector")[0] == 2
    assert _run("nonsense")[0] == 2
    assert _run("covers", "sgprime", "--g", "5")[0] == 2


def test_econ():
    code, out = _run("econ", "5", "10", "10", "5", "--json")
    assert code == 0
    assert json.loads(out)["claims"]


def test_prop5_table():
    code, out = _run("compounds", "prop5")
    assert code == 0
    assert "[PASS]" in out and "[FAIL]" not in out


def test_json_deterministic():
    a = _run("covers", "experiment", "--g", "1", "--n", "16", "--trials", "20", "--seed", "4", "--json")
    b = _run("covers", "experiment", "--g", "1", "--n", "16", "--trials", "20", "--seed", "4", "--json",
             "--threads", "2")
    assert a == b
    assert a[0] == 0


def test_out_file(tmp_path):
    p = tmp_path / "r.json"
    code, _ = _run("covers", "sgprime", "--g", "2", "--out", str(p))
    assert code == 0
    assert json.loads(p.read_text())["pass"] is True


def test_zoo_out(tmp_path):
    p = tmp_path / "cube.json"
    code, _ = _run("zoo", "cube", "--out", str(p))
    assert code == 0
    assert p.exists() and json.loads(p.read_text())


@pytest.mark.parametrize("what", ["loops", "sausage", "thm2"])
def test_covers_subcommands(what):
    assert _run("covers", what, "--g", "1")[0] == 0


def test_verify_all_subset():
    code, out = _run("verify-all", "--only", "1", "9")
    assert code == 0
    assert "criterion  1" in out or "criterion 1" in out
