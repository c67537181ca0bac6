import json
import subprocess
import sys

import pytest

from mocktheta.cli import SCHEMA_VERSION, main, parse_complex, parse_rational


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("text,value", [("i", 1j), ("-i", -1j), ("0.3+1.1i", 0.3 + 1.1j), ("2", 2),
                                         ("-0.4+1.2i", -0.4 + 1.2j), ("1.5j", 1.5j)])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


def test_parse_rational():
    from fractions import Fraction
    assert parse_rational("1/6") == Fraction(1, 6)
    assert parse_rational("-3") == -3
    assert parse_rational("0.25") == 0.25


def test_eval_mordell(capsys):
    code, out, _ = run(capsys, "eval", "mordell_h", "--tau", "i", "--z", "0")
    d = json.loads(out)
    assert code == 0 and d["schema_version"] == SCHEMA_VERSION
    assert abs(d["value"][0] - 0.6690633391358687) < 1e-9 and d["flags"] == []


def test_eval_family_and_degraded(capsys):
    code, out, _ = run(capsys, "eval", "F7", "--tau", "0.1+0.2i", "--component", "1")
    assert code == 0 and json.loads(out)["flags"] == ["degraded_precision"]
    code, out, _ = run(capsys, "eval", "G5_2", "--tau", "i", "--component", "3")
    assert code == 0


def test_eval_series_and_tol(capsys, tmp_path):
    target = tmp_path / "v.json"
    code, _, _ = run(capsys, "eval", "series:F7_0", "--tau", "i", "--tol", "1e-12", "--out", str(target))
    d = json.loads(target.read_text())
    assert code == 0 and abs(d["value"][0] - 1.0018674492563044) < 1e-13 and d["certified_tol"] == 1e-12


def test_input_errors(capsys):
    assert run(capsys, "eval", "mordell_h", "--tau", "-i", "--z", "0")[0] == 2
    code, _, err = run(capsys, "eval", "mordell_h", "--tau", "-0.4-1.2i", "--z", "0")
    assert code == 2 and "upper half plane" in json.loads(err)["error"]
    assert run(capsys, "eval", "mordell_h", "--tau", "i")[0] == 2
    assert run(capsys, "eval", "mordell_h", "--tau", "abc", "--z", "0")[0] == 2
    assert run(capsys, "eval", "F7", "--tau", "i", "--component", "9")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_unknown_ids(capsys):
    assert run(capsys, "eval", "nope", "--tau", "i")[0] == 3
    assert run(capsys, "qcheck", "nope")[0] == 3
    assert run(capsys, "verify", "--suite", "ch9")[0] == 3


def test_qcheck(capsys):
    code, out, _ = run(capsys, "qcheck", "in5")
    d = json.loads(out)
    assert code == 0 and d["pass"] and d["through_exponent"] == "51"


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    d = json.loads(out)
    assert code == 0 and "mordell_h" in d["functions"] and "seventh_0" in d["identities"]


def test_verify_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "verify", "--suite", "ch2", "--seed", "7", "--out", str(a))[0] == 0
    assert run(capsys, "verify", "--suite", "ch2", "--seed", "7", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    d = json.loads(a.read_text())
    ids = [e["identity"] for e in d["entries"]]
    assert ids == sorted(ids) and d["summary"]["failed"] == 0 and d["config"]["seed"] == 7


def test_verify_custom_grid(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "ch4", "--tau-grid", "i,0.3+0.8i")
    d = json.loads(out)
    assert code == 0 and d["config"]["tau_grid"] == [[0.0, 1.0], [0.3, 0.8]]


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "mocktheta", "eval", "jacobi_theta", "--tau", "i", "--z", "0.25"],
                         capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["function"] == "jacobi_theta"
