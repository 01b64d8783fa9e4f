import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from radonfourier.cli import run

COMB = json.dumps({"combs": [{"spacing": 1.0}]})
TENT = json.dumps({"kind": "tent", "center": 0.0, "half_width": 1.0})


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_pair():
    code, out, _ = call("pair", "--measure", COMB, "--test", TENT)
    assert code == 0 and out.strip() == "1"


def test_pair_complex_format():
    m = json.dumps({"atoms": [{"x": 0, "w": [1, 2]}]})
    code, out, _ = call("pair", "--measure", m, "--test", TENT)
    assert out.strip() == "1+2j"


def test_tv_and_norm():
    assert call("tv", "--measure", COMB, "--K", "-2,2")[1].strip() == "5"
    assert call("tv", "--measure", COMB, "--K=-2,2")[1].strip() == "5"
    assert call("norm", "--measure", COMB)[1].strip() == "2"
    assert call("norm", "--measure", json.dumps({"atoms": [{"x": -5}]}))[1].strip() == "1"


def test_ft_outputs_descriptor():
    code, out, _ = call("ft", "--measure", json.dumps({"atoms": [{"x": 0.5}]}))
    d = json.loads(out)
    assert code == 0 and d["ac"][0]["kind"] == "modulated" and d["ac"][0]["frequency"] == -0.5


def test_verify_pass_and_fail():
    code, out, _ = call("verify", "--measure", COMB, "--format", "csv")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "test_id,residual,status" and len(lines) == 13
    assert all(l.endswith("PASS") for l in lines[1:])
    wrong = json.dumps({"combs": [{"spacing": 1.0, "w": 2.0}]})
    code, out, _ = call("verify", "--measure", COMB, "--hat", wrong)
    assert code == 2 and "FAIL" in out


def test_example_and_dump():
    code, out, _ = call("example", "EX3")
    assert code == 0 and "EX3: PASS" in out
    code, out, _ = call("example", "EX3", "--dump")
    assert json.loads(out)["id"] == "EX3"


def test_classify_csv():
    code, out, _ = call("classify", "--example", "DELTA_INV", "--format", "csv",
                        "--schedule", "1,2,4,8")
    assert code == 0 and out.startswith("label,topology,n,test_id,value,verdict")


def test_gate():
    code, out, _ = call("gate", "T3", "--example", "MODULATED")
    assert code == 0 and out.startswith("T3 on") and ": PASS" in out.splitlines()[0]
    code, out, _ = call("gate", "T3", "--example", "EX3", "--format", "csv")
    assert code == 0 and out.strip().splitlines()[-1].split(",")[4] == "HYPOTHESIS_FAIL"


def test_autocorr():
    code, out, _ = call("autocorr", "--comb", json.dumps({"kind": "lattice"}), "--n", "2",
                        "--format", "csv")
    rows = out.strip().splitlines()[1:]
    assert code == 0 and len(rows) == 9
    assert rows[4] == "0,1.25"
    code, out, _ = call("autocorr", "--comb", json.dumps({"kind": "lattice"}), "--schedule", "1,2,4")
    assert code == 0 and "cauchy_decreasing" in out


def test_l1bound():
    code, out, _ = call("l1bound", "--measure", COMB, "--test", TENT)
    assert code == 0 and "margin" in out


def test_file_inputs_and_out(tmp_path):
    m = tmp_path / "m.json"
    m.write_text(COMB)
    o = tmp_path / "out.txt"
    code, out, _ = call("norm", "--measure", str(m), "--out", str(o))
    assert code == 0 and out == "" and o.read_text().strip() == "2"


@pytest.mark.parametrize("argv, needle", [
    (["pair", "--measure", '{"atoms": [{"w": 1}]}', "--test", TENT], "atoms[0]"),
    (["pair", "--measure", "{bad", "--test", TENT], "invalid JSON"),
    (["pair", "--test", TENT], "--measure is required"),
    (["norm", "--measure", COMB, "--K", "2,1"], "--K"),
    (["example", "NOPE"], "unknown example"),
    (["gate", "T9", "--example", "EX3"], "unknown theorem"),
    (["classify", "--example", "EX3", "--schedule", "4,2"], "--schedule"),
    (["frobnicate"], "invalid choice"),
    (["norm", "--measure", "/nonexistent/file.json"], "cannot read"),
    (["autocorr", "--comb", '{"kind": "star"}', "--n", "2"], "unknown kind"),
])
def test_input_errors_exit_1(argv, needle):
    code, out, err = call(*argv)
    assert code == 1 and needle in err and out == ""


def test_deterministic_output():
    a = call("verify", "--measure", COMB, "--bank", "both")
    b = call("verify", "--measure", COMB, "--bank", "both")
    assert a == b


json_values = st.recursive(st.none() | st.booleans() | st.floats(allow_nan=False, width=32)
                           | st.integers(-5, 5) | st.text(max_size=5),
                           lambda c: st.lists(c, max_size=3) | st.dictionaries(
                               st.sampled_from(["atoms", "combs", "ac", "x", "w", "kind", "spacing",
                                                "interval", "rate"]), c, max_size=3),
                           max_leaves=8)


@given(json_values)
def test_malformed_measures_never_crash(value):
    code, out, err = call("norm", "--measure", "{" and json.dumps({"atoms": value}))
    assert code in (0, 1)
    if code == 1:
        assert err.startswith("radonfourier: error:") or "usage" in err


def test_console_entry_point():
    p = subprocess.run([sys.executable, "-m", "radonfourier", "norm", "--measure", COMB],
                       capture_output=True, text=True, timeout=60)
    assert p.returncode == 0 and p.stdout.strip() == "2"
    p = subprocess.run([sys.executable, "-m", "radonfourier", "example", "NOPE"],
                       capture_output=True, text=True, timeout=60)
    assert p.returncode == 1 and "Traceback" not in p.stderr
