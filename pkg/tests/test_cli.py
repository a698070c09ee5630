import json
import subprocess
import sys

import pytest

from wallcross.cli import FORMAT_ENV, run_command
from wallcross.verify import VerifyConfig, verify_all


def run(capsys, *argv):
    code = run_command(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_ifun_degree_zero_is_z(capsys):
    code, out, _ = run(capsys, "ifun", "--ambient", "4", "--degrees", "5", "--qmax", "0")
    assert code == 0
    assert json.loads(out)["series"] == [{"coeff": "1/1", "exp": {"z": 1}}]


def test_mirror_map(capsys):
    code, out, _ = run(capsys, "mirror-map", "--epsilon", "1", "--ambient", "4", "--degrees", "5", "--qmax", "2")
    mu = json.loads(out)["mu"]
    assert code == 0
    assert mu["1"] == [{"coeff": "770/1", "exp": {"H": 1}}, {"coeff": "120/1", "exp": {"z": 1}}]
    assert mu["2"] == []


def test_tft_modes(capsys):
    assert run(capsys, "tft", "--check-lemma", "--yorder", "6")[0] == 0
    assert run(capsys, "tft", "--irrationality", "--kmax", "5")[0] == 0
    code, out, _ = run(capsys, "tft", "--omega", "0", "2", "--insertions", "H,H", "--yorder", "2")
    assert code == 0 and json.loads(out)["omega"] == [{"coeff": "1/1", "exp": {"λ": 1}}]


def test_localize_invariant(capsys):
    code, out, _ = run(capsys, "localize", "--target", "p1", "--genus", "0", "--marks", "3",
                       "--degree", "1", "--insertions", "H,H,H", "--psi", "0,0,0")
    data = json.loads(out)
    assert code == 0 and data["value"] == [{"coeff": "1/1", "exp": {}}]
    assert data["laurent_polynomial"] and len(data["contributions"]) == 8


def test_localize_omega(capsys):
    code, out, _ = run(capsys, "localize", "--omega", "--genus", "1", "--marks", "1", "--ymax", "2",
                       "--insertions", "H")
    data = json.loads(out)
    assert code == 0 and data["omega"] == [{"coeff": "1/1", "exp": {"λ": 1}}]
    assert set(data["per_degree"]) == {"0", "1", "2"}


@pytest.mark.parametrize("argv", [
    ["verify", "--suite", "nonexistent"],
    ["ifun", "--ambient", "4", "--bogus"],
    ["localize", "--genus", "2", "--marks", "0", "--degree", "1"],
    ["localize", "--genus", "0", "--marks", "2", "--insertions", "H"],
    ["mirror-map", "--epsilon", "0", "--ambient", "2"],
    ["mirror-map", "--epsilon", "x/y", "--ambient", "2"],
    ["ifun", "--ambient", "1", "--degrees", "2,2"],
    ["tft", "--omega", "0", "2", "--insertions", "H,Q"],
])
def test_invalid_input_exits_2(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_edge_identity_single_case(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "edge-identity", "--ambient", "4", "--degrees", "5",
                       "--beta", "1", "--edge-degree", "1")
    data = json.loads(out)
    assert code == 0 and data["status"] == "pass" and data["notes"]


def test_failing_check_exits_1(capsys, monkeypatch):
    from wallcross import cli
    from wallcross.report import VerificationReport

    def failing(cfg):
        rep = VerificationReport("graphs")
        rep.add("forced failure", False)
        return rep

    monkeypatch.setitem(cli.SUITES, "graphs", failing)
    code, out, _ = run(capsys, "verify", "--suite", "graphs")
    assert code == 1 and json.loads(out)["status"] == "fail"


def test_text_format_from_environment(capsys, monkeypatch):
    monkeypatch.setenv(FORMAT_ENV, "text")
    code, out, _ = run(capsys, "verify", "--suite", "quantum-ring")
    assert code == 0 and out.startswith("suite quantum-ring: PASS")


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    assert run(capsys, "verify", "--suite", "irrationality", "--out", str(target))[0] == 0
    assert json.loads(target.read_text())["suite"] == "irrationality"


def test_degenerate_orders_pass():
    assert verify_all(VerifyConfig(yorder=0, series_cases=40)).passed


def test_byte_identical_output():
    cmd = [sys.executable, "-m", "wallcross", "verify", "--suite", "all", "--cases", "100"]
    a = subprocess.run(cmd, capture_output=True, check=True).stdout
    b = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert a == b and json.loads(a)["status"] == "pass"
