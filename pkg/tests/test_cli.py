import io
import subprocess
import sys

import pytest

from corpus import GF101_D4
from leonard.cli import run

KRAWTCHOUK_3_FILE = """field: Q
d: 3
theta: 3 1 -1 -3
theta_star: 3 1 -1 -3
varphi: -6 -8 -6
phi: 6 8 6
"""


def call(argv, stdin_text=""):
    out = io.StringIO()
    code = run(argv, out, io.StringIO(stdin_text))
    return code, out.getvalue()


@pytest.fixture()
def kfile(tmp_path):
    p = tmp_path / "k3.txt"
    p.write_text(KRAWTCHOUK_3_FILE)
    return str(p)


def test_family_output_is_canonical():
    code, text = call(["family", "krawtchouk", "--d", "3"])
    assert code == 0
    assert text == KRAWTCHOUK_3_FILE


def test_validate_from_stdin():
    code, text = call(["validate", "-"], KRAWTCHOUK_3_FILE)
    assert code == 0 and text.startswith("valid")


def test_validate_reports_violations():
    bad = KRAWTCHOUK_3_FILE.replace("varphi: -6 -8 -6", "varphi: -6 -8 -5")
    code, text = call(["validate", "-"], bad)
    assert code == 1 and text.startswith("invalid")


def test_rep_bytes(kfile):
    code, text = call(["rep", kfile, "--basis", "d*0*0d"])
    assert code == 0
    assert text == ("A:\n3 0 0 0\n0 1 0 0\n0 0 -1 0\n0 0 0 -3\n\n"
                    "A*:\n0 3 0 0\n1 0 2 0\n0 2 0 1\n0 0 3 0\n")


def test_rep_accepts_comma_labels(kfile):
    assert call(["rep", kfile, "--basis", "d*,0*,0,d"]) == call(["rep", kfile, "--basis", "d*0*0d"])


def test_transition_output(kfile):
    code, text = call(["transition", kfile, "--from", "d*00*d", "--to", "0d*0*d"])
    assert code == 0 and text == "-288 0 0 0\n0 48 0 0\n0 0 -6 0\n0 0 0 1\n"
    code, text = call(["transition", kfile, "--from", "0d*d0*", "--to", "0d*d0*"])
    assert text == "1 0 0 0\n0 1 0 0\n0 0 1 0\n0 0 0 1\n"


def test_askey_output(kfile):
    code, text = call(["askey", kfile])
    assert code == 0
    assert text == ("P:\n1 3 3 1\n1 1 -1 -1\n1 -1 -1 1\n1 -3 3 -1\n\n"
                    "P*:\n1 3 3 1\n1 1 -1 -1\n1 -1 -1 1\n1 -3 3 -1\n\n"
                    "k: 1 3 3 1\nk*: 1 3 3 1\nnu: 8\n")


@pytest.mark.parametrize("eps,code", [("1,2,3", 2), ("1,0,1,1", 2), ("1,x,1,1", 2), ("1,2,3,4", 0), ("1/2,2,3,4", 0)])
def test_eps_argument(kfile, eps, code):
    assert call(["transition", kfile, "--from", "d*00*d", "--to", "0d*0*d", "--eps", eps])[0] == code


def test_eps_fraction_rejected_over_finite_field(tmp_path):
    p = tmp_path / "g.txt"
    p.write_text(GF101_D4)
    argv = ["transition", str(p), "--from", "d*00*d", "--to", "0d*0*d", "--eps"]
    assert call(argv + ["1/2,1,1,1"])[0] == 2
    assert call(argv + ["2,1,1,1"])[0] == 0


def test_usage_errors(kfile, capsys):
    assert call(["rep", kfile, "--basis", "xyz"])[0] == 2
    assert call(["rep", "/nonexistent/file", "--basis", "d*00*d"])[0] == 2
    assert call(["validate", "-"], "field: Q\nd: two\n")[0] == 2
    assert call(["frobnicate"])[0] == 2
    assert call(["family", "krawtchouk", "--d", "3", "--field", "GF(4)"])[0] == 2
    assert "error" in capsys.readouterr().err


def test_invalid_array_is_check_failure():
    bad = KRAWTCHOUK_3_FILE.replace("phi: 6 8 6", "phi: 6 8 7")
    assert call(["rep", "-", "--basis", "d*00*d"], bad)[0] == 1
    assert call(["verify", "-"], bad)[0] == 1


def test_family_errors():
    assert call(["family", "krawtchouk", "--d", "3", "--field", "GF(3)"])[0] == 1
    argv = ["family", "q-racah", "--d", "3", "--q", "1", "--h", "1", "--hs", "1", "--s", "3", "--ss", "5", "--r1", "7"]
    assert call(argv)[0] == 1


def test_q_racah_family_round_trip():
    argv = ["family", "q-racah", "--d", "3", "--q", "2", "--h", "1", "--hs", "1", "--s", "3", "--ss", "5", "--r1", "7"]
    code, text = call(argv)
    assert code == 0 and "theta: 0 11/2 69/4 329/8" in text
    assert call(["validate", "-"], text)[0] == 0


def test_verify(kfile):
    code, text = call(["verify", kfile])
    lines = text.splitlines()
    assert code == 0
    assert all(line.endswith("PASS") for line in lines[:-1])
    assert lines[-1].endswith("0 failed")


def test_verify_deep(kfile):
    code, text = call(["verify", kfile, "--deep"])
    assert code == 0
    assert "CHECK oracle-transition d*00*d,0d*0*d PASS" in text


def test_verify_deep_skip_note(kfile, capsys):
    code, text = call(["verify", kfile, "--deep", "--max-d", "2"])
    assert code == 0 and "oracle" not in text
    assert "skipped" in capsys.readouterr().err


def test_shell_pipeline():
    fam = subprocess.run([sys.executable, "-m", "leonard", "family", "krawtchouk", "--d", "4"],
                         capture_output=True, text=True, check=True)
    val = subprocess.run([sys.executable, "-m", "leonard", "validate", "-"], input=fam.stdout,
                         capture_output=True, text=True)
    assert val.returncode == 0 and val.stdout.startswith("valid")
