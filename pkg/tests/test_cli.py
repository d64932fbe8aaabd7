import json
import subprocess
import sys
from pathlib import Path

import pytest

from gbdq.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys, tmp_path):
    code, out, _ = run(capsys, "enumerate", "--n", "3", "--out", str(tmp_path), "--format", "text", "--format", "json")
    assert code == 0 and out == "n=3 chains=70 disjoint=30\n"
    assert (tmp_path / "chains_n3.txt").read_text() == (GOLDEN / "chains_n3.txt").read_text()
    assert json.loads((tmp_path / "chains_n3.json").read_text()) == json.loads((GOLDEN / "chains_n3.json").read_text())
    assert run(capsys, "enumerate", "--n", "1")[1] == "n=1 chains=1 disjoint=1\n"


def test_graphs_census_matches_golden(capsys, tmp_path):
    code, out, _ = run(capsys, "graphs", "--n", "4", "--out", str(tmp_path))
    assert code == 0
    assert out.startswith("n=4 chains=1236 graphs=499 iso_classes=7 omega_rho_classes=4")
    assert json.loads((tmp_path / "census_n4.json").read_text()) == json.loads((GOLDEN / "census_n4.json").read_text())
    certs = (tmp_path / "certificates_n4.txt").read_text().split()
    assert len(certs) == 7


def test_verify_and_negative_control(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4")
    assert code == 0 and out.splitlines()[-1] == "PASS"
    assert out.splitlines()[0].startswith("n=3 chains=70 PASS")
    code, out, err = run(capsys, "verify", "--n", "3", "--corrupt")
    assert code == 1 and out.splitlines()[-1] == "FAIL"
    assert "witness" in err


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--zeta", "(1,4,5,3,2,6)")
    assert code == 0
    assert out.splitlines() == [
        "chains=11",
        "K = Q{2} + Q{1,2} + Q{3} + 2*Q{1,3} + Q{2,3} + 2*Q{1,4} + 2*Q{2,4} + Q{3,4}",
        "K = s[3,2] + s[3,1,1]",
    ]
    code, out, _ = run(capsys, "expand", "--zeta", "(1,2)")
    assert out.splitlines()[-1] == "K = s[1]"
    code, out, _ = run(capsys, "expand", "--u", "142635", "--w", "456123", "--k", "3", "--oracle")
    assert code == 0 and "oracle match" in out and "K = s[3,2] + s[3,1,1]" in out


def test_export(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--zeta", "(1,4,5,3,2,6)", "--format", "dot")
    assert code == 0 and out.startswith("graph G {") and out.count(" -- ") == 12
    code, _, _ = run(capsys, "export", "--zeta", "(1,2,4,5,3,6)", "--format", "json", "--out", str(tmp_path))
    data = json.loads((tmp_path / "graph.json").read_text())
    assert data["components"] == [9] and len(data["edges"]) == 9


@pytest.mark.parametrize("argv", [
    ["enumerate", "--n", "0"],
    ["enumerate"],
    ["expand", "--n", "4"],
    ["expand", "--zeta", "(1,2)", "--u", "12"],
    ["export", "--n", "4", "--format", "dot"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_io_error(capsys, tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    assert run(capsys, "enumerate", "--n", "2", "--out", str(blocker / "sub"))[0] == 3


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "gbdq", "enumerate", "--n", "2"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "n=2 chains=6 disjoint=4\n"
