import json
import subprocess
import sys

import pytest

from iesieve.cli import main


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return {
        "g1": write("g1.graph", "# triangle plus pendant\n4 4\n0 1\n0 2\n1 2\n0 3\n"),
        "perm3": write("perm3.mat", "3\n1 1 1\n1 1 0\n0 1 1\n"),
        "six_node": write("six_node.graph", "6 7\n0 1\n0 3\n1 2\n1 4\n1 5\n2 5\n3 4\n"),
        "tri": write("tri.graph", "3 3\n0 1\n0 2\n1 2\n"),
        "p5": write("p5.graph", "5 4\n0 1\n1 2\n2 3\n3 4\n"),
        "split": write("split.graph", "4 2\n0 1\n2 3\n"),
        "f2": write("f2.setfn", "2\n1 0 0 0\n"),
        "bad": write("bad.graph", "3 1\n0 9\n"),
        "big": write("big.graph", "40 0\n"),
    }


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_color_count(capsys, files):
    assert run(capsys, "color-count", files["g1"], "--colors", "3") == (0, "18\n", "")
    for method in ("table", "polyspace", "mobius"):
        assert run(capsys, "color-count", files["g1"], "--colors", "3", "--method", method)[1] == "18\n"
    assert run(capsys, "color-count", files["g1"], "--colors", "3", "--oracle")[1] == "18\n"


def test_permanent(capsys, files):
    assert run(capsys, "permanent", files["perm3"])[1] == "3\n"
    assert run(capsys, "permanent", files["perm3"], "--gray")[1] == "3\n"
    assert run(capsys, "permanent", files["perm3"], "--oracle")[1] == "3\n"


def test_kpath_exit_codes(capsys, files):
    assert run(capsys, "kpath", files["tri"], "-k", "4", "--trials", "50", "--seed", "1")[:2] == (1, "not-found\n")
    assert run(capsys, "kpath", files["p5"], "-k", "5", "--seed", "1")[:2] == (0, "found\n")
    assert run(capsys, "kpath", files["p5"], "-k", "5", "--start", "2", "--trials", "5")[:2] == (1, "not-found\n")
    assert run(capsys, "kpath", files["p5"], "-k", "5", "--oracle")[:2] == (0, "found\n")


def test_pm_count_trace(capsys, files):
    code, out, err = run(capsys, "pm-count", files["six_node"], "--trace")
    assert (code, out) == (0, "2\n")
    assert "trace: S=0x3f e=7 term=35" in err.splitlines()


def test_graph_commands(capsys, files):
    assert run(capsys, "chromatic", files["g1"])[1] == "3\n"
    assert run(capsys, "chromatic", files["g1"], "--oracle")[1] == "3\n"
    assert run(capsys, "hamiltonian", files["p5"], "--start", "0")[1] == "1\n"
    assert run(capsys, "hamiltonian", files["g1"], "--total")[1] == "2\n"
    assert run(capsys, "hamiltonian", files["g1"], "--total", "--oracle")[1] == "2\n"
    assert run(capsys, "steiner", files["p5"], "--terminals", "0,3")[1] == "4\n"
    assert run(capsys, "steiner", files["p5"], "--terminals", "0,3", "--oracle")[1] == "4\n"
    assert run(capsys, "steiner", files["split"], "--terminals", "0,3")[1] == "none\n"


def test_table_commands(capsys, files):
    assert run(capsys, "indep-table", files["g1"])[1] == "4\n0 1 1 2 1 2 2 3 1 2 3 4 3 4 5 6\n"
    assert run(capsys, "indep-table", files["g1"], "--oracle")[1] == "4\n0 1 1 2 1 2 2 3 1 2 3 4 3 4 5 6\n"
    assert run(capsys, "zeta", files["f2"])[1] == "2\n1 1 1 1\n"
    assert run(capsys, "mobius", files["f2"])[1] == "2\n1 -1 -1 1\n"
    assert run(capsys, "mobius", files["f2"], "--oracle")[1] == "2\n1 -1 -1 1\n"


def test_json_output(capsys, files):
    code, out, _ = run(capsys, "kpath", files["p5"], "-k", "5", "--seed", "7", "--json")
    record = json.loads(out)
    assert code == 0
    assert set(record) == {"command", "n", "value", "elapsed_ms", "method", "seed"}
    assert record["value"] == "found" and record["seed"] == 7 and record["n"] == 5
    record = json.loads(run(capsys, "color-count", files["g1"], "--colors", "3", "--json")[1])
    assert record["value"] == "18" and record["method"] == "table"


def test_errors(capsys, files):
    code, out, err = run(capsys, "chromatic", files["bad"])
    assert code == 2 and out == "" and err.startswith("error:") and "line 2" in err
    code, _, err = run(capsys, "chromatic", files["big"])
    assert code == 3 and err.startswith("error:")
    code, _, err = run(capsys, "color-count", files["g1"])
    assert code == 2 and err.startswith("error:")
    assert run(capsys, "nosuch", files["g1"])[0] == 2
    assert run(capsys, "chromatic", "/nonexistent/file")[0] == 2
    assert run(capsys, "kpath", files["p5"], "-k", "40")[0] == 2
    assert run(capsys, "hamiltonian", files["p5"], "--start", "9")[0] == 2


def test_threads_do_not_change_output(capsys, files):
    one = run(capsys, "hamiltonian", files["g1"], "--total", "--threads", "1")
    two = run(capsys, "hamiltonian", files["g1"], "--total", "--threads", "2")
    assert one == two


def test_module_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "iesieve", "permanent", files["perm3"]], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == "3\n"
