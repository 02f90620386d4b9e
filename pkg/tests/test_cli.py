import io
import json
import subprocess
import sys

import pytest

from helly.cli import run


def call(argv, stdin=None):
    out, err = io.StringIO(), io.StringIO()
    old = sys.stdin
    if stdin is not None:
        sys.stdin = io.StringIO(stdin)
    try:
        code = run(argv, stdout=out, stderr=err)
    finally:
        sys.stdin = old
    return code, out.getvalue(), err.getvalue()


def doc(argv, stdin=None):
    code, out, _ = call(argv, stdin)
    return code, json.loads(out) if out.strip() else None


def test_build_verify_pipe():
    _, built, _ = call(["build", "prop21", "--t", "3"])
    code, v = doc(["verify", "-", "--mode", "f"], stdin=built)
    assert code == 0 and v["verdict"] == "holds"
    assert v["weight_sum"] == {"num": "1", "den": "1"}


def test_shell_pipe():
    p = subprocess.run("helly build prop21 --t 3 | helly verify - --mode f", shell=True, capture_output=True, text=True)
    assert p.returncode == 0 and '"verdict":"holds"' in p.stdout


def test_oracle_helly():
    code, d = doc(["oracle", "helly", "--n", "2", "--t", "1", "--q", "2"])
    assert code == 0 and d["h"] == 4


def test_golay_verify():
    code, d = doc(["code", "golay", "--verify"])
    assert code == 0 and (d["n"], d["d"], d["size"]) == (23, 7, 4096)


def test_failing_verdict_exit_code():
    _, built, _ = call(["build", "ternary", "--t", "2"])
    assert call(["verify", "-", "--mode", "f"], stdin=built)[0] == 1
    assert call(["verify", "-", "--mode", "fprime"], stdin=built)[0] == 0


def test_usage_errors():
    assert call(["nope"])[0] == 2
    code, _, err = call(["verify", "-"], stdin='{"a": 1,\n oops}')
    assert code == 2 and "line 2" in err
    assert call(["hit", "pq", "-"], stdin='{"version":1,"alphabet":2,"n":1,"t":0,"centers":[[0]]}')[0] == 2


def test_budget_error(monkeypatch):
    monkeypatch.setenv("HELLY_BUDGET_CODEWORDS", "10")
    code, _, err = call(["code", "hamming", "--r", "3"])
    assert code == 2 and "budget" in err


def test_tsv_format():
    code, out, _ = call(["oracle", "helly", "--n", "1", "--t", "0", "--q", "2", "--format", "tsv"])
    assert code == 0 and "h\t2" in out.splitlines()


def test_determinism(tmp_path):
    fam = tmp_path / "f.json"
    fam.write_text(json.dumps({"version": 1, "alphabet": 2, "n": 4, "t": 1,
                               "centers": [[0, 0, 0, 0], [0, 1, 1, 0], [1, 1, 0, 0], [0, 0, 1, 1], [1, 0, 1, 0]]}))
    for argv in (["hit", "tuples", str(fam)], ["hit", "pairs", str(fam)], ["core", str(fam)],
                 ["intersect", str(fam)], ["free", str(fam)]):
        first = call(argv)
        assert first[0] in (0, 1)
        assert call(argv) == first


def test_hex_points_accepted(tmp_path):
    fam = tmp_path / "f.json"
    fam.write_text(json.dumps({"version": 1, "alphabet": 2, "n": 3, "t": 0, "centers": ["0x5", "0x5"]}))
    code, d = doc(["oracle", "intersect", str(fam)])
    assert code == 0 and d["point"] == [1, 0, 1]


@pytest.mark.parametrize("argv", [
    ["prague", "kneser", "--n", "5", "--k", "2"],
    ["prague", "cliques", "--m", "4"],
    ["prague", "clique-plus-vertex", "--n", "3"],
    ["prague", "cut", "--m", "3"],
    ["oracle", "maxf", "--n", "2", "--t", "1", "--q", "2", "--m-cap", "5"],
    ["build", "setseq", "--n", "3", "--t", "1", "--a", "2", "--b", "1"],
    ["code", "trivial", "--k", "3"],
])
def test_commands_succeed(argv):
    assert call(argv)[0] == 0


def test_matching_from_edge_list():
    code, d = doc(["prague", "matching", "-"], stdin="6 3\n1 2\n3 4\n5 6\n")
    assert code == 0 and d["size"] == 3 and d["tpd_lower_bound"] == 2


def test_certify_and_setseq_round_trip():
    _, built, _ = call(["build", "even", "--t", "1"])
    assert doc(["certify", "dimension", "-"], stdin=built)[1]["verdict"] == "holds"
    assert doc(["certify", "events", "-"], stdin=built)[1]["verdict"] == "holds"
    _, ss, _ = call(["build", "setseq", "--n", "4", "--t", "1", "--a", "2", "--b", "2"])
    code, d = doc(["verify", "-"], stdin=ss)
    assert code == 0 and d["m"] == 6 * 16


def test_from_code_pipeline(tmp_path):
    code_file = tmp_path / "h.json"
    code_file.write_text(call(["code", "hamming", "--r", "3"])[1])
    _, built, _ = call(["build", "from-code", "--code", str(code_file), "--t", "4"])
    code, d = doc(["verify", "-", "--mode", "fprime"], stdin=built)
    assert code == 0 and d["m"] == 16


def test_radon_and_hit_pq(tmp_path):
    pts = tmp_path / "p.json"
    pts.write_text(json.dumps({"version": 1, "alphabet": 2, "n": 3, "points": [[0, 0, 0], [0, 1, 1], [1, 1, 0]]}))
    code, d = doc(["radon", str(pts), "--t", "0"])
    assert code == 0 and d["witness_in_hull_of_part"]
    fam = tmp_path / "f.json"
    fam.write_text(json.dumps({"version": 1, "alphabet": 2, "n": 6, "t": 1,
                               "centers": [[0, 0, 0, 0, 0, 0], [1, 0, 0, 0, 0, 0], [1, 1, 1, 1, 1, 1]]}))
    code, d = doc(["hit", "pq", str(fam), "--p", "3", "--q", "2"])
    assert code == 0 and d["complete"]
    # balls 1 and 3 are disjoint, so the (2,2) property fails
    code, d = doc(["hit", "pq", str(fam), "--p", "2", "--q", "2"])
    assert code == 1 and d["verdict"] == "fails"


def test_help_mentions_statement():
    code, out, _ = call(["oracle", "--help"])
    assert code == 0
