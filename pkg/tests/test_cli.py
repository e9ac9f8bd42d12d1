import json
import subprocess
import sys


from weiduality.anchors import anchor_for
from weiduality.cli import main

F2 = {"kind": "field", "p": 2, "e": 1}
Z4 = {"kind": "chain-ring", "p": 2, "s": 2}
REPETITION = {"ring": F2, "m": 3, "generator": [[1, 1, 1]]}


def write(tmp_path, name, obj):
    path = tmp_path / name
    path.write_text(json.dumps(obj))
    return str(path)


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out) if out.lstrip().startswith("{") else out


def test_ghw_and_dlp(tmp_path, capsys):
    path = write(tmp_path, "code.json", REPETITION)
    code, doc = run(capsys, "ghw", path)
    assert code == 0 and doc["tables"]["d"] == [0, 3]
    code, doc = run(capsys, "ghw", path, "--method", "subcode")
    assert code == 0 and doc["tables"]["d"] == [0, 3]
    code, doc = run(capsys, "dlp", path)
    assert code == 0 and doc["tables"]["K"] == [0, 0, 0, 1]


def test_malformed_input(tmp_path, capsys):
    broken = write(tmp_path, "broken.json", {"ring": F2, "m": 3, "generator": [[1, 1], [1]]})
    code, doc = run(capsys, "ghw", broken)
    assert code == 2
    assert doc["exit_code"] == 2 and "error" in doc
    garbage = tmp_path / "garbage.json"
    garbage.write_text("{not json")
    code, doc = run(capsys, "ghw", str(garbage))
    assert code == 2
    code, doc = run(capsys, "ghw", str(tmp_path / "missing.json"))
    assert code == 2


def test_cap_exceeded(tmp_path, capsys):
    big = {"ring": {"kind": "field", "p": 2, "e": 1}, "m": 6, "generator": [[1, 0, 0, 0, 0, 1], [0, 1, 0, 0, 1, 0], [0, 0, 1, 1, 0, 0]]}
    path = write(tmp_path, "big.json", big)
    code, doc = run(capsys, "ghw", path, "--method", "subcode", "--cap", 2)
    assert code == 3 and doc["exit_code"] == 3
    code, doc = run(capsys, "ghw", path, "--cap", 0)
    assert code == 2


def test_weights_delsarte(tmp_path, capsys):
    flag = {"ring": F2, "w_dim": 2, "m": 2, "flags": [[[[[1, 0], [0, 1]]]]]}
    code, doc = run(capsys, "weights", "delsarte", write(tmp_path, "flag.json", flag))
    assert code == 0 and doc["tables"]["d"] == [0, 2]


def test_weights_gr_defaults_to_galois_family(tmp_path, capsys):
    flag = {"ring": {"kind": "field", "p": 2, "e": 2}, "w_dim": 1, "m": 2, "flags": [[[[1, 2]]]]}
    code, doc = run(capsys, "weights", "gr", write(tmp_path, "gab.json", flag))
    assert code == 0 and doc["tables"]["d"] == [0, 2]
    code, doc = run(capsys, "weights", "gr", write(tmp_path, "gab.json", flag), "--family", "full")
    assert code == 0 and doc["tables"]["d"] == [0, 1]


def test_checks(tmp_path, capsys):
    path = write(tmp_path, "code.json", REPETITION)
    for name in ("wei", "forney"):
        code, doc = run(capsys, "check", name, path)
        assert code == 0 and doc["summary"]["passed"]
    z4 = write(tmp_path, "z4.json", {"ring": Z4, "m": 2, "generator": [[2, 2]]})
    poset = write(tmp_path, "poset.json", {"n": 2, "cover_pairs": []})
    code, doc = run(capsys, "check", "t74", z4, poset)
    assert code == 0
    assert all(c["anchor"] for c in doc["records"])


def test_check_t22_perturbed(tmp_path, capsys):
    p1 = write(tmp_path, "p1.json", {"phi": [0, 3], "psi": [0, 0, 0, 1]})
    good = write(tmp_path, "good.json", {"psi": [0, 0, 1, 2]})
    bad = write(tmp_path, "bad.json", {"psi": [0, 1, 1, 2]})
    code, doc = run(capsys, "check", "t22", p1, good)
    assert code == 0
    code, doc = run(capsys, "check", "t22", p1, bad)
    assert code == 1
    failing = [c for c in doc["records"] if not c["passed"]]
    assert failing and any(c["name"] == "t22.s1" and c["witness"]["l"] == 1 for c in failing)


def test_dual_demimatroid_and_even_flag(tmp_path, capsys):
    dm = write(tmp_path, "dm.json", {"m": 2, "w": 1, "f": [0, 1, 0, 1]})
    code, doc = run(capsys, "dual", "demimatroid", dm)
    assert code == 0 and doc["tables"]["dual"]["f"] == [0, 0, 1, 1]
    even = {"ring": F2, "w_dim": 1, "m": 2, "flags": [[[[1, 0], [0, 1]], [[1, 1]]]]}
    code, doc = run(capsys, "dual", "flags", write(tmp_path, "even.json", even))
    assert code == 2
    assert doc["error"]["condition"] == "remark71.odd_length"
    assert doc["error"]["anchor"] == anchor_for("remark71.odd_length")


def test_text_format_and_out(tmp_path, capsys):
    path = write(tmp_path, "code.json", REPETITION)
    code, text = run(capsys, "ghw", path, "--format", "text")
    assert code == 0 and "PASS" in text.upper()
    out = tmp_path / "report.json"
    code = main(["ghw", path, "--out", str(out)])
    assert code == 0 and json.loads(out.read_text())["tables"]["d"] == [0, 3]


def test_fuzz_counts_and_determinism(tmp_path, capsys):
    code, doc = run(capsys, "fuzz", "--codes", 0)
    assert code == 0 and doc["records"] == []
    assert set(doc["tables"]["instances"].values()) == {0}
    args = ["fuzz", "--seed", 7, "--codes", 30, "--q", 2, "--m", 6]
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    assert main([str(a) for a in args] + ["--out", str(first)]) == 0
    assert main([str(a) for a in args] + ["--out", str(second)]) == 0
    assert first.read_bytes() == second.read_bytes()


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "code.json", REPETITION)
    proc = subprocess.run([sys.executable, "-m", "weiduality", "ghw", path], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["tables"]["d"] == [0, 3]


def test_plain_code_as_flag(tmp_path, capsys):
    code_path = write(tmp_path, "code.json", REPETITION)
    chain = write(tmp_path, "chain.json", {"n": 3, "shape": "chain"})
    code, doc = run(capsys, "weights", "poset", code_path, chain)
    assert code == 0 and doc["tables"]["d"] == [0, 3]
    code, doc = run(capsys, "check", "t72", code_path, chain)
    assert code == 0
