import io
import json
import subprocess
import sys

import pytest

from d0linfer.cli import main


def run(argv):
    out = io.StringIO()
    code = main([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.fixture
def seq(tmp_path):
    def write(*words, name="in.seq"):
        path = tmp_path / name
        path.write_text("\n".join(words) + "\n")
        return path

    return write


def test_infer_exact(seq):
    code, text = run(["infer", seq("a", "ab", "abab")])
    assert code == 0 and "a -> ab" in text and "b -> ab" in text
    code, text = run(["infer", "--backend", "exact", seq("aa", "ab")])
    assert (code, text) == (1, "INFEASIBLE\n")
    assert run(["infer", "--backend", "exact-generic", seq("ab", "ba")])[0] == 0


def test_infer_sat_and_qaoa(seq):
    assert run(["infer", "--backend", "sat-internal", seq("ab", "ba")])[0] == 0
    assert run(["infer", "--backend", "sat-internal", seq("aa", "ab")])[0] == 1
    code, text = run(["infer", "--backend", "qaoa", "--p", "3", seq("ab", "ba")])
    assert code == 0 and text.startswith("axiom: ab")
    code, text = run(["infer", "--backend", "qaoa", "--p", "3", seq("aa", "ab")])
    assert code == 4 and text.startswith("UNVERIFIED") and "# selected:" in text


def test_infer_resource_caps(seq):
    # w_1 of length 4 under "abc": 5 + 15 + 5 = 25 vertices, above the 24-qubit cap
    path = seq("abc", "abcd")
    assert run(["infer", "--backend", "qaoa", path])[0] == 3
    path = seq("abcab", "abcab")
    assert run(["infer", "--backend", "qaoa", path])[0] == 3
    assert run(["infer", "--backend", "sat-internal", path])[0] == 3
    assert run(["infer", "--budget", "1", seq("abab", "aabbaabbab")])[0] == 3


def test_infer_json_and_trace(seq, tmp_path):
    code, text = run(["infer", "--json", seq("a", "ab", "abab")])
    doc = json.loads(text)
    assert code == 0 and doc["outcome"] == "system" and doc["stats"]["k"] == 3
    trace = tmp_path / "trace.json"
    code, text = run(["infer", "--backend", "qaoa", "--iters", "5", "--trace", trace, "--json", seq("ab", "ba")])
    assert len(json.loads(trace.read_text())) == 6
    assert "history" not in json.loads(text)


def test_usage_and_parse_errors(seq, tmp_path):
    assert run(["infer", tmp_path / "missing.seq"])[0] == 2
    assert run(["infer", seq("only")])[0] == 2
    with pytest.raises(SystemExit) as exc:
        run(["infer", "--backend", "magic", seq("a", "a")])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["infer", "--shots", "0", seq("a", "a")])
    assert exc.value.code == 2


def test_export(seq, tmp_path):
    out = tmp_path / "f.cnf"
    assert run(["export", "--cnf", seq("ab", "ba"), "-o", out])[0] == 0
    assert "p cnf 6 14" in out.read_text().splitlines()
    dot = tmp_path / "g.dot"
    assert run(["export", "--dot", seq("a", "a"), "-o", dot])[0] == 0
    assert dot.read_text().count("[label=") == 1 and " -- " not in dot.read_text()
    qj = tmp_path / "q.json"
    assert run(["export", "--qubo", seq("aa", "ab"), "-o", qj])[0] == 0
    rows = json.loads(qj.read_text())["rows"]
    assert all(rows[t][t] == -1 for t in range(len(rows)))
    gj = tmp_path / "g.json"
    assert run(["export", "--graph-json", seq("ab", "ba"), "-o", gj])[0] == 0
    assert json.loads(gj.read_text())["k"] == 2


def test_export_is_byte_deterministic(seq, tmp_path):
    path = seq("aab", "abba", "ba")
    for flag in ("--dot", "--qubo", "--cnf", "--graph-json"):
        a, b = tmp_path / "a", tmp_path / "b"
        run(["export", flag, path, "-o", a])
        run(["export", flag, path, "-o", b])
        assert a.read_bytes() == b.read_bytes()


def test_verify(seq, tmp_path):
    system = tmp_path / "s.sys"
    system.write_text("axiom: a\na -> ab\nb -> ab\n")
    code, text = run(["verify", seq("a", "ab", "abab"), system])
    assert (code, text) == (0, "COMPATIBLE\n")
    assert run(["verify", seq("a", "ab", "aba"), system])[0] == 1
    system.write_text("axiom: a\na => ab\n")
    assert run(["verify", seq("a", "ab"), system])[0] == 2


def test_gen_is_deterministic(tmp_path):
    args = ["gen", "--alphabet", 3, "--max-succ", 2, "--steps", 3, "--seed", 7]
    assert run(args + ["-o", tmp_path / "x"])[0] == 0
    assert run(args + ["-o", tmp_path / "y"])[0] == 0
    for ext in ("seq", "sys"):
        assert (tmp_path / f"x.{ext}").read_bytes() == (tmp_path / f"y.{ext}").read_bytes()
    assert run(["verify", tmp_path / "x.seq", tmp_path / "x.sys"])[0] == 0


def test_decode(seq, tmp_path):
    model = tmp_path / "m.txt"
    model.write_text("s UNSATISFIABLE\n")
    assert run(["decode", seq("aa", "ab"), model]) == (1, "INFEASIBLE\n")
    model.write_text("s SATISFIABLE\nv -1 -2 3 -4 -5 6 0\n")
    code, text = run(["decode", seq("ab", "ba"), model])
    assert code == 0 and "a -> ba" in text and "b -> " in text
    model.write_text("v 1 2 3 0\n")
    assert run(["decode", seq("ab", "ba"), model])[0] == 2


def test_module_entry_point(seq):
    proc = subprocess.run(
        [sys.executable, "-m", "d0linfer", "infer", str(seq("a", "ab", "abab"))],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "a -> ab" in proc.stdout
