import json

import pytest

from orthosemi import (C2Elt, FiniteSemigroup, InvalidEntry, RhoType, left_zero, rees_quotient_Mk,
                       sub_lattice)
from orthosemi import io
from orthosemi.cli import dispatch


def run(capsys, *argv):
    code = dispatch(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# -- file formats ---------------------------------------------------------------------

def test_table_roundtrip(tmp_path):
    S = FiniteSemigroup([[0, 0], [1, 1]], names=["a", "b"])
    path = tmp_path / "t.json"
    io.write_table(S, path)
    T = io.read_table(path)
    assert T == S and T.names == ("a", "b")
    assert json.loads(path.read_text()) == {"order": 2, "table": [[0, 0], [1, 1]], "names": ["a", "b"]}


@pytest.mark.parametrize("text", ["not json", "[1, 2]", '{"order": 2}',
                                  '{"order": 2, "table": [[0, 1], [1, 2]]}'])
def test_table_format_errors(text):
    with pytest.raises(InvalidEntry):
        io.loads_table(text)


def test_corpus_document_roundtrip():
    sgs = [left_zero(2), rees_quotient_Mk(2)]
    doc = io.corpus_document(sgs, 0, "iso")
    back = io.semigroups_from_corpus_document(json.loads(json.dumps(doc)))
    assert [S.rows for S in back] == [S.rows for S in sgs]
    with pytest.raises(InvalidEntry):
        io.semigroups_from_corpus_document({"format": "other"})


def test_symbolic_serialization():
    u = C2Elt(2, 1, 0, 1)
    assert io.c2_to_text(u) == "((2,1),(0,1))"
    assert io.c2_from_document(json.loads(json.dumps(io.c2_document(u)))) == u
    t = RhoType(3, "∞+")
    assert io.rho_from_document(io.rho_document(t)) == t


def test_dot_export():
    dot = io.lattice_to_dot(sub_lattice(left_zero(3)))
    assert dot.startswith("digraph Sub {") and dot.rstrip().endswith("}")
    assert dot.count("[label=") == 8 and dot.count("->") == 12


# -- command line ---------------------------------------------------------------------

def test_classify_command(capsys):
    code, out, _ = run(capsys, "classify", "--spec", "rectangular_band:2,2")
    assert code == 0
    assert "rectangular_band     yes" in out and "inverse              no" in out


def test_sublattice_dot(capsys):
    code, out, _ = run(capsys, "sublattice", "--spec", "left_zero:3", "--format", "dot")
    assert code == 0 and out.count("[label=") == 8


def test_latiso_command(capsys):
    code, out, _ = run(capsys, "latiso", "--left", "left_zero:3", "--right", "chain:3")
    assert code == 0 and out.startswith("lattice isomorphism (8 nodes)")
    code, out, _ = run(capsys, "latiso", "--left", "cyclic_group:2", "--right", "chain:2",
                       "--format", "structured")
    assert code == 0 and json.loads(out) == {"isomorphic": False}


def test_file_and_stdin_inputs(capsys, tmp_path, monkeypatch):
    path = tmp_path / "m2.json"
    io.write_table(rees_quotient_Mk(2), path)
    code, out, _ = run(capsys, "green", "--file", str(path), "--format", "structured")
    assert code == 0 and json.loads(out)["D"] == [[0], [1, 2, 3, 4]]
    import io as stdio
    monkeypatch.setattr("sys.stdin", stdio.StringIO('{"order": 1, "table": [[0]]}'))
    code, out, _ = run(capsys, "construct", "--file", "-", "--format", "structured")
    assert code == 0 and json.loads(out) == {"order": 1, "table": [[0]]}


@pytest.mark.parametrize("argv", [
    ["classify", "--spec", "chain:2", "--format", "dot"],
    ["classify"],
    ["classify", "--spec", "chain:2", "--file", "x.json"],
    ["frobnicate"],
    ["rho", "2"],
    ["enumerate", "two"],
])
def test_usage_errors_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = dispatch(argv)
        raise SystemExit(code)
    assert exc.value.code == 2


@pytest.mark.parametrize("argv", [
    ["classify", "--spec", "bogus:3"],
    ["gamma", "--spec", "null:2"],
    ["sublattice", "--spec", "mk:3"],
    ["enumerate", "6"],
    ["suite", "no-such"],
    ["classify", "--file", "/nonexistent/table.json"],
])
def test_computation_errors_exit_1(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1 and err.startswith("orthosemi: ")


def test_commands_are_deterministic(capsys, tmp_path):
    cmds = [
        ["construct", "--spec", "cyclic:2*rect:2,2"],
        ["gamma", "--spec", "cyclic:2*rect:2,2", "--format", "structured"],
        ["kernel", "--spec", "cyclic:2*rect:2,2"],
        ["mk", "3", "--format", "structured"],
        ["rho", "2,inf-"],
        ["rho", "1,omega", "--format", "structured"],
        ["extension", "2,omega", "--bound", "5"],
        ["enumerate", "3", "--mode", "iso_or_anti", "--threads", "3"],
        ["corpus", "3", "--cache-dir", str(tmp_path)],
        ["latiso", "--left", "cyclic_group:4", "--right", "cyclic_group:4", "--format", "dot"],
    ]
    for argv in cmds:
        first = run(capsys, *argv)
        second = run(capsys, *argv)
        assert first[0] == 0 and first == second, argv


def test_enumerate_threads_identical(capsys):
    a = run(capsys, "enumerate", "4", "--threads", "1")
    b = run(capsys, "enumerate", "4", "--threads", "4")
    assert a == b and a[1].startswith("188 semigroups")


def test_rho_structured(capsys):
    code, out, _ = run(capsys, "rho", "2,inf+", "--format", "structured")
    doc = json.loads(out)
    assert doc["l"] == "inf" and doc["r"] == 2 and doc["kernel"] == "bicyclic"
    assert doc["type"] == {"k": 2, "flavor": "inf+"}


def test_suite_command(capsys, cache_dir):
    code, out, _ = run(capsys, "suite", "--list")
    assert code == 0 and "band-lattice-closed-4" in out.split()
    code, out, _ = run(capsys, "suite", "bicyclic-presentation", "--format", "structured")
    doc = json.loads(out)
    assert code == 0 and doc["passed"] and all(c["status"] == "pass" for c in doc["checks"])


def test_suite_failure_sets_exit_status(capsys, monkeypatch):
    from orthosemi import suites

    def broken(report, **_):
        report.add("always", False, "forced", witness=42)
    monkeypatch.setitem(suites.SUITES, "broken", broken)
    code, out, _ = run(capsys, "suite", "broken")
    assert code == 1 and "[FAIL] broken/always" in out and "42" in out
