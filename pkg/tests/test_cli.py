import json

import pytest

from coverable.cli import main
from coverable.formats import parse_covering
from coverable.samples import circle, z3

ARCS = """\
vertex x
vertex y
edge p x y
edge q y x
basepoint x
subcomplex A
cells p
subcomplex B
cells q
cover arcs = A B
"""


def run(capsys, *argv):
    code = main([*argv, "--format", "json"])
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_pi1_builtin(capsys):
    code, report = run(capsys, "pi1", "builtin:wedge2")
    assert code == 0
    assert set(report) == {"command", "inputs", "budgets", "seed", "result"}
    assert report["result"]["presentation"] == "< a b |  >"
    assert report["result"]["abelianization"] == "Z + Z"
    assert len(report["inputs"]["builtin:wedge2"]) == 64


def test_spanier_from_file(capsys, tmp_path):
    path = tmp_path / "arcs.cx"
    path.write_text(ARCS)
    code, report = run(capsys, "spanier", str(path))
    assert code == 0
    assert report["result"]["cover"] == ["A", "B"]
    assert report["result"]["spanier"]["normal_generators"] == []


def test_universal_writes_verifiable_file(capsys, tmp_path):
    out = tmp_path / "z3.cov"
    code, report = run(capsys, "universal", "builtin:z3", "--out", str(out))
    assert code == 0 and report["result"]["covering"]["sheets"] == 3
    code, report = run(capsys, "verify", "builtin:z3", str(out))
    assert code == 0 and report["result"]["verified"]
    assert parse_covering(out.read_text(), z3()).sheets == 3


def test_cover_build_falls_back_to_ball(capsys):
    code, report = run(capsys, "cover-build", "builtin:circle", "--radius", "2")
    assert code == 0
    assert report["result"]["covering"]["truncated"]
    code, report = run(capsys, "cover-build", "builtin:circle", "--subgroup", "a a")
    assert report["result"]["covering"]["sheets"] == 2
    assert report["result"]["image"]["equals_H"]["answer"] == "YES"


def test_tower_report(capsys):
    code, report = run(capsys, "tower", "hawaiian", "3")
    assert code == 0
    assert report["result"]["verdict"] == "LIMIT-NOT-COVERABLE"
    assert report["result"]["classification"]["class"] == "WILD"


def test_wedge_and_t3(capsys):
    code, report = run(capsys, "wedge", "builtin:circle", "builtin:disc", "--samples", "10")
    assert code == 0 and report["result"]["generation_check"]["verdict"]["answer"] == "YES"
    code, report = run(capsys, "t3", "builtin:circle", "builtin:circle")
    assert code == 0 and report["result"]["holds"]


def test_text_output(capsys):
    assert main(["pi1", "builtin:circle"]) == 0
    out = capsys.readouterr().out
    assert "command: pi1" in out and "abelianization: Z" in out


def test_error_exit_codes(capsys, tmp_path):
    code, report = run(capsys, "spanier", "builtin:nope")
    assert code == 1 and "error" in report
    code, report = run(capsys, "pi1", str(tmp_path / "missing.cx"))
    assert code == 2 and report["error"]["type"] == "FileNotFoundError"
    bad = tmp_path / "bad.cx"
    bad.write_text("vertex x\nedge a x\n")
    code, report = run(capsys, "pi1", str(bad))
    assert code == 1 and report["error"]["type"] == "ParseError"


def test_rejects_bad_flags(capsys):
    with pytest.raises(SystemExit):
        main(["pi1", "builtin:circle", "--radius", "0"])
    with pytest.raises(SystemExit):
        main(["tower", "hyperbolic", "3"])


def test_verify_rejects_wrong_base(capsys, tmp_path):
    out = tmp_path / "c.cov"
    run(capsys, "cover-build", "builtin:circle", "--subgroup", "a a", "--out", str(out))
    assert parse_covering(out.read_text(), circle()).sheets == 2
    code, _ = run(capsys, "verify", "builtin:wedge2", str(out))
    assert code == 1
