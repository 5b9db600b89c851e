import json
import subprocess
import sys
import xml.etree.ElementTree as ET

import pytest

from nodalpq.bipoly import BiPoly
from nodalpq.cli import run
from nodalpq.exact import QQ

SVG = "{http://www.w3.org/2000/svg}"


@pytest.fixture(scope="module")
def lissajous_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("cli") / "lissajous_3_5.json"
    assert run(["lissajous", "-p", "3", "-q", "5", "--out", str(path)]) == 0
    return path


def lines(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def test_gaps_table(capsys):
    assert run(["gaps", "-p", "3", "-q", "5"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 5
    assert rows[-1].split() == ["7", "(0,0)"]


def test_semigroup(capsys):
    assert run(["semigroup", "-p", "5", "-q", "7", "--corners", "2,1"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["gaps"] == [1, 2, 3, 4, 8, 9]


def test_enumerate_is_reproducible(capsys):
    assert run(["enumerate", "-p", "5", "-q", "7"]) == 0
    first = capsys.readouterr().out
    assert run(["enumerate", "-p", "5", "-q", "7"]) == 0
    assert capsys.readouterr().out == first
    recs = lines(first)
    assert len(recs) == 10 and all(r["closed"] for r in recs)
    assert run(["enumerate", "-p", "3", "-q", "5", "--region", "delta1", "--all"]) == 0
    assert any(not r["closed"] for r in lines(capsys.readouterr().out))


def test_curve_json_is_byte_stable(lissajous_file, tmp_path, capsys):
    text = lissajous_file.read_text()
    assert run(["certify", "--curve", str(lissajous_file)]) == 0
    assert json.loads(capsys.readouterr().out)["certified"] is True
    copy = tmp_path / "again.json"
    assert run(["lissajous", "-p", "3", "-q", "5", "--out", str(copy)]) == 0
    assert copy.read_text() == text


def test_wsg(lissajous_file, capsys):
    assert run(["wsg", "--curve", str(lissajous_file)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["gaps"] == [] and len(data["witnesses"]) == 4
    assert not any(w["is_gap"] for w in data["witnesses"])


def test_product_and_wsg(tmp_path, capsys):
    path = tmp_path / "c.json"
    argv = ["product", "-p", "5", "-q", "9", "--xs", "0,1,2,3,4", "--ys", "0,1,2,3", "--l1", "4", "--l2", "1"]
    assert run(argv + ["--out", str(path)]) == 0
    assert run(["wsg", "--curve", str(path)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["gaps"] == [1, 2, 3, 4, 6, 7, 8, 11, 12, 13, 17, 22]


def test_eliminate(lissajous_file, tmp_path, capsys):
    adj = tmp_path / "H.json"
    adj.write_text(json.dumps(BiPoly.constant(QQ, QQ(1) / 200).to_json()))
    out = tmp_path / "none.json"
    assert run(["eliminate", "--curve", str(lissajous_file), "--adjoint", str(adj), "--out", str(out)]) == 0
    assert json.loads(out.read_text())["nodes"] == []
    assert run(["eliminate", "--curve", str(lissajous_file), "--adjoint", str(adj), "--keep", "9"]) == 2
    # a constant adjoint does not vanish at a kept node
    assert run(["eliminate", "--curve", str(lissajous_file), "--adjoint", str(adj), "--keep", "0"]) == 3


def test_select(tmp_path, capsys):
    curve = tmp_path / "sel.json"
    argv = ["select", "-p", "5", "-q", "7", "--xs", "0,1,2", "--ys", "0,1", "--lambda", "0,0;1,0"]
    assert run(argv + ["--curve-out", str(curve)]) == 0
    H = BiPoly.from_json(json.loads(capsys.readouterr().out))
    assert not H(0, 0) and not H(1, 0) and H(2, 0)
    assert len(json.loads(curve.read_text())["nodes"]) == 2


def test_check_theorems(tmp_path):
    cases = [
        ["-p", "5", "-q", "7", "--theorem", "rectangle", "--l1", "2", "--l2", "1"],
        ["-p", "3", "-q", "5", "--theorem", "HL", "--corners", "0,0"],
        ["-p", "3", "-q", "5", "--theorem", "lift", "--corners", "0,0", "--to", "5,7"],
        ["-p", "5", "-q", "7", "--theorem", "intersect", "--corners", "1,0", "--corners2", "0,1"],
    ]
    for i, argv in enumerate(cases):
        out = tmp_path / f"r{i}.json"
        assert run(["check", *argv, "--out", str(out)]) == 0
        report = json.loads(out.read_text())
        assert report["checks"] and all(c["pass"] for c in report["checks"])


def test_certify_failure_exits_one(lissajous_file, tmp_path, capsys):
    data = json.loads(lissajous_file.read_text())
    data["nodes"] = data["nodes"][:3]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    assert run(["certify", "--curve", str(bad)]) == 1
    out = json.loads(capsys.readouterr().out)
    assert out["certified"] is False and out["error"] == "ExtraSingularities"


def test_usage_errors(capsys):
    assert run(["nosuch"]) == 2
    assert run(["gaps", "-p", "3"]) == 2
    assert run(["check", "-p", "3", "-q", "5", "--theorem", "rectangle"]) == 2
    assert run(["plot", "--curve", "/nonexistent.json", "--out", "x.svg"]) == 2


def test_computation_error_exits_three(capsys):
    assert run(["lissajous", "-p", "4", "-q", "5"]) == 3
    assert run(["product", "-p", "5", "-q", "7", "--xs", "0,1", "--ys", "0", "--l1", "4", "--l2", "2"]) == 3


def test_negative_values_are_not_options(tmp_path):
    out = tmp_path / "c.json"
    assert run(["product", "-p", "5", "-q", "7", "--xs", "-3,1,2,5", "--ys", "-2,0,4", "--l1", "3", "--l2", "2", "--out", str(out)]) == 0
    assert len(json.loads(out.read_text())["nodes"]) == 6


def test_log_json(capsys):
    assert run(["--log-json", "lissajous", "-p", "4", "-q", "5"]) == 3
    records = lines(capsys.readouterr().err)
    assert records and records[-1]["level"] == "error" and records[-1]["error"] == "BadShape"


def test_buchweitz_scan(capsys):
    assert run(["buchweitz-scan", "--p-range", "13..13"]) == 0
    recs = lines(capsys.readouterr().out)
    assert len(recs) == 2
    assert all(r["l2"] == 46 and r["bound"] == 45 and r["violated"] for r in recs)


def test_plot(lissajous_file, tmp_path):
    out = tmp_path / "l.svg"
    assert run(["plot", "--curve", str(lissajous_file), "--window", "-1.2,1.2,-1.2,1.2", "--grid", "200", "--out", str(out)]) == 0
    root = ET.parse(out).getroot()
    assert root.get("version") == "1.1"
    size = float(root.get("width"))
    paths = root.findall(f"{SVG}path")
    assert paths
    for path in paths:
        coords = [tuple(map(float, tok.split(","))) for tok in path.get("d").replace("M", "").split("L")]
        assert all(0 <= x <= size and 0 <= y <= size for x, y in coords)
    assert len(root.findall(f"{SVG}circle")) == 4


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "nodalpq", "gaps", "-p", "2", "-q", "3"], capture_output=True, text=True)
    assert res.returncode == 0 and "(0,0)" in res.stdout
