"""End-to-end runs of every subcommand against recorded stdout."""

import json
import shutil
from pathlib import Path

import pytest

from obstacles.cli import main
from obstacles.io import parse_drawing, parse_graph, parse_polygon, parse_scene

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "obs_drawing": ["obs-drawing", "cross.drawing", "--svg", "out.svg", "--emit-scene", "out.scene"],
    "vc_represent": ["vc-represent", "tail_star.graph", "-o", "out.scene", "--svg", "out.svg"],
    "lb_drawing": ["lb-drawing", "-n", "8", "--verify", "-o", "out.drawing", "--svg", "out.svg"],
    "planar_represent": ["planar-represent", "tail_star.graph", "-o", "out.scene", "--svg", "out.svg"],
    "hardness_gen": ["hardness-gen", "--values", "6,7,7,6,7,7", "--witness", "-o", "gadget", "--svg", "out.svg"],
    "ordertype": ["ordertype", "cross.drawing"],
    "blocking": ["blocking", "wall.scene"],
    "cutpath": ["cutpath", "wall.scene", "--obstacle", "0", "--svg", "out.svg"],
    "kernel": ["kernel", "tail_star.graph", "-h", "2", "--threshold", "1", "-o", "out.graph"],
    "etr_export": ["etr-export", "tail_star.graph", "-h", "2", "-o", "out.etr"],
}


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    for f in DATA.iterdir():
        shutil.copy(f, tmp_path / f.name)
    monkeypatch.chdir(tmp_path)
    return tmp_path


def run(argv, capsys):
    code = main(argv)
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden_stdout(name, workdir, capsys):
    code, out, _ = run(CASES[name], capsys)
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


@pytest.mark.parametrize("name", sorted(n for n in CASES if any(a.startswith("-o") or a == "--svg" for a in CASES[n])))
def test_reruns_are_byte_identical(name, workdir, capsys):
    run(CASES[name], capsys)
    first = {p.name: p.read_bytes() for p in workdir.iterdir() if p.is_file()}
    run(CASES[name], capsys)
    second = {p.name: p.read_bytes() for p in workdir.iterdir() if p.is_file()}
    assert first == second


def test_manifest_contents(workdir, capsys):
    run(CASES["etr_export"], capsys)
    manifest = json.loads((workdir / "out.etr.manifest.json").read_text())
    assert manifest["command"] == "etr-export"
    assert manifest["inputs"][0]["path"] == "tail_star.graph"
    assert len(manifest["inputs"][0]["sha256"]) == 64
    assert manifest["outputs"][0]["path"] == "out.etr"
    assert manifest["parameters"]["h"] == 2
    assert "tool_version" in manifest


def test_outputs_parse_back(workdir, capsys):
    run(CASES["hardness_gen"], capsys)
    g = parse_graph((workdir / "gadget.graph").read_text())
    assert (g.n, g.m) == (46, 55)
    parse_polygon((workdir / "gadget.poly").read_text())
    placement = parse_scene((workdir / "gadget.placement").read_text())
    assert placement.container is not None
    run(CASES["lb_drawing"], capsys)
    assert parse_drawing((workdir / "out.drawing").read_text()).graph.n == 8


def test_parse_error_exit_code(workdir, capsys):
    code, _, err = run(["kernel", "bad.graph", "-h", "1"], capsys)
    assert code == 2
    assert "line 2, column 5" in err


def test_missing_file_exit_code(workdir, capsys):
    code, _, _ = run(["ordertype", "nope.drawing"], capsys)
    assert code == 2


def test_invariant_exit_code(workdir, capsys):
    code, _, err = run(["obs-drawing", "dup.drawing"], capsys)
    assert code == 3
    assert "positions pairwise distinct" in err


def test_invalid_partition_exit_code(workdir, capsys):
    code, _, _ = run(["hardness-gen", "--values", "1,2,3"], capsys)
    assert code == 3


def test_budget_exit_code(workdir, capsys):
    code, out, _ = run(["obs-drawing", "branchy.drawing", "--budget", "1"], capsys)
    assert code == 4
    assert "optimal = false" in out
