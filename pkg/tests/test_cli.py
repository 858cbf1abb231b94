"""End-to-end CLI runs through main(argv)."""

from __future__ import annotations

import json

import pytest

import ribbon_moduli.cli as cli
from ribbon_moduli.deformations import Check, VerifyReport
from ribbon_moduli.extcomplex import NotStabilized


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    report = json.loads(out.out) if out.out else None
    return code, report, out.err


def test_classify_semistable_glb(capsys):
    code, report, _ = run(
        capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0", "--index", "4"
    )
    assert code == 0
    assert report["command"] == "classify"
    assert report["params"] == {"g": 3, "gbar": 0, "d": 0, "degL": 1, "index": "4"}
    assert report["result"] == {
        "kind": "rank-1",
        "verdict": "strictly-semistable",
        "b": 4,
        "slopes": {"total": "-2/1", "quotient": "-2/1", "subsheaf": "-2/1"},
        "gr_class": "(-2,-2)",
    }
    assert report["checks"] == []
    assert isinstance(report["ms"], int)


def test_classify_line_bundle(capsys):
    code, report, _ = run(
        capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0", "--index", ""
    )
    assert code == 0
    assert report["result"]["verdict"] == "stable"
    assert report["result"]["b"] == 0
    assert report["result"]["gr_class"] == "self"
    assert report["result"]["slopes"] == {
        "total": "-2/1",
        "quotient": "2/1",
        "subsheaf": "-6/1",
    }


def test_classify_unstable_has_no_gr(capsys):
    code, report, _ = run(
        capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0", "--index", "4,2"
    )
    assert code == 0
    assert report["result"]["verdict"] == "unstable"
    assert report["result"]["gr_class"] is None


def test_classify_vb_paths(capsys):
    code, report, _ = run(
        capsys, "classify", "--g", "4", "--gbar", "0", "--d", "7", "--vb", "2,1,1"
    )
    assert code == 0
    assert report["result"] == {
        "kind": "rank-2",
        "verdict": "strictly-semistable",
        "e": 2,
        "split": "1,1",
        "gr_class": "(1,1)",
    }
    code, report, _ = run(
        capsys, "classify", "--g", "5", "--gbar", "2", "--d", "0", "--vb", "-4"
    )
    assert code == 0
    assert report["result"]["verdict"] == "unknown"
    assert report["result"]["split"] is None


def test_classify_input_errors(capsys):
    code, _, err = run(
        capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0", "--index", "1"
    )
    assert code == 1
    assert err == "error: d - b = 0 - 1 must be even\n"
    code, _, err = run(capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0")
    assert code == 1
    assert "exactly one of --index or --vb" in err
    code, _, err = run(
        capsys,
        "classify", "--g", "3", "--gbar", "0", "--d", "0",
        "--index", "2", "--vb", "2,1,1",
    )
    assert code == 1
    code, _, err = run(
        capsys, "classify", "--g", "3", "--gbar", "0", "--d", "0", "--index", "2,x"
    )
    assert code == 1
    assert "comma-joined integers" in err


def test_usage_errors_exit_1(capsys):
    code, _, err = run(capsys, "classify", "--g", "3")
    assert code == 1 and err.startswith("error:")
    code, _, err = run(capsys, "frobnicate")
    assert code == 1 and err.startswith("error:")


def test_components_report(capsys):
    code, report, _ = run(capsys, "components", "--g", "4", "--gbar", "0", "--d", "0")
    assert code == 0
    assert report["result"]["count"] == 3
    assert report["result"]["glb_components"][0] == {"partition": "", "dim": 4}
    assert report["result"]["vb_component"] == {"status": "not-a-component", "dim": None}
    assert report["result"]["special_case"] is None

    code, report, _ = run(capsys, "components", "--g", "1", "--gbar", "1", "--d", "0")
    assert code == 0
    assert report["result"]["glb_components"] == []
    assert report["result"]["vb_component"] == {"status": "exists", "dim": 2}
    assert report["result"]["special_case"] == {"empty": False, "dim": 2}


def test_strata_report_and_dot(capsys, tmp_path):
    dot = tmp_path / "graph.dot"
    code, report, _ = run(
        capsys,
        "strata", "--g", "3", "--gbar", "0", "--d", "0",
        "--semistable", "--dot", str(dot),
    )
    assert code == 0
    assert report["params"]["semistable"] is True
    partitions = [s["partition"] for s in report["result"]["strata"]]
    assert partitions == ["", "1,1", "2", "1,1,1,1", "2,1,1", "2,2", "3,1", "4"]
    semi = [s for s in report["result"]["strata"] if s["stability"] != "stable"]
    assert all(s["sum"] == 4 for s in semi)
    assert report["result"]["graph"] == {
        "nodes": 4,
        "edges": 4,
        "connected": True,
        "boundary": {"gr": "(-2,-2)", "vb": True},
    }
    text = dot.read_text()
    assert text.startswith("digraph strata {\n")
    assert '"(2)" -> "boundary" [label="raise"];' in text


def test_json_file_output(capsys, tmp_path):
    out = tmp_path / "report.json"
    code, report, _ = run(
        capsys,
        "components", "--g", "4", "--gbar", "0", "--d", "0", "--json", str(out),
    )
    assert code == 0
    assert report is None  # nothing on stdout when writing to a file
    on_disk = json.loads(out.read_text())
    assert on_disk["command"] == "components"
    assert on_disk["result"]["count"] == 3


def test_output_is_deterministic_modulo_ms(capsys):
    argv = ["strata", "--g", "5", "--gbar", "1", "--d", "1", "--semistable"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    first["ms"] = second["ms"] = 0
    assert first == second


def test_verify_ext_and_endo(capsys):
    code, report, _ = run(capsys, "verify", "ext", "--n", "3")
    assert code == 0
    assert report["command"] == "verify ext"
    assert report["params"] == {"n": 3, "prime": 101, "trunc": 16}
    assert report["result"] == {"dim": 6}
    assert report["checks"] == [
        {"name": "ext1-dim", "pass": True, "detail": "got 6, want 6"}
    ]
    code, report, _ = run(capsys, "verify", "endo", "--n", "4", "--prime", "7")
    assert code == 0
    assert report["result"] == {"dim": 4}
    assert report["checks"][0]["name"] == "endo-quotient-dim"


def test_verify_ext_truncation_too_small(capsys):
    code, _, err = run(capsys, "verify", "ext", "--n", "3", "--trunc", "4")
    assert code == 1
    assert "error:" in err and "16" in err


def test_verify_deformations(capsys):
    code, report, _ = run(
        capsys, "verify", "deform1", "--b", "2", "--prime", "101", "--t", "7"
    )
    assert code == 0
    assert report["result"] == {"ok": True}
    assert len(report["checks"]) == 6
    code, _, err = run(capsys, "verify", "deform2", "--b", "3")
    assert code == 1
    assert "--t is required" in err
    code, _, err = run(
        capsys, "verify", "deform1", "--b", "2", "--prime", "101", "--t", "101"
    )
    assert code == 1
    assert "unit" in err


def test_failed_check_exits_2(capsys, monkeypatch):
    bad = VerifyReport(
        "deform1", {"b0": 2, "p": 101, "t": 7}, (Check("forced", False, "boom"),)
    )
    monkeypatch.setattr(cli, "verify_deformation_I", lambda *a: bad)
    code, report, _ = run(
        capsys, "verify", "deform1", "--b", "2", "--prime", "101", "--t", "7"
    )
    assert code == 2
    assert report["result"] == {"ok": False}


def test_not_stabilized_exits_2(capsys, monkeypatch):
    def explode(*a):
        raise NotStabilized("model did not settle")

    monkeypatch.setattr(cli, "ext1_dim", explode)
    code, _, err = run(capsys, "verify", "ext", "--n", "1")
    assert code == 2
    assert "verification failure" in err


def test_verify_sweep(capsys, tmp_path):
    out = tmp_path / "sweep.json"
    code, report, _ = run(capsys, "verify", "sweep", "--json", str(out))
    assert code == 0
    on_disk = json.loads(out.read_text())
    assert on_disk["command"] == "verify sweep"
    assert on_disk["result"] == {"ok": True}
    assert [c["name"] for c in on_disk["checks"]] == [
        "component-counts",
        "stratum-dims",
        "connectivity",
        "boundary-dichotomy",
        "ext-endo-dims",
        "deformation-collision",
        "deformation-absorption",
        "index-twist-invariance",
        "tangent-smoothness",
        "slope-coherence",
    ]
    assert all(c["pass"] for c in on_disk["checks"])
