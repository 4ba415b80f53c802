import json

import pytest

from orposets.cli import main


def run_cli(argv, capsys):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_writes_a_json_report_to_stdout(capsys):
    code, out, _ = run_cli(["verify", "--suite", "degor", "--genus", "2"], capsys)
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {
        "suite",
        "instances",
        "failures",
        "elapsed_ms",
        "findings",
    }
    assert payload["suite"] == "degor"
    assert payload["failures"] == []
    assert payload["instances"] == 103


def test_verify_out_file(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, stdout, _ = run_cli(
        ["verify", "--suite", "rkSg", "--genus", "2", "--out", str(out)], capsys
    )
    assert code == 0 and stdout == ""
    assert json.loads(out.read_text())["instances"] == 6


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "nope"])
    assert err.value.code == 2


def test_low_genus_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["verify", "--suite", "degor", "--genus", "1"])
    assert err.value.code == 2


def test_export_graphs_writes_seven_files(tmp_path, capsys):
    code, _, _ = run_cli(
        ["export", "graphs", "--genus", "2", "--out", str(tmp_path)], capsys
    )
    assert code == 0
    files = sorted(tmp_path.glob("graph_*.json"))
    assert len(files) == 7
    payload = json.loads(files[6].read_text())
    assert payload["weights"] == [0, 0]
    assert payload["edges"] == [[0, 1], [0, 1], [0, 1]]
    assert payload["genus"] == 2
    assert payload["automorphism_count"] == 12


def test_export_graphs_rejects_dot(capsys):
    with pytest.raises(SystemExit) as err:
        main(["export", "graphs", "--format", "dot"])
    assert err.value.code == 2


def test_export_class_poset_as_dot(capsys):
    code, out, _ = run_cli(
        [
            "export", "poset", "--genus", "2", "--graph", "6",
            "--poset", "OPbar", "--b", "0", "--format", "dot",
        ],
        capsys,
    )
    assert code == 0
    assert out.count("[label=") == 6
    assert out.startswith("digraph poset {")


def test_export_poset_validation(capsys):
    with pytest.raises(SystemExit) as err:
        main(["export", "poset", "--poset", "OPbar", "--b", "0"])
    assert err.value.code == 2  # missing --graph
    with pytest.raises(SystemExit) as err:
        main(["export", "poset", "--poset", "OPbar", "--graph", "6"])
    assert err.value.code == 2  # b left as "both"
    with pytest.raises(SystemExit) as err:
        main(["export", "poset", "--poset", "OPbar", "--graph", "9", "--b", "0"])
    assert err.value.code == 2  # index out of range


def test_export_genus_level_posets(capsys):
    code, out, _ = run_cli(
        ["export", "poset", "--genus", "2", "--poset", "Sg"], capsys
    )
    assert code == 0
    assert len(json.loads(out)["elements"]) == 7
    code, out, _ = run_cli(
        ["export", "poset", "--genus", "2", "--poset", "classes", "--b", "1"],
        capsys,
    )
    assert code == 0
    assert len(json.loads(out)["elements"]) == 16


def test_export_atlas_bundle(tmp_path, capsys):
    code, _, _ = run_cli(
        ["export", "atlas", "--genus", "2", "--b", "1", "--out", str(tmp_path)],
        capsys,
    )
    assert code == 0
    bundle = tmp_path / "atlas_g2_b1"
    summary = json.loads((bundle / "summary.json").read_text())
    assert summary["graph_count"] == 7
    assert summary["arrow_count"] == 69
    assert summary["automorphism_orders"] == [1, 2, 2, 8, 2, 8, 12]
    assert len(list((bundle / "graphs").glob("*.json"))) == 7
    assert (bundle / "posets" / "sg.dot").read_text().startswith("digraph")
    arrows = json.loads((bundle / "contractions.json").read_text())
    assert sum(len(a["contracted_sets"]) for a in arrows) == 69


def test_exports_are_byte_stable(tmp_path, capsys):
    for sub in ("first", "second"):
        code, _, _ = run_cli(
            [
                "export", "atlas", "--genus", "2", "--b", "0",
                "--out", str(tmp_path / sub),
            ],
            capsys,
        )
        assert code == 0
    first = sorted((tmp_path / "first").rglob("*.json")) + sorted(
        (tmp_path / "first").rglob("*.dot")
    )
    for path in first:
        twin = tmp_path / "second" / path.relative_to(tmp_path / "first")
        assert path.read_bytes() == twin.read_bytes()


def test_output_dir_environment_variable(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("ORPOSETS_OUT", str(tmp_path))
    code, _, _ = run_cli(
        ["export", "graphs", "--genus", "2", "--out", "nested/dir"], capsys
    )
    assert code == 0
    assert len(list((tmp_path / "nested" / "dir").glob("graph_*.json"))) == 7
    code, _, _ = run_cli(
        ["verify", "--suite", "rkSg", "--out", "report.json"], capsys
    )
    assert code == 0
    assert (tmp_path / "report.json").exists()
