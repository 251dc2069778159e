"""Command line interface: report content, determinism, exit codes."""

import json
import subprocess
import sys

import pytest

from liechar import catalog
from liechar.cli import run
from liechar.fileformat import serialize_algebra


def invoke(capsys, *argv: str) -> tuple[int, str, str]:
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_sl2_report(capsys) -> None:
    code, out, err = invoke(capsys, "analyze", "catalog:sl2")
    assert code == 0
    assert err == ""
    report = json.loads(out)
    assert report["name"] == "sl2"
    assert report["dim"] == 3
    assert report["jacobi_ok"] is True
    assert report["solvable"] is False
    assert report["nilpotent"] is False
    assert report["semisimple"] is True
    assert report["unimodular"] is True
    assert report["killing_signature"] == [2, 1, 0]
    assert report["betti"] == [1, 0, 0, 1]
    assert report["classes"] == {"1": "zero form", "3": "nonzero class"}
    assert report["timing"]["seconds"] >= 0


def test_analyze_five_dimensional_product(capsys) -> None:
    code, out, _ = invoke(capsys, "analyze", "catalog:sl2_plus_abelian2")
    assert code == 0
    report = json.loads(out)
    assert report["betti"] == [1, 2, 1, 1, 2, 1]
    assert report["classes"] == {
        "1": "zero form",
        "3": "nonzero class",
        "5": "zero form",
    }
    assert report["unimodular"] is True
    assert report["semisimple"] is False


def test_analyze_output_is_deterministic(capsys) -> None:
    _, first, _ = invoke(capsys, "analyze", "catalog:heisenberg3")
    _, second, _ = invoke(capsys, "analyze", "catalog:heisenberg3")
    assert first == second


def test_analyze_file_source_matches_catalog(capsys, tmp_path) -> None:
    alg = catalog.get("heisenberg3", kind="algebra").payload
    path = tmp_path / "heis.lie"
    path.write_text(serialize_algebra(alg))
    _, from_file, _ = invoke(capsys, "analyze", str(path))
    _, from_catalog, _ = invoke(capsys, "analyze", "catalog:heisenberg3")
    a = json.loads(from_file)
    b = json.loads(from_catalog)
    a.pop("name")
    b.pop("name")
    assert a == b


def test_analyze_jacobi_failure_exits_one(capsys, tmp_path) -> None:
    path = tmp_path / "broken.lie"
    path.write_text("dim 3\n1 2 1 1\n1 3 2 1\n")
    code, out, _ = invoke(capsys, "analyze", str(path))
    assert code == 1
    report = json.loads(out)
    assert report["jacobi_ok"] is False
    assert [1, 2, 3, 2] in report["jacobi_violations"]


def test_analyze_parse_error_exits_two(capsys, tmp_path) -> None:
    path = tmp_path / "bad.lie"
    path.write_text("dim 2\n1 2 2 x\n")
    code, out, err = invoke(capsys, "analyze", str(path))
    assert code == 2
    assert out == ""
    assert "line 2" in err


def test_analyze_unknown_catalog_name_exits_two(capsys) -> None:
    code, _, err = invoke(capsys, "analyze", "catalog:nope")
    assert code == 2
    assert "nope" in err


def test_analyze_missing_file_exits_two(capsys, tmp_path) -> None:
    code, _, err = invoke(capsys, "analyze", str(tmp_path / "absent.lie"))
    assert code == 2
    assert err != ""


def test_text_format(capsys) -> None:
    code, out, _ = invoke(capsys, "analyze", "catalog:so3", "--format", "text")
    assert code == 0
    assert "betti: 1 0 0 1" in out
    assert "semisimple: True" in out


def test_forms_components(capsys) -> None:
    code, out, _ = invoke(capsys, "forms", "catalog:sl2", "--degree", "3")
    assert code == 0
    report = json.loads(out)
    assert report["components"] == {"1,2,3": "-8"}

    code, out, _ = invoke(capsys, "forms", "catalog:heisenberg3", "--degree", "3")
    assert code == 0
    assert json.loads(out)["components"] == {"1,2,3": "0"}


def test_forms_fractional_component(capsys, tmp_path) -> None:
    path = tmp_path / "half.lie"
    path.write_text("dim 2\n1 2 2 1/2\n")
    code, out, _ = invoke(capsys, "forms", str(path), "--degree", "1")
    assert code == 0
    assert json.loads(out)["components"] == {"1": "1/2", "2": "0"}


def test_forms_degree_out_of_range_exits_two(capsys) -> None:
    code, _, err = invoke(capsys, "forms", "catalog:sl2", "--degree", "4")
    assert code == 2
    assert err != ""


def test_cohomology_report(capsys) -> None:
    code, out, _ = invoke(capsys, "cohomology", "catalog:affine1", "--degree", "1")
    assert code == 0
    report = json.loads(out)
    assert report == {
        "betti": 1,
        "degree": 1,
        "dim": 2,
        "name": "affine1",
        "w_closed": True,
        "w_primitive": None,
        "w_status": "nonzero class",
    }


def test_cohomology_zero_form_status(capsys) -> None:
    code, out, _ = invoke(capsys, "cohomology", "catalog:heisenberg3", "--degree", "1")
    assert code == 0
    report = json.loads(out)
    assert report["betti"] == 2
    assert report["w_status"] == "zero form"


def test_curvature_report(capsys) -> None:
    code, out, _ = invoke(
        capsys, "curvature", "--frame", "unipotent_sin", "--lattice", "3"
    )
    assert code == 0
    report = json.loads(out)
    norms = report["max_norms"]
    assert norms["r1_max"] == 0.0
    assert norms["r2_max"] == pytest.approx(0.93131, abs=1e-3)
    assert norms["dw_tr_r2_residual"] == 0.0
    assert norms["r_full_diagonal_max"] == 0.0
    assert norms["torsion_max"] == norms["w_max"]
    assert report["lattice_points"] == 9
    # residuals at the noise floor have no meaningful convergence ratio
    assert report["halved_h_ratios"]["r1_max"] is None


def test_curvature_convergence_ratio_on_borel(capsys) -> None:
    code, out, _ = invoke(
        capsys, "curvature", "--frame", "borel_frame", "--lattice", "3"
    )
    assert code == 0
    report = json.loads(out)
    ratio = report["halved_h_ratios"]["r1_max"]
    assert ratio is not None
    assert ratio >= 3.0


def test_curvature_unknown_frame_exits_two(capsys) -> None:
    code, _, err = invoke(capsys, "curvature", "--frame", "nope")
    assert code == 2
    assert err != ""


def test_curvature_output_is_deterministic(capsys) -> None:
    _, first, _ = invoke(capsys, "curvature", "--frame", "affine_halfplane", "--lattice", "3")
    _, second, _ = invoke(capsys, "curvature", "--frame", "affine_halfplane", "--lattice", "3")
    assert first == second


def test_catalog_list(capsys) -> None:
    code, out, _ = invoke(capsys, "catalog", "list")
    assert code == 0
    lines = out.strip().splitlines()
    assert any(line.split() == ["algebra", "sl2"] for line in lines)
    assert any(line.split() == ["frame", "borel_frame"] for line in lines)


def test_catalog_show(capsys) -> None:
    code, out, _ = invoke(capsys, "catalog", "show", "borel_frame")
    assert code == 0
    report = json.loads(out)
    assert report["kind"] == "frame"
    assert report["chart"]["lower"] == [0.5, -1.0]

    code, out, _ = invoke(capsys, "catalog", "show", "sl2")
    assert code == 0
    assert "definition" in json.loads(out)


def test_catalog_show_unknown_exits_two(capsys) -> None:
    code, _, err = invoke(capsys, "catalog", "show", "nope")
    assert code == 2
    assert err != ""


def test_verify_single_suite(capsys) -> None:
    code, out, _ = invoke(capsys, "verify", "--suite", "algebra")
    assert code == 0
    assert "PASS algebra.jacobi_all_catalog" in out
    assert out.strip().endswith("passed, 0 failed")


def test_verify_rejects_unknown_suite(capsys) -> None:
    code, _, _ = invoke(capsys, "verify", "--suite", "nosuch")
    assert code == 2


def test_missing_required_argument_exits_two(capsys) -> None:
    code, _, _ = invoke(capsys, "curvature")
    assert code == 2


def test_no_arguments_shows_usage(capsys) -> None:
    code, _, err = invoke(capsys)
    assert code == 2
    assert "usage" in err.lower() or err == ""


def test_module_entry_point_smoke() -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "liechar.cli", "analyze", "catalog:abelian(2)"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [1, 2, 1]
