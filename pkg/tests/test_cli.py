import io
import json
import subprocess
import sys

import pytest

from dgakit.cli import run_command
from dgakit.dsl import load_algebra
from dgakit.cdga import catalog

OMEGA = "2*x1*x6+x2*x5-x3*x4"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run_command(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_cohomology_g6():
    code, out, _ = run("cohomology", "g6_15_m1", "--max-degree", "6")
    assert code == 0
    report = json.loads(out)
    assert ",".join(map(str, report["betti"])) == "1,1,2,4,2,1,1"
    assert report["representatives"]["1"] == ["x6"]
    assert report["engine_version"] and report["ordering"]


def test_massey_g6():
    code, out, _ = run("massey", "g6_15_m1", "x6", "x6", OMEGA)
    assert code == 0
    m = json.loads(out)["massey"]
    assert m["representative_class"] == "x4*x5*x6"
    assert m["indeterminacy_dimension"] == 1
    assert m["indeterminacy_basis"] == ["x2*x5*x6"]
    assert m["vanishes"] is False
    assert m["primitives"] == ["0", "x4*x5"]


def test_scan_abelian_empty():
    code, out, _ = run("scan", "abelian3", "--degrees", "1,1,1", "--max-degree", "3")
    assert code == 0
    assert json.loads(out)["findings"] == []


def test_scan_g6_finds_product():
    code, out, _ = run("scan", "g6_15_m1", "--degrees", "1,1,2")
    assert code == 0
    assert len(json.loads(out)["findings"]) >= 1


@pytest.mark.parametrize("argv", [
    ("cohomology", "g6_15_m1", "--max-degree", "6"),
    ("massey", "g6_15_m1", "x6", "x6", OMEGA),
    ("gysin", "g6_15_m1", "--omega", OMEGA),
    ("tensor", "g6_15_m1", "s2_model", "--max-degree", "4"),
])
def test_byte_identical_reruns(argv):
    first, second = run(*argv), run(*argv)
    assert first == second
    assert first[0] == 0


def test_not_a_cocycle_exits_1():
    code, out, err = run("massey", "g6_15_m1", "x6", "x6", "x1*x6+x2*x5")
    assert code == 1 and not out and err


def test_undefined_massey_exits_1():
    code, _, err = run("massey", "g6_15_m1", "x6", "x1*x6+x2*x5", "x6")
    assert code == 1


def test_parse_error_exits_2():
    code, _, err = run("massey", "g6_15_m1", "x6", "x6", "x7")
    assert code == 2
    assert "1:1" in err


def test_unknown_algebra_exits_2():
    assert run("cohomology", "no_such_algebra")[0] == 2


def test_invalid_file_exits_1(tmp_path):
    path = tmp_path / "bad.dga"
    path.write_text("generators: a:1, b:2\nd a = b\nd b = a*b\n")
    code, _, err = run("cohomology", str(path), "--max-degree", "3")
    assert code == 1
    assert "invalid" in err


def test_broken_file_exits_2(tmp_path):
    path = tmp_path / "broken.dga"
    path.write_text("algebra broken {\n generators: x:1\n d x = (x\n}\n")
    code, _, err = run("cohomology", str(path))
    assert code == 2
    assert "4:1" in err


def test_gysin_inconsistency_exits_3(monkeypatch):
    import dgakit.constructions as mod
    monkeypatch.setattr(mod, "cup_map_rank", lambda *a: 0)
    code, out, _ = run("gysin", "g6_15_m1", "--omega", OMEGA)
    assert code == 3
    assert json.loads(out)["gysin"]["consistent"] is False


def test_gysin_report_keys():
    code, out, _ = run("gysin", "abelian2", "--omega", "x1*x2")
    g = json.loads(out)["gysin"]
    assert code == 0
    assert g["extension_betti"] == [1, 2, 2, 1]
    assert g["consistent"] is True
    assert set(g) >= {"cup_ranks", "extension_betti", "consistent"}


def test_tensor_report():
    code, out, _ = run("tensor", "heisenberg3", "circle", "--max-degree", "4")
    r = json.loads(out)
    assert code == 0
    assert r["kunneth_agrees"] and r["betti"] == [1, 3, 4, 3, 1]


def test_catalog_round_trip():
    code, out, _ = run("catalog", "g6_15_m1")
    assert code == 0
    C = load_algebra(out)
    assert C.differential == catalog("g6_15_m1").differential


def test_file_argument(tmp_path):
    _, src, _ = run("catalog", "heisenberg3")
    path = tmp_path / "h.dga"
    path.write_text(src)
    code, out, _ = run("cohomology", str(path))
    assert code == 0 and json.loads(out)["betti"] == [1, 2, 2, 1]


def test_text_mode_and_flag_position():
    code, out, _ = run("--text", "cohomology", "g6_15_m1")
    assert code == 0
    assert "betti: 1, 1, 2, 4, 2, 1, 1" in out
    assert run("cohomology", "g6_15_m1", "--text") == (code, out, "")


def test_validate_only():
    code, out, _ = run("--validate-only", "massey", "g6_15_m1", "x6", "x6", "x7")
    assert code == 0
    assert json.loads(out)["valid"] is True


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dgakit", "cohomology", "heisenberg3"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["betti"] == [1, 2, 2, 1]
