import json
import shutil
import subprocess
import sys

from sgpoly.algebra import parse_fraction, parse_polynomial
from sgpoly.catalog import _data_dir
from sgpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_invariants_omega1_text(capsys):
    code, out, _ = run(capsys, "invariants", "omega1")
    assert code == 0
    assert "Y = A^3+2A+2A^-1+A^-3" in out
    assert "J~ = -(A^12+2A^4+2A^-4+A^-12)/phi^3" in out


def test_invariants_json_round_trips(capsys):
    code, out, _ = run(capsys, "invariants", "omega7", "--json")
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == [-2, 0, 0, 2, 0, 0]
    for key in ("yamada", "yamada_normalized", "associated_jones"):
        assert str(parse_polynomial(rec[key])) == rec[key]
    for key in ("jaeger", "jaeger_normalized"):
        assert str(parse_fraction(rec[key])) == rec[key]


def test_output_is_deterministic(capsys):
    first = run(capsys, "invariants", "theta-tilde")[1]
    assert run(capsys, "invariants", "theta-tilde")[1] == first


def test_missing_file_exits_1(capsys):
    code, _, err = run(capsys, "invariants", "missing.json")
    assert code == 1 and "error" in err


def test_cap_exits_2(capsys):
    assert run(capsys, "invariants", "omega7", "--max-crossings", "3")[0] == 2


def test_verify_main_on_omega1(capsys):
    code, out, _ = run(capsys, "verify", "omega1", "--identity", "main")
    assert code == 0
    assert "lhs = -(A^12+2A^4+2A^-4+A^-12)/phi^3" in out


def test_verify_all_on_omega7(capsys):
    assert run(capsys, "verify", "omega7", "--identity", "all")[0] == 0


def test_kind_mismatch_exits_4(capsys):
    code, _, err = run(capsys, "verify", "theta-planar", "--identity", "main")
    assert code == 4 and "theta" in err


def test_table1_passes(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0 and "10/10" in out


def test_table1_flags_a_corrupted_row(capsys, tmp_path):
    for p in _data_dir().iterdir():
        if p.name.startswith("omega"):
            shutil.copy(str(p), tmp_path / p.name)
    # a valid file holding the wrong diagram
    (tmp_path / "omega4.json").write_text((tmp_path / "omega9.json").read_text())
    code, out, _ = run(capsys, "table1", "--data", str(tmp_path))
    assert code == 3
    row = [line for line in out.splitlines() if line.startswith("omega4 ")][0]
    assert "FAIL" in row
    assert "9/10" in out


def test_catalog_list(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and out.splitlines()[0].startswith("omega1 ")


def test_double_and_associated_link(capsys):
    code, out, _ = run(capsys, "double", "theta-tilde")
    assert code == 0 and json.loads(out)["type"] == "link"
    code, out, _ = run(capsys, "associated-link", "omega7")
    data = json.loads(out)
    assert code == 0 and data["writhe"] == 0 and data["half_twists"]["a1"] == -2
    assert run(capsys, "associated-link", "trefoil")[0] == 4


def test_console_entry_point():
    exe = shutil.which("sgpoly")
    cmd = [exe] if exe else [sys.executable, "-m", "sgpoly.cli"]
    r = subprocess.run(cmd + ["invariants", "unknot"], capture_output=True, text=True)
    assert r.returncode == 0 and "unknot" in r.stdout
