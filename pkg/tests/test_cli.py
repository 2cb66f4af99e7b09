import json
import subprocess
import sys

import pytest

from cuplength.cli import main
from cuplength.stability import z3_characterization


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_plain(capsys):
    code, out, _ = run(capsys, "compute", "--k", "3", "--n", "5")
    assert code == 0
    assert out == "n=5 k=3 zcl=14 g=1 h=4 witness=nu-term sharp=false\n"


def test_compute_sharp_case(capsys):
    code, out, _ = run(capsys, "compute", "--k", "7", "--n", "6")
    assert code == 0
    assert "zcl=42" in out and "sharp=true" in out


def test_compute_zero(capsys):
    code, out, _ = run(capsys, "compute", "--k", "2", "--n", "0")
    assert code == 0
    assert "zcl=0" in out


def test_compute_json_and_csv(capsys):
    code, out, _ = run(capsys, "compute", "--k", "8", "--n", "7", "--format", "json")
    assert code == 0
    assert json.loads(out) == {
        "n": 7, "k": 8, "zcl": 49, "g": 7, "h": 0,
        "witness": "nu-term", "sharp": False,
    }
    code, out, _ = run(capsys, "compute", "--k", "8", "--n", "7", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,k,zcl,g,h,witness,sharp", "7,8,49,7,0,nu-term,false"]


def test_compute_rejects_bad_k(capsys):
    code, _, err = run(capsys, "compute", "--k", "1", "--n", "5")
    assert code == 2
    assert "k must be >= 2" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--k", "3"])  # missing --n
    assert exc.value.code == 2


def test_table1(capsys):
    code, out, _ = run(capsys, "table1")
    assert code == 0
    assert "119 cells, 0 mismatches" in out


def test_table2(capsys):
    code, out, _ = run(capsys, "table2")
    assert code == 0
    assert "0 mismatches" in out
    assert "conventions ok" in out


def test_example102(capsys):
    code, out, _ = run(capsys, "example102")
    assert code == 0
    assert "branch agreement at k=5 and k=7: ok" in out
    assert "MISMATCH" not in out


def test_verify_formulas(capsys):
    code, out, _ = run(capsys, "verify", "--level", "formulas",
                       "--n-max", "256", "--k-max", "8")
    assert code == 0
    assert "formula-equivalences" in out and "FAIL" not in out


def test_verify_oracles_with_skips(capsys):
    code, out, _ = run(capsys, "verify", "--level", "oracles",
                       "--n-max", "70", "--k-max", "4")
    assert code == 0  # range skips are reported, not failures
    assert "range-skipped" in out


def test_verify_tiny(capsys):
    code, out, _ = run(capsys, "verify", "--level", "tiny",
                       "--n-max", "4", "--k-max", "3")
    assert code == 0


def test_scan(capsys):
    code, out, _ = run(capsys, "scan", "--n-max", "50")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,s,threshold,lprop,interesting"
    rows = {int(line.split(",")[0]): line for line in lines[1:]}
    assert rows[50].startswith("50,5,")
    assert rows[12].split(",")[2] == "5"
    assert rows[7] == "7,2,,,0"  # odd n: no threshold
    # determinism: identical invocation, identical bytes
    code2, out2, _ = run(capsys, "scan", "--n-max", "50")
    assert (code2, out2) == (code, out)


def _write_bfile(path, first_index, count, corrupt_at=None):
    lines = ["# synthetic A-file"]
    for i in range(first_index, first_index + count):
        v = z3_characterization(i - first_index) + 1
        if corrupt_at == i:
            v += 2
        lines.append(f"{i} {v}")
    path.write_text("\n".join(lines) + "\n")


def test_oeis_clean(tmp_path, capsys):
    bf = tmp_path / "b.txt"
    _write_bfile(bf, 1, 50)
    code, out, _ = run(capsys, "oeis", "--file", str(bf))
    assert code == 0
    assert "detected offset 1" in out
    assert "50 of 50 entries match" in out


def test_oeis_offset_override(tmp_path, capsys):
    bf = tmp_path / "b.txt"
    _write_bfile(bf, 3, 20)
    code, out, _ = run(capsys, "oeis", "--file", str(bf), "--offset", "3")
    assert code == 0
    assert "using supplied offset 3" in out


def test_oeis_value_mismatch(tmp_path, capsys):
    bf = tmp_path / "b.txt"
    _write_bfile(bf, 0, 40, corrupt_at=25)
    code, out, _ = run(capsys, "oeis", "--file", str(bf))
    assert code == 1
    assert "first mismatch at index 25" in out


def test_oeis_alignment_failure(tmp_path, capsys):
    bf = tmp_path / "b.txt"
    bf.write_text("0 2\n1 2\n2 2\n")
    code, out, _ = run(capsys, "oeis", "--file", str(bf))
    assert code == 1
    assert "alignment failure" in out


def test_oeis_parse_error(tmp_path, capsys):
    bf = tmp_path / "b.txt"
    bf.write_text("0 1\nabc\n")
    code, _, err = run(capsys, "oeis", "--file", str(bf))
    assert code == 2
    assert "line 2" in err


def test_oeis_missing_file(capsys):
    code, _, err = run(capsys, "oeis", "--file", "/no/such/file")
    assert code == 2
    assert "cannot read" in err


def test_installed_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cuplength.cli", "compute", "--k", "3", "--n", "5"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert "zcl=14" in proc.stdout
