import json
import subprocess
import sys

import pytest

from eternalbar.cli import main
from eternalbar.selftest import fixture_text


@pytest.fixture
def data(tmp_path):
    for name in ("fig1.json", "spectral_example.json", "complex_example.json", "ideal_violation.json",
                 "odd_euler.json", "shift_violation.json", "diamond.json"):
        (tmp_path / name).write_text(fixture_text(name))
    return tmp_path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_torus_example(capsys):
    assert run(capsys, "torus", "--ham", "linear:1", "--classes", "0", "--gamma") == (0, "c=1 gamma=2\n", "")


def test_torus_table(capsys, data):
    code, out, _ = run(capsys, "torus", "--ham", f"pl:{data / 'diamond.json'}", "--classes", "0,0;1,1", "--spectrum")
    assert code == 0
    lines = out.splitlines()
    assert lines[0].startswith("k=0,0 c=sqrt(5) spectrum=")
    assert lines[1].startswith("k=1,1 c=sqrt(13)")


def test_torus_json_and_decimal(capsys):
    code, out, _ = run(capsys, "torus", "--ham", "linear:1,1", "--classes", "0,0", "--json", "--decimal", "3")
    assert code == 0 and json.loads(out) == [{"k": [0, 0], "c": "1.414"}]


def test_torus_bad_class(capsys):
    code, _, err = run(capsys, "torus", "--ham", "linear:1,1", "--classes", "1")
    assert code == 2 and "does not match dimension" in err


def test_spectral_example(capsys, data):
    assert run(capsys, "spectral", data / "spectral_example.json", "--class", "0")[:2] == (0, "c=2 eternal=false\n")
    code, out, _ = run(capsys, "spectral", data / "fig1.json", "--class", "0,1,2")
    assert out == "c=-inf eternal=true\n"


def test_barcode_figure(capsys, data):
    code, out, _ = run(capsys, "barcode", data / "fig1.json")
    doc = json.loads(out)
    assert code == 0
    assert sum(b == {"birth": "-inf", "death": "inf"} for b in doc["bars"]) == 3
    assert len(doc["bars"]) == 5 and len(doc["eternal"]) == 3
    code, out, _ = run(capsys, "barcode", data / "fig1.json", "--render")
    assert out.splitlines()[-1] == "bars=5 full=3 half=0 finite=2 eternal_dim=3 rfh_rank=0"


def test_complex_min_filtration(capsys, data):
    code, out, _ = run(capsys, "complex", data / "complex_example.json", "--min-filtration", "x1:0")
    assert (code, out) == (0, "level=-1 representative=x2:1\n")
    code, out, _ = run(capsys, "complex", data / "complex_example.json", "--min-filtration", "x1:0,x2:1")
    assert out == "level=-inf zero_class=true\n"
    code, _, err = run(capsys, "complex", data / "complex_example.json", "--min-filtration", "y:0")
    assert code == 2 and "not a cycle" in err


def test_algebra_verify(capsys, data):
    code, out, _ = run(capsys, "algebra-verify", data / "ideal_violation.json")
    assert code == 1 and "ideal: FAIL" in out and "('id', 'id', 1, 2)" in out
    code, out, _ = run(capsys, "verify", data / "odd_euler.json")
    assert code == 0 and "eternal=true" in out
    code, _, err = run(capsys, "algebra-verify", data / "shift_violation.json")
    assert code == 2 and "born at 3" in err


def test_malformed_json_is_line_anchored(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{\n  "bars": [\n    {"birth": 0,,}\n  ]\n}\n')
    code, _, err = run(capsys, "barcode", bad)
    assert code == 2 and f"{bad}:3:" in err


def test_structural_error_names_field(capsys, tmp_path):
    bad = tmp_path / "p.json"
    bad.write_text(json.dumps({"generators": [{"id": "a", "birth": "2"}],
                               "relations": [{"level": "1", "support": ["a"]}]}))
    code, _, err = run(capsys, "barcode", bad)
    assert code == 2 and "relations[0].level" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "barcode", tmp_path / "nope.json")
    assert code == 2 and "cannot read" in err


def test_output_is_deterministic(data):
    cmd = [sys.executable, "-m", "eternalbar", "barcode", str(data / "fig1.json")]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second


def test_bad_flags_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["torus", "--ham"])
    assert info.value.code == 2
