import subprocess
import sys

import pytest

from cli_cases import CASES, fx
from liext.cli import run


@pytest.mark.parametrize("argv,code", CASES, ids=[" ".join(a[:2]) + f"->{c}" for a, c in CASES])
def test_exit_codes(argv, code):
    got, text = run(argv)
    assert got == code, text
    if code == 2:
        assert text.startswith("error: ")


def test_repeated_runs_are_identical():
    for argv, _ in CASES:
        assert run(argv) == run(argv)


def test_der_output():
    _, text = run(["der", "perfect5"])
    assert text.splitlines()[:3] == ["dim Der = 6", "dim Inn = 5", "dim Out = 1"]


def test_scan_output():
    _, text = run(["twder", "gl2", "--scan", "0,1,-1,2,3"])
    assert text.splitlines()[-1] == "dims 4,4,4,4,4"
    _, text = run(["twder", "gl2", "--scan", "0,1", "--format", "machine"])
    assert "dim_D[q=1]=4" in text.splitlines()


def test_machine_format_is_key_value():
    for argv, code in CASES:
        if code == 2:
            continue
        _, text = run(argv + ["--format", "machine"])
        for line in text.splitlines():
            key, sep, _ = line.partition("=")
            assert sep and key and " " not in key, line


def test_machine_records():
    _, text = run(["enumerate", "--p", "3", "--g", "abelian:1", "--dimv", "1", "--format", "machine"])
    rec = dict(line.split("=", 1) for line in text.splitlines())
    assert rec["raw_count"] == "81" and rec["orbit_count_equiv"] == "4" and rec["orbit_count_cohom"] == "5"
    _, text = run(["equiv-twder", "gl2", fx("gl2_zero.pair"), fx("gl2_inner.pair"), "--format", "machine"])
    rec = dict(line.split("=", 1) for line in text.splitlines())
    assert rec["equivalent"] == "yes" and rec["g0"] == "0 -3 0 0"


def test_malformed_file_reports_line():
    code, text = run(["check", fx("malformed.lie")])
    assert code == 2 and "line 4:" in text


def test_product_output_parses_back(tmp_path):
    from liext.io import parse_algebra
    from liext.lie import catalog, is_isomorphism
    from liext.field import QQ

    code, text = run(["product", "--kind", "twisted", fx("heisenberg.datum")])
    assert code == 0
    E = parse_algebra(text)
    P = QQ.array([[0, 0, 1], [1, 0, 0], [0, 1, 0]])
    assert is_isomorphism(catalog("heisenberg3"), E, P)
    path = tmp_path / "E.lie"
    path.write_text(text)
    assert run(["check", str(path)])[0] == 0


def test_module_entry_point():
    ok = subprocess.run([sys.executable, "-m", "liext", "catalog", "sl2"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout.startswith("algebra sl2")
    bad = subprocess.run([sys.executable, "-m", "liext", "catalog", "so3"], capture_output=True, text=True)
    assert bad.returncode == 2 and bad.stdout == "" and "so3" in bad.stderr
