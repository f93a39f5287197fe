import io
from pathlib import Path

import pytest

from acbmetric.cli import PREDICATES, main

DATA = Path(__file__).parent / "data"
S5 = str(DATA / "sasaki5_half_m3.acb")


def run(*argv):
    out = io.StringIO()
    return main(list(argv), out=out), out.getvalue()


def test_example_emit_matches_golden():
    rc, out = run("example", "sasaki5", "--p", "1/2", "--q", "-3")
    assert rc == 0 and out == (DATA / "sasaki5_half_m3.acb").read_text()


def test_analyze_machine_golden():
    rc, out = run("analyze", S5, "--potential", "1", "--potential", "2", "--potential", "-1",
                  "--potential", "3/2", "--format", "machine")
    assert rc == 0
    assert out == (DATA / "sasaki5_half_m3.machine").read_text()
    assert "summary.checks_failed = 0" in out


def test_analyze_text_golden():
    rc, out = run("analyze", S5)
    assert rc == 0 and out == (DATA / "sasaki5_half_m3.text").read_text()


def test_analyze_is_deterministic():
    first = run("analyze", S5, "--format", "machine")
    assert all(run("analyze", S5, "--format", "machine") == first for _ in range(2))


def test_example_analyze_same_as_file():
    a = run("example", "sasaki5", "--p", "1/2", "--q", "-3", "--analyze", "--format", "machine")
    b = run("analyze", S5, "--format", "machine")
    assert a == b


def test_abelian_golden():
    rc, out = run("analyze", str(DATA / "abelian3.acb"), "--format", "machine")
    assert rc == 0 and out == (DATA / "abelian3.machine").read_text()


def test_invalid_structure_is_skipped():
    rc, out = run("analyze", str(DATA / "corrupted_phi.acb"), "--format", "machine")
    assert rc == 1 and out == (DATA / "corrupted_phi.machine").read_text()
    assert "check.structure.valid = FAIL" in out
    assert run("validate", str(DATA / "corrupted_phi.acb"))[0] == 1


def test_validate_ok():
    rc, out = run("validate", S5)
    assert rc == 0 and out


@pytest.mark.parametrize("name, expect", [
    ("codazzi", 1),
    ("locally_symmetric", 1),
    ("eta_parallel", 0),
    ("phi_symmetry_local", 0),
    ("phi_symmetry_global", 1),
])
def test_check_exit_codes(name, expect):
    assert name in PREDICATES
    assert run("check", name, S5)[0] == expect


def test_every_predicate_runs():
    for name in PREDICATES:
        rc, out = run("check", name, S5)
        assert rc in (0, 1) and out


def test_usage_errors(tmp_path, capsys):
    assert run("example", "sasaki5", "--p", "1/0")[0] == 2
    assert run("analyze", str(tmp_path / "missing.acb"))[0] == 2
    assert "acbmetric: error:" in capsys.readouterr().err
    bad = tmp_path / "bad.acb"
    bad.write_text((DATA / "sasaki5_half_m3.acb").read_text().replace("DIM 5", "DIM 4"))
    assert run("validate", str(bad))[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("check", "no_such_predicate", S5)[0] == 2


def test_non_vertical_potential_vector_flagged():
    rc, out = run("analyze", S5, "--potential-vector", "0,1,0,0,0", "--format", "machine")
    assert "soliton.vector0.vertical = false" in out
    assert "soliton.vector0.note = non-vertical potential" in out
