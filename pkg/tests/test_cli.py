"""CLI contract: exit codes, JSON schemas, determinism."""

import json

import pytest

jsonschema = pytest.importorskip("jsonschema")

from liesymp.cli import (
    CATALOG_REPORT_SCHEMA,
    PROPS_REPORT_SCHEMA,
    SYMPLECTIC_REPORT_SCHEMA,
    main,
)

GOOD = """\
algebra n4_1
basis e1 e2 e3 e4
[e2,e4] = e1
[e3,e4] = e2
torus e5 e6
[e5,e1] = e1
[e5,e3] = -e3
[e5,e4] = e4
[e6,e2] = e2
[e6,e3] = 2*e3
[e6,e4] = -e4
"""

JACOBI_BAD = """\
algebra bad
basis e1 e2 e3
[e1,e2] = e3
[e1,e3] = e1
"""


@pytest.fixture()
def good_file(tmp_path):
    path = tmp_path / "n4_1.lie"
    path.write_text(GOOD, encoding="utf-8")
    return str(path)


def test_check_ok(good_file, capsys):
    assert main(["check", good_file]) == 0
    out = capsys.readouterr().out
    assert "jacobi identity: holds" in out


def test_check_jacobi_violation_exits_2(tmp_path, capsys):
    path = tmp_path / "bad.lie"
    path.write_text(JACOBI_BAD, encoding="utf-8")
    assert main(["check", str(path)]) == 2
    err = capsys.readouterr().err
    assert "jacobi identity fails" in err and "e1" in err


def test_check_parse_error_exits_2(tmp_path, capsys):
    path = tmp_path / "broken.lie"
    path.write_text("algebra x\nbasis e1\n[e1,e2] = e1\n", encoding="utf-8")
    assert main(["check", str(path)]) == 2
    assert "undeclared" in capsys.readouterr().err


def test_missing_file_exits_2(capsys):
    assert main(["check", "/nonexistent/path.lie"]) == 2


def test_props(good_file, capsys):
    assert main(["props", good_file]) == 0
    out = capsys.readouterr().out
    assert "center dimension: 0" in out
    assert "solvable: True" in out


def test_der_complete(good_file, capsys):
    assert main(["der", good_file, "--complete"]) == 0
    out = capsys.readouterr().out
    assert "dim Der = 6" in out and "complete: True" in out


def test_symplectic_human(good_file, capsys):
    assert main(["symplectic", good_file, "--witness"]) == 0
    out = capsys.readouterr().out
    assert "exists = yes" in out
    assert "witness" in out


def test_symplectic_exact_only(good_file, capsys):
    assert main(["symplectic", good_file, "--exact-only"]) == 0
    out = capsys.readouterr().out
    assert "exact (Frobenius)" in out
    assert "dim Z^2" not in out


def test_symplectic_json_schema_and_determinism(good_file, capsys):
    assert main(["symplectic", good_file, "--json"]) == 0
    first = capsys.readouterr().out
    data = json.loads(first)
    jsonschema.validate(data, SYMPLECTIC_REPORT_SCHEMA)
    assert data["verdicts"]["symplectic"]["exists"] == "yes"
    assert data["verdicts"]["complete"] is True
    assert data["verdicts"]["maximal_rank"] is True
    assert main(["symplectic", good_file, "--json"]) == 0
    assert capsys.readouterr().out == first  # byte-for-byte deterministic


def test_catalog_list(capsys):
    assert main(["catalog", "list"]) == 0
    out = capsys.readouterr().out
    assert "n6_22" in out and "abelian" in out


def test_catalog_show_roundtrips(capsys, tmp_path):
    assert main(["catalog", "show", "n4_1"]) == 0
    out = capsys.readouterr().out
    body = "\n".join(line for line in out.splitlines() if not line.startswith("#"))
    path = tmp_path / "shown.lie"
    path.write_text(body + "\n", encoding="utf-8")
    assert main(["symplectic", str(path), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["verdicts"]["symplectic"]["exists"] == "yes"


def test_catalog_show_with_param(capsys):
    assert main(["catalog", "show", "Q", "--set", "n=7"]) == 0
    out = capsys.readouterr().out
    assert "e8" in out  # torus labels for n = 7
    assert main(["catalog", "show", "n6_5", "--set", "a=0"]) == 2


def test_catalog_verify_dim_filter(capsys):
    assert main(["catalog", "verify", "--dim", "4"]) == 0
    out = capsys.readouterr().out
    assert "summary: 1 entries" in out
    assert main(["catalog", "verify", "--dim", "6"]) == 0
    out = capsys.readouterr().out
    assert "summary: 22 entries" in out


def test_catalog_verify_json(capsys):
    assert main(["catalog", "verify", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    jsonschema.validate(data, CATALOG_REPORT_SCHEMA)
    assert data["green"] is True
    assert data["summary"]["mismatch"] == 0


def test_catalog_verify_exit_code_follows_greenness(monkeypatch, capsys):
    import dataclasses

    import liesymp.cli as cli
    from liesymp.regression import run_regression

    real = run_regression([("n4_1", {})])
    entry = real.entries[0]
    broken_entry = dataclasses.replace(
        entry,
        comparisons=tuple(
            dataclasses.replace(c, status="mismatch") for c in entry.comparisons[:1]
        )
        + entry.comparisons[1:],
    )
    broken = dataclasses.replace(real, entries=(broken_entry,))
    monkeypatch.setattr(cli, "run_regression", lambda selection=None, bound=None: broken)
    assert main(["catalog", "verify"]) == 1
    assert "MISMATCH" in capsys.readouterr().out


def test_repro_props(capsys):
    assert main(["repro-props"]) == 0
    out = capsys.readouterr().out
    assert "reproduction: green" in out


def test_repro_props_json(capsys):
    assert main(["repro-props", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    jsonschema.validate(data, PROPS_REPORT_SCHEMA)
    assert data["green"] is True
