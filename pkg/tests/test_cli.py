import json

import pytest

from fgmod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_check_examples(capsys):
    code, out, _ = run(capsys, "check", "reduced-wrt", "--ring", "Z", "--ideal", "2", "Z/2", "Z/4")
    assert code == 0 and out == "true"
    code, out, _ = run(capsys, "check", "coreduced", "--ring", "Z", "--ideal", "2", "Z/4")
    assert code == 0 and out == "false"
    code, out, _ = run(capsys, "check", "coreduced-wrt", "--ring", "Z", "--ideal", "2", "Z/2", "Z/4")
    assert code == 0 and out == "true"
    code, out, _ = run(capsys, "check", "reduced", "--ring", "Z", "--ideal", "2", "Z/4")
    assert code == 0 and out == "false"


def test_nonstabilizing_exit_code(capsys):
    code, _, err = run(capsys, "lambda", "--ring", "Z", "--ideal", "2", "Z")
    assert code == 3
    assert "stabilize" in err


def test_canon_and_roundtrip(capsys):
    code, out, _ = run(capsys, "canon", "coker[[2,4],[6,8]]")
    assert code == 0 and out == "Z/2 + Z/4"
    # the printed form re-parses to an isomorphic module
    code, again, _ = run(capsys, "canon", out)
    assert code == 0 and again == out
    code, zero, _ = run(capsys, "canon", "Z/1")
    assert code == 0 and zero == "0"
    code, z0, _ = run(capsys, "canon", "0")
    assert code == 0 and z0 == "0"
    code, out, _ = run(capsys, "canon", "Z/2^2 + Z^2")
    assert code == 0 and out == "Z^2 + Z/2 + Z/2"


def test_functor_commands(capsys):
    assert run(capsys, "hom", "Z/2", "Z/4")[1] == "Z/2"
    assert run(capsys, "tensor", "Z/2", "Z/3")[1] == "0"
    assert run(capsys, "dual", "Z/4")[1] == "Z/4"
    assert run(capsys, "ext", "1", "Z/2", "Z/2")[1] == "Z/2"
    assert run(capsys, "tor", "1", "Z/2", "Z/4")[1] == "Z/2"
    assert run(capsys, "gammagen", "--ideal", "2", "Z/2", "Z/4")[1] == "Z/2"
    assert run(capsys, "lambdagen", "--ideal", "2", "Z/2", "Z/4")[1] == "Z/2"
    assert run(capsys, "glc", "1", "--ideal", "2", "Z/2", "Z/4")[1] == "Z/2"
    assert run(capsys, "glh", "1", "--ideal", "2", "Z/2", "Z/2")[1] == "Z/2"


def test_gamma_reports_exponent(capsys):
    code, out, _ = run(capsys, "gamma", "--ideal", "2", "Z/4")
    assert code == 0 and out == "Z/4\tk=2"
    code, out, _ = run(capsys, "gamma", "--ideal", "2", "Z/4", "--format", "json-lines")
    rec = json.loads(out)
    assert rec == {"result": "Z/4", "exponent": 2}


def test_modular_ring_commands(capsys):
    code, out, _ = run(capsys, "dual", "--ring", "Z/6", "Z/2 + Z/6")
    assert code == 0 and out == "Z/2 + Z/6"
    code, out, _ = run(capsys, "canon", "--ring", "Z/6", "coker[[4]]")
    assert code == 0 and out == "Z/2"


def test_usage_errors(capsys):
    code, _, err = run(capsys, "canon", "Q/Z")
    assert code == 2 and "atom" in err
    code, _, err = run(capsys, "gamma", "Z/4")  # missing --ideal
    assert code == 2
    code, _, err = run(capsys, "canon", "--ring", "Z/6", "Z")  # Z illegal over Z/n
    assert code == 2
    code, _, err = run(capsys, "check", "reduced", "--ideal", "2", "Z/2", "Z/4")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_verify_list_claims(capsys):
    code, out, _ = run(capsys, "verify", "--list-claims")
    assert code == 0
    assert "equiv-reduced-wrt" in out.splitlines()


def test_verify_with_grid_file(tmp_path, capsys):
    grid = {
        "ring": "Z",
        "max_torsion_order": 4,
        "max_free_rank": 1,
        "ideal_generators": [0, 2],
        "label": "file-grid",
    }
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    code, out, _ = run(
        capsys,
        "verify",
        "--grid",
        str(path),
        "--claims",
        "equiv-reduced-wrt,extension-closure-R",
        "--format",
        "json-lines",
    )
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert records[-1]["summary"]["all_expected"] is True
    claims = {r.get("claim"): r for r in records if "claim" in r}
    assert claims["equiv-reduced-wrt"]["verdict"] == "pass"
    assert claims["extension-closure-R"]["verdict"] == "fail"
    assert claims["extension-closure-R"]["expected"] == "fail"


def test_verify_text_format(tmp_path, capsys):
    grid = {"ring": "Z/6", "max_torsion_order": 6, "ideal_generators": [2], "label": "g6"}
    path = tmp_path / "grid.json"
    path.write_text(json.dumps(grid))
    code, out, _ = run(capsys, "verify", "--grid", str(path), "--claims", "gamma-dual")
    assert code == 0
    assert any(line.startswith("PASS") and "gamma-dual" in line for line in out.splitlines())
    assert out.splitlines()[-1].startswith("summary:")
