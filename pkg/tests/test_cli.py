import json

import pytest

from uqsl2.cli import main


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_verify_single_suite_text(capsys):
    code, out, _err = run(capsys, ["verify", "--p", "2", "--suite", "casimir"])
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out


def test_verify_all_p2(capsys):
    code, out, _err = run(
        capsys, ["verify", "--p", "2", "--suite", "all", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["failed"] == 0
    names = [c["name"] for c in payload["checks"]]
    # dependency order: arithmetic sanity first, trig last
    assert names[0].startswith("arith:")
    assert names[-1].startswith("trig:")


def test_verify_suite_list_and_repeat(capsys):
    code, out, _err = run(
        capsys,
        [
            "verify", "--p", "2",
            "--suite", "casimir,integrals",
            "--suite", "hopf",
            "--format", "json",
        ],
    )
    assert code == 0
    payload = json.loads(out)
    suites = {c["name"].split(":")[0] for c in payload["checks"]}
    assert suites == {"hopf", "integrals", "dual_integrals", "balancing",
                      "radford", "dual_integral_spaces", "casimir"}


def test_verify_slf_json_reports_dimension(capsys):
    code, out, _err = run(
        capsys, ["verify", "--p", "3", "--suite", "slf", "--format", "json"]
    )
    assert code == 0
    payload = json.loads(out)
    details = [c.get("detail", "") for c in payload["checks"]]
    assert any("slf_space_dimension = 8" in d for d in details)


def test_unknown_suite_is_usage_error(capsys):
    code, _out, err = run(capsys, ["verify", "--p", "2", "--suite", "nope"])
    assert code == 2
    assert "unknown suite" in err


def test_small_p_is_usage_error(capsys):
    code, _out, err = run(capsys, ["verify", "--p", "1", "--suite", "casimir"])
    assert code == 2
    assert "at least 2" in err


def test_out_file_and_determinism(tmp_path, capsys):
    first = tmp_path / "a.json"
    second = tmp_path / "b.json"
    args = ["verify", "--p", "2", "--suite", "integrals", "--format", "json"]
    assert main(args + ["--out", str(first)]) == 0
    assert main(args + ["--out", str(second)]) == 0
    capsys.readouterr()
    assert first.read_bytes() == second.read_bytes()


def test_tables_export(capsys):
    code, out, _err = run(capsys, ["tables", "--p", "2", "--s", "1"])
    assert code == 0
    payload = json.loads(out)
    assert payload["p"] == 2 and payload["s"] == 1
    cells = payload["cells"]
    assert len(cells) == (2 * 2**2) ** 2
    for cell in cells:
        assert set(cell) == {"row-label", "col-label", "result-label"}
    nonzero = [c for c in cells if c["result-label"] != "0"]
    assert nonzero and len(nonzero) < len(cells)


def test_tables_bad_block(capsys):
    code, _out, err = run(capsys, ["tables", "--p", "2", "--s", "5"])
    assert code == 2
    assert "block label" in err


def test_export_coefficients_p2(capsys):
    code, out, _err = run(capsys, ["export", "--p", "2", "--what", "coefficients"])
    assert code == 0
    payload = json.loads(out)
    assert payload["alpha0"] == "-1/4"
    assert payload["alphap"] == "1/4"
    assert payload["alphas"] == ["0", "0"]
    assert payload["betas"] == ["1/4"]
    assert payload["complex"]["alphap"] == [0.25, 0.0]


def test_export_idempotents(capsys):
    code, out, _err = run(capsys, ["export", "--p", "2", "--what", "idempotents"])
    assert code == 0
    payload = json.loads(out)
    assert len(payload["idempotents"]) == 2 * 3
    labels = {item["label"] for item in payload["idempotents"]}
    assert "e+(2,1)" in labels and "e-(1,1)" in labels


def test_export_slf_basis(capsys):
    code, out, _err = run(capsys, ["export", "--p", "2", "--what", "slf-basis"])
    assert code == 0
    payload = json.loads(out)
    names = [item["name"] for item in payload["functionals"]]
    assert names == ["T0", "Tp", "T1+", "T1-", "G1"]


def test_jobs_flag_matches_sequential(tmp_path, capsys):
    seq = tmp_path / "seq.json"
    par = tmp_path / "par.json"
    args = ["verify", "--p", "2", "--suite", "casimir,hopf", "--format", "json"]
    assert main(args + ["--out", str(seq)]) == 0
    assert main(args + ["--jobs", "2", "--out", str(par)]) == 0
    capsys.readouterr()
    assert seq.read_bytes() == par.read_bytes()


def test_large_p_soft_warning(capsys):
    # only checks the warning path, not a full large-p run
    code, _out, err = run(
        capsys, ["verify", "--p", "9", "--suite", "trig"]
    )
    assert code == 0
    assert "warning" in err
