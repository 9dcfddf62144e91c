import json

from twistsel.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--curve", "[0,-1,1,0,0]")
    assert code == 0
    payload = json.loads(out)
    assert payload["disc"] == "-11" and payload["j"] == "-4096/11"


def test_local(capsys):
    code, out, _ = run_cli(capsys, "local", "--curve", "[0,-1,1,0,0]", "--p", "11")
    assert code == 0
    payload = json.loads(out)
    assert payload["kind"] == "MultiplicativeSplit" and payload["kodaira"] == "I1"


def test_conductor(capsys):
    code, out, _ = run_cli(capsys, "conductor", "--curve", "[0,0,0,1,0]")
    assert code == 0
    assert json.loads(out)["N"] == 64


def test_torsion(capsys):
    code, out, _ = run_cli(capsys, "torsion", "--curve", "[0,-1,1,0,0]", "--ell", "5")
    assert code == 0 and json.loads(out)["point"] == "(0,0)"
    code2, out2, _ = run_cli(capsys, "torsion", "--curve", "[0,0,0,0,1]", "--ell", "5")
    assert code2 == 2 and json.loads(out2)["point"] is None


def test_divpoly(capsys):
    code, out, _ = run_cli(capsys, "divpoly", "--curve", "[0,0,0,2,3]", "--n", "3")
    assert code == 0
    payload = json.loads(out)
    assert payload["coeffs"] == ["-4", "36", "12", "0", "3"]


def test_factor_shape(capsys):
    code, out, _ = run_cli(
        capsys, "factor-shape", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--degree-bound", "2"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["residual_degree"] == 10
    assert sorted(f["degree"] for f in payload["factors"]) == [1, 1]


def test_torsion_field(capsys):
    code, out, _ = run_cli(
        capsys, "torsion-field", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--factor", "[0,1]"
    )
    assert code == 0
    assert json.loads(out)["degree"] == 1


def test_classgroup(capsys):
    code, out, _ = run_cli(capsys, "classgroup", "--D", "-20")
    assert code == 0
    assert out.strip() == '{"D":-20,"h":2,"structure":[2]}'


def test_rayclass(capsys):
    code, out, _ = run_cli(capsys, "rayclass", "--d", "-5", "--s", "11", "--ell", "5")
    assert code == 0
    payload = json.loads(out)
    assert payload["ray_class_number"] == 120 and payload["ell_rank"] == 1


def test_check_admissible(capsys):
    code, out, _ = run_cli(capsys, "check", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--d", "-37")
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] == "Admissible"
    assert payload["verdict"] == "SelmerTrivial"
    assert payload["bounds"] == [1, 1]


def test_check_no_torsion_exit_2(capsys):
    code, out, _ = run_cli(capsys, "check", "--curve", "[0,0,0,0,1]", "--ell", "5", "--d", "-37")
    assert code == 2


def test_check_inadmissible(capsys):
    code, out, _ = run_cli(capsys, "check", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--d", "-13")
    assert code == 0
    assert json.loads(out)["overall"] == "Inadmissible"


def test_search_csv(capsys):
    code, out, _ = run_cli(
        capsys, "search", "--curve", "[0,-1,1,0,0]", "--ell", "5",
        "--range=-60:-3", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "d,D,h,ell_rank,selmer_lb,verdict,failed_clauses"
    assert any(line.startswith("-37,-148,2,0,1,SelmerTrivial") for line in lines)


def test_byte_stable_json(capsys):
    a = run_cli(capsys, "check", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--d", "-37")[1]
    b = run_cli(capsys, "check", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--d", "-37")[1]
    assert a == b


def test_cli_matches_library(capsys):
    # the CLI must be a thin adapter over the library calls
    from twistsel.checker import admissibility_check, corollary_sandwich, selmer_lower_bound
    from twistsel.curves import CurveQ

    E = CurveQ(0, -1, 1, 0, 0)
    _code, out, _ = run_cli(capsys, "check", "--curve", "[0,-1,1,0,0]", "--ell", "5", "--d", "-181")
    payload = json.loads(out)
    rep = admissibility_check(E, 5, -181)
    assert payload["overall"] == rep.overall.value
    sb = selmer_lower_bound(E, 5, -181)
    assert payload["selmer_lower_bound"] == sb.bound
    cs = corollary_sandwich(E, 5, -181)
    assert payload["verdict"] == cs.verdict.value
    assert payload["bounds"] == [cs.lower, cs.upper]


def test_unknown_command_usage_error(capsys):
    code = main(["frobnicate"])
    assert code == 1


def test_verify_command(capsys):
    code, out, _ = run_cli(capsys, "verify-paper-examples")
    assert code == 0
    lines = [line for line in out.strip().splitlines() if line]
    assert len(lines) == 4
    assert all(line.startswith("PASS") for line in lines)
