import json

from qweyl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_validate_default(capsys):
    code, out, _ = run(capsys, "validate")
    assert code == 0
    assert "instance ok" in out


def test_nf(capsys):
    code, out, _ = run(capsys, "nf", "x1*y1")
    assert code == 0
    assert out.strip() == "(-1 + eta^[1,0]) + eta^[1,0]*y1*x1"


def test_nf_json(capsys):
    code, out, _ = run(capsys, "--json", "nf", "x2*y1")
    assert code == 0
    record = json.loads(out)
    assert record["command"] == "nf"
    assert record["result"] == "eta^[2,0]*y1*x2"
    assert record["instance"]["n"] == 2


def test_comm_and_limit(capsys):
    code, out, _ = run(capsys, "comm", "x1", "y1")
    assert code == 0
    assert "eta^[1,0]" in out
    code, out, _ = run(capsys, "limit", "x1*y1")
    assert code == 0
    assert out.strip() == "y1*x1"
    code, out, _ = run(capsys, "limit", "z2")
    assert code == 0
    assert out.strip() == "1 + y1*x1 + y2*x2"


def test_bracket_and_scl(capsys):
    code, out, _ = run(capsys, "bracket", "x1", "y1")
    assert code == 0
    assert out.strip() == "mu1 + mu1*y1*x1"
    code, out, _ = run(capsys, "scl", "x1", "y1")
    assert code == 0
    assert out.strip() == "mu1 + mu1*y1*x1; CONSISTENT"


def test_admissible(capsys):
    code, out, _ = run(capsys, "admissible", "1")
    assert code == 0
    assert "admissible sets of M_1: 2" in out
    code, out, _ = run(capsys, "--json", "admissible", "2")
    assert json.loads(out)["count"] == 6


def test_stratum_and_center(capsys):
    code, out, _ = run(capsys, "stratum", "z1")
    assert code == 0
    assert "generators: y1, z2, y2" in out
    code, out, _ = run(capsys, "center", "")
    assert code == 0
    assert "center lattice rank" in out


def test_stratum_rejects_non_admissible(capsys):
    code, _, err = run(capsys, "stratum", "z2,y2")
    assert code == 2
    assert "not admissible" in err


def test_example_quantum_plane(capsys):
    code, out, _ = run(capsys, "example", "quantum-plane")
    assert code == 0
    assert "xy=tyx" in out
    assert "{x,y}=xy" in out


def test_maltsiniotis(capsys):
    code, out, _ = run(capsys, "maltsiniotis", "(eta^[1,0]-1)*y1")
    assert code == 0
    assert out.strip() == "y1"
    code, _, err = run(capsys, "maltsiniotis", "y1")
    assert code == 2
    assert "localization" in err.lower()


def test_maltsiniotis_relation_is_zero(capsys):
    expr = "x2*y2 - eta^[0,1]*y2*x2 - 1 - (eta^[1,0]-1)*y1*x1"
    code, out, _ = run(capsys, "maltsiniotis", expr)
    assert code == 0
    assert out.strip() == "0"


def test_syntax_error_exit_code(capsys):
    code, _, err = run(capsys, "nf", "y1 +")
    assert code == 2
    assert "column" in err


def test_unknown_generator_exit_code(capsys):
    code, _, err = run(capsys, "nf", "y9")
    assert code == 2


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "quantum-plane")
    assert code == 0
    assert "PASS quantum-plane" in out
    assert "OK: 1/1 suites" in out


def test_verify_json_structure(capsys):
    code, out, _ = run(
        capsys, "--json", "verify", "--suite", "admissible-counts", "--seed", "7"
    )
    assert code == 0
    record = json.loads(out)
    assert record["result"] is True
    assert record["checks"][0]["name"] == "admissible-counts"


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nope")
    assert code == 2


def test_verify_deterministic_under_seed(capsys):
    args = ("--json", "verify", "--suite", "interpolation", "--seed", "99")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_config_file(tmp_path, capsys):
    config = {
        "n": 1,
        "r": 1,
        "q_exponents": [[1]],
        "lambda_exponents": [[[0]]],
        "concrete": {"q": "2", "eta": ["3"], "mu": ["1"]},
    }
    path = tmp_path / "instance.json"
    path.write_text(json.dumps(config))
    code, out, _ = run(capsys, "--config", str(path), "nf", "x1*y1")
    assert code == 0
    assert out.strip() == "(-1 + eta^[1]) + eta^[1]*y1*x1"
    code, out, _ = run(capsys, "--config", str(path), "validate")
    assert code == 0
    assert "t^2 - t + 1" in out


def test_bad_config(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text("{\"n\": 2}")
    code, _, err = run(capsys, "--config", str(path), "validate")
    assert code == 2
