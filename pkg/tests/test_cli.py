import json

from skewtab import cli, verify
from skewtab.verify import SweepResult


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_golden(capsys):
    code, out, _ = run_cli(capsys, "count", "4,4,3,2/2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["e"] == "3060" and doc["F"] == "1260" and doc["xi"] == "5"


def test_count_single_cell(capsys):
    code, out, _ = run_cli(capsys, "count", "1")
    assert code == 0
    assert json.loads(out)["e"] == "1"


def test_count_family_and_rational(capsys):
    code, out, _ = run_cli(capsys, "count", "thick-ribbon:k=2")
    assert code == 0
    doc = json.loads(out)
    assert doc["shape"] == "3,2,1/1"
    assert doc["F"] == "40/3"


def test_deterministic_output(capsys):
    _, first, _ = run_cli(capsys, "count", "5,4,4,1/2,1")
    _, second, _ = run_cli(capsys, "count", "5,4,4,1/2,1")
    _, threaded, _ = run_cli(capsys, "count", "5,4,4,1/2,1", "--threads", "4")
    assert first == second == threaded


def test_usage_errors(capsys):
    code, _, err = run_cli(capsys, "count", "3,4/1")
    assert code == 2
    assert "index 2" in err
    code, _, err = run_cli(capsys, "count", "2,1/3")
    assert code == 2


def test_resource_cap_exit(capsys):
    code, _, err = run_cli(
        capsys, "excited", "9,9,9,9,9,9/4,4,4,4", "--max-inner", "10"
    )
    assert code == 3
    assert "excited" in err


def test_excited_and_paths(capsys):
    code, out, _ = run_cli(capsys, "excited", "2,2/1", "--paths")
    assert code == 0
    doc = json.loads(out)
    assert doc["xi"] == "2"
    assert [[1, 1]] in doc["diagrams"] and [[2, 2]] in doc["diagrams"]
    assert len(doc["paths"]) == 2


def test_excited_render(capsys):
    code, out, _ = run_cli(capsys, "excited", "2,2/1", "--render")
    assert code == 0
    assert "#." in out and ".#" in out


def test_nhlf_subcommand(capsys):
    code, out, _ = run_cli(capsys, "nhlf", "4,4,3,2/2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["e"] == "3060"
    assert doc["max-term"] == "1/2880"


def test_bounds_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "bounds", "4,4,3,2/2,1")
    assert code == 0
    doc = json.loads(out)
    assert doc["lower"]["rank-factorial"] == "864"
    assert doc["upper"]["chain"] == "16800"
    assert all(doc["verdicts"].values())


def test_family_csv(capsys):
    code, out, _ = run_cli(capsys, "family", "thick-ribbon", "--k", "2:4:2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "family,k,n,log_e_exact,c_k,logF,logXi,verdict"
    assert len(lines) == 3
    assert lines[1].startswith("thick-ribbon,2,5,")
    assert lines[1].endswith(",true")


def test_integrate_inline(capsys):
    code, out, _ = run_cli(
        capsys, "integrate", '{"outer": [[0, 1], [1, 1]]}', "--grid", "256"
    )
    assert code == 0
    doc = json.loads(out)
    assert abs(float(doc["integral"]) + 0.1137) < 1e-3


def test_integrate_file(tmp_path, capsys):
    spec = tmp_path / "shape.json"
    spec.write_text(json.dumps({"outer": [[0, 1], [1, 1]], "grid": 128}))
    code, out, _ = run_cli(capsys, "integrate", str(spec))
    assert code == 0
    assert json.loads(out)["grid"] == 128


def test_lr_subcommand(capsys):
    code, out, _ = run_cli(capsys, "lr", "2,1", "1", "1,1")
    assert code == 0
    assert json.loads(out)["lr"] == "1"


def test_verify_ok(capsys):
    code, out, _ = run_cli(capsys, "verify", "--max-size", "4")
    assert code == 0
    assert "oracles" in out and "bounds" in out


def test_verify_unknown_group(capsys):
    code, _, err = run_cli(capsys, "verify", "--groups", "bogus")
    assert code == 2


def test_env_cap_override(monkeypatch, capsys):
    monkeypatch.setenv("SKEWTAB_MAX_INNER", "2")
    code, _, err = run_cli(capsys, "excited", "4,4,4/2,1")
    assert code == 3
    monkeypatch.setenv("SKEWTAB_GRID", "128")
    code, out, _ = run_cli(capsys, "integrate", '{"outer": [[0, 1], [1, 1]]}')
    assert code == 0
    assert json.loads(out)["grid"] == 128


def test_verify_failure_exit(monkeypatch, capsys):
    def failing(max_size=8, progress=None):
        return SweepResult("oracles", 1, ["injected: stub failure"])

    monkeypatch.setitem(verify.SWEEP_GROUPS, "oracles", failing)
    code, out, _ = run_cli(capsys, "verify", "--groups", "oracles")
    assert code == 1
    assert "injected" in out
