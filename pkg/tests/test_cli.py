import json

import pytest
from click.testing import CliRunner

from cpsteenrod import blocks as B
from cpsteenrod.cli import main


@pytest.fixture
def run():
    runner = CliRunner()

    def invoke(*args, env=None):
        return runner.invoke(main, [str(a) for a in args], env=env)

    return invoke


def test_check_main_both_lenses_pass(run):
    res = run("check-main", "--prime", 3, "--max-degree", 100, "--lens", "both")
    assert res.exit_code == 0, res.output
    assert res.output.count("EQUAL") == 2


def test_check_main_rejects_composite(run):
    res = run("check-main", "--prime", 4)
    assert res.exit_code == 2
    assert "not prime" in res.output


def test_check_main_json_schema(run):
    res = run("check-main", "-p", 3, "-n", 20, "--lens", "phi", "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert set(doc) == {"prime", "max_degree", "lens", "lower_bound", "lhs", "rhs", "equal", "first_mismatch"}
    assert (doc["prime"], doc["lens"], doc["equal"], doc["first_mismatch"]) == (3, "phi", True, None)
    assert len(doc["lhs"]) == len(doc["rhs"]) == 21


def test_check_main_json_both_is_list(run):
    docs = json.loads(run("check-main", "-p", 2, "-n", 10, "--format", "json").output)
    assert [d["lens"] for d in docs] == ["underlying", "phi"]


def test_check_main_csv(run):
    res = run("check-main", "-p", 3, "-n", 5, "--lens", "underlying", "--format", "csv")
    lines = res.output.strip().splitlines()
    assert lines[0] == "degree,lhs,rhs"
    assert lines[1:] == ["0,1,1", "1,0,0", "2,0,0", "3,0,0", "4,1,1", "5,1,1"]


def test_check_main_csv_both_has_sections(run):
    out = run("check-main", "-p", 3, "-n", 3, "--format", "csv").output
    assert "# lens=underlying" in out and "# lens=phi" in out


def test_perturbation_reports_mismatch(run):
    res = run("check-main", "-p", 3, "-n", 50, "--lens", "phi", "--perturb", "xi1:+1")
    assert res.exit_code == 1
    assert "MISMATCH first at degree 4" in res.output


def test_perturbation_json(run):
    res = run("check-main", "-p", 3, "-n", 50, "--lens", "phi", "--perturb", "tau1:-1", "--format", "json")
    assert res.exit_code == 1
    assert json.loads(res.output)["first_mismatch"] == 4


@pytest.mark.parametrize("value", ["nonsense", "xi1", "xi1:x", "zeta9:1"])
def test_bad_perturbation_is_usage_error(run, value):
    assert run("check-main", "-p", 3, "-n", 20, "--perturb", value).exit_code == 2


def test_perturbation_to_degree_zero_is_usage_error(run):
    assert run("check-main", "-p", 3, "-n", 20, "--lens", "phi", "--perturb", "tau0:-1").exit_code == 2


def test_parallel_jobs(run):
    res = run("check-main", "-p", 5, "-n", 60, "--jobs", 2, "--format", "json")
    assert res.exit_code == 0
    assert all(d["equal"] for d in json.loads(res.output))


def test_env_var_sets_default_degree(run):
    doc = json.loads(run("check-main", "-p", 3, "--lens", "phi", "--format", "json",
                         env={"CPSTEENROD_MAX_DEGREE": "7"}).output)
    assert doc["max_degree"] == 7
    doc = json.loads(run("check-main", "-p", 3, "-n", 9, "--lens", "phi", "--format", "json",
                         env={"CPSTEENROD_MAX_DEGREE": "7"}).output)
    assert doc["max_degree"] == 9


@pytest.mark.parametrize("p, n", [(3, 100), (2, 256), (5, 0)])
def test_check_corollary(run, p, n):
    res = run("check-corollary", "-p", p, "-n", n)
    assert res.exit_code == 0, res.output


def test_check_corollary_p2_runs_classical_too(run):
    docs = json.loads(run("check-corollary", "-p", 2, "-n", 30, "--format", "json").output)
    assert len(docs) == 2


def test_bijection_command(run, tmp_path):
    dump = tmp_path / "listing.json"
    res = run("bijection", "-p", 3, "-n", 40, "--format", "json", "--dump", dump, "--dump-limit", 7)
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert [c["passed"] for c in doc["checks"]] == [True] * 4
    assert len(json.loads(dump.read_text())) == 7


def test_bijection_negative_control(run):
    res = run("bijection", "-p", 3, "-n", 30, "--drop-disjointness")
    assert res.exit_code == 1
    assert "FAIL" in res.output


def test_bsone_table(run):
    res = run("bsone", "-p", 3, "--k-max", 10, "--format", "csv")
    assert res.exit_code == 0
    assert "9,6,18" in res.output.splitlines()


def test_lint_always_exits_zero(run):
    res = run("lint", "-p", 3, "--i-max", 2, "--format", "json")
    assert res.exit_code == 0
    rows = json.loads(res.output)["rows"]
    assert [(r["i"], r["forced_exponent"], r["printed_exponent"]) for r in rows] == [(1, 1, 5), (2, 5, 17)]
    plain = run("lint", "-p", 3, "--i-max", 2)
    assert plain.exit_code == 0 and plain.output.count("MISMATCH") == 2


def test_series_command(run, tmp_path):
    path = tmp_path / "t.json"
    path.write_text(B.dumps(B.t_theta(3, 1)))
    res = run("series", path, "--lens", "phi", "-n", 5, "--format", "json")
    assert res.exit_code == 0
    doc = json.loads(res.output)
    assert doc["counts"] == [0, 1, 1, 1, 2, 1]


def test_series_rejects_bad_file(run, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"type": "moon"}')
    assert run("series", path, "--lens", "phi").exit_code == 2
    path.write_text("not json")
    assert run("series", path, "--lens", "phi").exit_code == 2


def test_identities_command(run):
    res = run("identities", "-p", 3, "--k-max", 500)
    assert res.exit_code == 0
    assert res.output.count("PASS") == 4
