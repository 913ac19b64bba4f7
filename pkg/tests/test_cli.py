import json

import pytest

from skeingram.cli import main
from skeingram.cyclotomic import CycNumber
from skeingram.gram import GramReport
from skeingram.skein import make_params


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_params_p5(capsys):
    code, out, _ = run(capsys, "params", "--p", "5")
    assert code == 0
    assert "N = 120" in out and "[PASS] mu != 1" in out
    assert "FAIL" not in out


def test_params_below_range(capsys):
    code, _, err = run(capsys, "params", "--p", "4")
    assert code == 2 and "p must be" in err


def test_params_all_kappa_choices(capsys):
    code, out, _ = run(capsys, "params", "--p", "7", "--kappa-choice", "all", "--format", "json")
    reports = json.loads(out)
    assert code == 0 and len(reports) == 6
    assert sorted(r["kappa_choice"] for r in reports) == list(range(6))
    eta = CycNumber.from_json(reports[0]["eta"]["exact"])
    assert eta == make_params(7).eta


def test_params_failure_exit_code(capsys, monkeypatch):
    import skeingram.cli as cli

    real = cli.construct_params

    def broken(p, choice=0):
        params = real(p, choice)
        object.__setattr__(params, "checks", params.checks + (("forced identity", False),))
        return params

    monkeypatch.setattr(cli, "construct_params", broken)
    code, out, _ = run(capsys, "params", "--p", "5")
    assert code == 1 and "[FAIL] forced identity" in out


@pytest.mark.parametrize("n, label", [(0, "= 1"), (10, "= mu^-1"), (-10, "= mu\n"), (1, "= eta")])
def test_lens(capsys, n, label):
    code, out, _ = run(capsys, "lens", "--p", "5", "--n", str(n))
    assert code == 0 and label in out and "convention:" in out


def test_lens_json_round_trip(capsys):
    code, out, _ = run(capsys, "lens", "--p", "5", "--n", "10", "--format", "json")
    rec = json.loads(out)
    params = make_params(5)
    assert CycNumber.from_json(rec["exact"]) == params.mu_inv
    assert rec["equals"] == "mu^-1"


def test_pairing_direct_prints_matrix(capsys):
    code, out, _ = run(capsys, "pairing", "--p", "5", "--k", "1", "--l", "2", "--method", "direct")
    assert code == 0
    assert "signature 11" in out and "= mu^-1" in out
    assert len([ln for ln in out.splitlines() if ln.strip().startswith(("0", "1"))]) == 11


def test_pairing_reduced_json(capsys):
    code, out, _ = run(capsys, "pairing", "--p", "7", "--k", "2", "--l", "2", "--format", "json")
    rec = json.loads(out)
    assert code == 0 and rec["equals"] == "1" and "linking_matrix" not in rec


def test_pairing_needs_k_and_l(capsys):
    assert run(capsys, "pairing", "--p", "5", "--k", "1")[0] == 2


def test_gram_outputs(capsys, tmp_path):
    code, out, _ = run(capsys, "gram", "--p", "5", "--n-max", "2")
    assert code == 0 and "singular sizes: [2]" in out
    code, out, _ = run(capsys, "gram", "--p", "5", "--n-max", "1")
    assert "rank lower bound for {w_2pk}: 1" in out
    target = tmp_path / "scan.json"
    code, _, _ = run(capsys, "gram", "--p", "5", "--n-max", "50", "--format", "json", "--out", str(target))
    report = GramReport.from_json(target.read_text())
    assert code == 0 and report.n_max == 50 and report.consecutive_violations == []
    code, out, _ = run(capsys, "gram", "--p", "5", "--n-max", "8", "--format", "csv")
    assert out.splitlines()[0] == "p,n,det_real,det_imag,singular,approximate"


def test_usage_errors(capsys):
    assert run(capsys, "gram", "--p", "5", "--n-max", "10", "--subsample", "0")[0] == 2
    assert run(capsys, "bogus")[0] == 2
    assert run(capsys, "lens", "--p", "5")[0] == 2
    assert run(capsys, "lens", "--p", "5", "--n", "3", "--kappa-choice", "9")[0] == 2
    assert run(capsys, "lens", "--p", "5", "--n", "3", "--kappa-choice", "all")[0] == 2


def test_verify_small_range(capsys, tmp_path):
    target = tmp_path / "verify.json"
    code, _, _ = run(capsys, "verify", "--p", "5", "--n-max", "20", "--out", str(target))
    summary = json.loads(target.read_text())
    assert code == 0 and summary["passed"]
    names = [c["name"] for c in summary["checks"]]
    assert len(names) == 10
    assert [int(n.split()[0]) for n in names] == list(range(1, 11))
    assert all("seconds" in c for c in summary["checks"])
