import io
import json

import pytest

from frmzv import cli


def run(argv, env=None, monkeypatch=None):
    out = io.StringIO()
    code = cli.main(argv, out=out)
    return code, out.getvalue()


def test_product_stuffle():
    code, out = run(["product", "--mode", "stuffle", "2", "2"])
    assert code == 0
    assert json.loads(out) == {"terms": [{"basis": "2,2", "coeff": "2"},
                                         {"basis": "4", "coeff": "1"}]}


def test_product_shuffle():
    code, out = run(["product", "--mode", "shuffle", "1,1", "2"])
    terms = {t["basis"]: t["coeff"] for t in json.loads(out)["terms"]}
    assert terms == {"2,1,1": "3", "1,2,1": "2", "1,1,2": "1"}


def test_dual():
    assert run(["dual", "3"]) == (0, "2,1\n")
    assert run(["dual", "4,1"]) == (0, "3,1,1\n")


def test_parse():
    code, out = run(["parse", "1^2,3"])
    obj = json.loads(out)
    assert obj["index"] == "1,1,3" and obj["word"] == "yyxxy" and not obj["admissible"]


def test_regularize():
    code, out = run(["regularize", "--mode", "shuffle", "1,2"])
    obj = json.loads(out)
    assert obj["mode"] == "shuffle"
    assert obj["coeffs"]["1"]["terms"] == [{"basis": "2", "coeff": "1"}]


def test_frmzv_and_sums():
    code, out = run(["frmzv", "--mode", "shuffle", "2,1"])
    assert json.loads(out)["value"]["terms"] == [{"basis": "2,1", "coeff": "3"}]
    code, out = run(["frmzv", "--mode", "star", "4", "--eval", "--prec", "64"])
    assert json.loads(out)["numeric"].startswith("2.1646464674")
    code, out = run(["sumS", "4", "2", "1"])
    assert json.loads(out)["t_degree"] == 0


def test_eval_and_env(monkeypatch):
    code, out = run(["eval", "--prec", "64", "2"])
    assert json.loads(out)["value"].startswith("1.644934066848")
    monkeypatch.setenv(cli.PREC_ENV, "200")
    code, out = run(["eval", "--star", "2,1"])
    obj = json.loads(out)
    assert obj["star"] and obj["value"].startswith("2.40411380631918857079947632302289998152997258468")


def test_series_and_fmzv():
    code, out = run(["series", "gamma-quotient", "--order", "3", "--prec", "64"])
    coeffs = {(t["x"], t["y"]): t["coeff"] for t in json.loads(out)["terms"]}
    assert coeffs[(1, 1)].startswith("-1.6449")
    assert run(["fmzv", "--prime", "5", "2"])[1].strip() == '{"index": "2", "prime": 5, "residue": 0}'


def test_usage_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["dual", "3", "--frobnicate"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["dual", "0,1"])
    assert exc.value.code == 2
    assert run(["dual", "1,2"])[0] == 2


def test_verify_json_records_and_exit_codes():
    code, out = run(["verify", "products", "--json"])
    assert code == 0
    records = [json.loads(line) for line in out.splitlines()]
    assert [r["claim_id"] for r in records] == ["stuffle-golden", "shuffle-golden"]
    assert set(records[0]) >= {"claim_id", "paper_ref", "status", "residual", "elapsed_ms"}
    # the strict recursion fails for real values, so the exit code reports it
    code, out = run(["verify", "lemma2", "--max-k", "4", "--json"])
    assert code == 1
    status = {json.loads(line)["claim_id"]: json.loads(line)["status"] for line in out.splitlines()}
    assert status["sum-recursion"] == "fail"
    assert status["sum-recursion-mod-zeta2"] == "pass"


def test_verify_csv_and_deterministic():
    code, a = run(["verify", "finite", "--primes", "5..13", "--max-weight", "4", "--csv"])
    assert code == 0
    lines = a.splitlines()
    assert lines[0].startswith("claim_id,status,residual")

    def strip_time(text):
        return [json.loads(line) | {"elapsed_ms": 0} for line in text.splitlines()]

    _, j1 = run(["verify", "lemma3", "--max-k", "5", "--json"])
    _, j2 = run(["verify", "lemma3", "--max-k", "5", "--json"])
    assert strip_time(j1) == strip_time(j2)


def test_verify_parallel_same_order():
    _, serial = run(["verify", "all", "--max-k", "4", "--max-weight", "4", "--json",
                     "--primes", "5..11"])
    _, parallel = run(["verify", "all", "--max-k", "4", "--max-weight", "4", "--json",
                       "--primes", "5..11", "--jobs", "2"])
    ids = lambda text: [json.loads(line)["claim_id"] for line in text.splitlines()]  # noqa: E731
    assert ids(serial) == ids(parallel)
