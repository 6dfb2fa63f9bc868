import io
import json
import subprocess
import sys

import pytest

from changhee import cli, verify
from changhee.characters import primitive_root_character


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(*argv):
    code, out, _ = run(*argv)
    return code, json.loads(out)["payload"]


def test_table_classical():
    code, body = payload("table", "--r", "1", "--a", "1", "--b", "1", "--q", "1", "--x", "0", "--n-max", "3")
    assert code == 0
    assert body["results"]["values"] == ["1", "-1/2", "0", "1/4"]


def test_table_entry_zero():
    code, body = payload("table", "--r", "2", "--a", "1,1", "--b", "1,2", "--q", "1/2", "--n-max", "0")
    assert code == 0
    assert body["results"]["values"] == ["32/15"]


def test_table_singular_spec():
    code, body = payload("table", "--q", "-1", "--b", "1", "--n-max", "2")
    assert code == 2
    assert body["status"] == "invalid"
    assert "SingularSpec" in body["error"]


def test_table_r_mismatch():
    code, _ = payload("table", "--r", "2", "--a", "1", "--b", "1")
    assert code == 2


def test_table_csv():
    code, out, err = run("table", "--q", "1/2", "--n-max", "2", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["n,value", "0,4/3", "1,-4/9", "2,-4/27"]
    assert json.loads(err)["payload"]["status"] == "ok"


def test_table_with_character():
    code, body = payload("table", "--chi", "quadratic:3", "--q", "1/2", "--n-max", "0")
    assert code == 0
    assert body["results"]["values"] == ["-4/3"]


def test_table_complex_character_file_is_rejected(tmp_path):
    path = tmp_path / "chi.txt"
    path.write_text(primitive_root_character(5, 2, 1j).to_text())
    code, body = payload("table", "--chi-file", str(path), "--q", "1/2", "--n-max", "1")
    assert code == 2
    assert "WrongPipeline" in body["error"]


def test_eval_zeta_minus_one():
    code, body = payload("eval", "zeta", "--s", "-1,0", "--x", "1", "--q", "0.5,0", "--a", "1", "--b", "1", "--eps", "1e-12")
    assert code == 0
    assert body["results"]["value"][0] == pytest.approx(8 / 9, abs=1e-11)
    assert set(body["results"]) >= {"value", "tail_bound", "terms", "cutoffs"}


def test_eval_zeta_q_zero():
    code, body = payload("eval", "zeta", "--q", "0,0", "--x", "2", "--s", "3,0", "--a", "1", "--b", "1")
    assert code == 0
    assert body["results"]["value"] == [0.25, 0.0]


def test_eval_l_quadratic():
    code, body = payload("eval", "l", "--chi", "quadratic:3", "--s", "0,0", "--q", "0.5,0", "--a", "1", "--b", "1")
    assert code == 0
    assert body["results"]["value"][0] == pytest.approx(-4 / 3, abs=1e-11)


def test_eval_l_from_file(tmp_path):
    path = tmp_path / "chi.txt"
    path.write_text("3\n0 1 -1\n")
    code, body = payload("eval", "l", "--chi-file", str(path), "--s", "0,0", "--q", "0.5,0")
    assert code == 0
    assert body["results"]["value"][0] == pytest.approx(-4 / 3, abs=1e-11)


def test_eval_genfun_reports_closed_form():
    code, body = payload("eval", "genfun", "--t", "0.1,0", "--q", "0.5,0")
    assert code == 0
    res = body["results"]
    assert res["value"][0] == pytest.approx(res["closed_form"][0], abs=1e-12)


def test_eval_rejects_unit_modulus():
    code, body = payload("eval", "zeta", "--q", "1,0", "--s", "1,0")
    assert code == 2
    assert body["status"] == "invalid"


def test_eval_eps_from_environment(monkeypatch):
    args = ("eval", "zeta", "--s", "-1,0", "--x", "1", "--q", "0.5,0")
    monkeypatch.setenv("QEULER_EPS_DEFAULT", "1e-6")
    _, loose = payload(*args)
    monkeypatch.setenv("QEULER_EPS_DEFAULT", "1e-14")
    _, tight = payload(*args)
    assert loose["params"]["eps"] == 1e-6
    assert loose["results"]["shell"] < tight["results"]["shell"]


def test_verify_theorem1_even_is_logged():
    code, body = payload("verify", "theorem1", "--f", "3", "--n", "2")
    assert code == 0
    assert {c["status"] for c in body["checks"]} == {"logged"}


@pytest.mark.parametrize("suite", ["theorem3", "padic"])
def test_verify_suites_pass(suite):
    code, body = payload("verify", suite)
    assert code == 0
    assert body["results"]["summary"]["fail"] == 0
    assert body["results"]["summary"]["pass"] > 0


def test_verify_unknown_suite():
    code, body = payload("verify", "theorem9")
    assert code == 2
    assert body["status"] == "invalid"


def test_verify_failure_exit_code(monkeypatch):
    def broken(**_):
        return [verify.Check("theorem1", "forced", {}, "fail", 1, 0.0)]

    monkeypatch.setitem(verify.SUITES, "theorem1", broken)
    code, body = payload("verify", "theorem1")
    assert code == 1
    assert body["status"] == "fail"


@pytest.mark.parametrize(
    "argv",
    [
        ("table", "--a", "1,2", "--b", "2,1", "--q", "2/3", "--x", "1/3", "--n-max", "5"),
        ("eval", "l", "--chi", "quadratic:5", "--s", "1,1", "--q", "0.3,0.2", "--a", "1,1", "--b", "1,2"),
        ("verify", "theorem1"),
    ],
)
def test_payload_is_deterministic(argv):
    _, first, _ = run(*argv)
    _, second, _ = run(*argv)
    assert json.loads(first)["payload"] == json.loads(second)["payload"]
    dump = lambda text: json.dumps(json.loads(text)["payload"], sort_keys=True)
    assert dump(first) == dump(second)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "changhee", "table", "--n-max", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["payload"]["results"]["values"] == ["1", "-1/2"]
