import csv
import io
import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from oracles import lambda_polys, small_rationals, x_polys, xy_polys
from tsallis_bernoulli import cli
from tsallis_bernoulli.bernoulli import beta_tilde_recurrence
from tsallis_bernoulli.bivariate import beta_r_recurrence
from tsallis_bernoulli.poly import XPoly
from tsallis_bernoulli.serialize import from_record, to_latex, to_record, to_text
from tsallis_bernoulli.verify import Check


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json", "--no-meta")
    return code, json.loads(out)


class TestRoundTrip:
    @given(lambda_polys)
    def test_lambda(self, p):
        assert from_record(json.loads(json.dumps(to_record(p)))) == p

    @given(x_polys)
    def test_x(self, p):
        assert from_record(json.loads(json.dumps(to_record(p)))) == p

    @settings(deadline=None)
    @given(xy_polys)
    def test_xy(self, p):
        rec = to_record(p)
        assert from_record(json.loads(json.dumps(rec))) == p
        keys = [(t["xexp"], t["yexp"]) for t in rec["value"]]
        assert keys == sorted(keys)

    @given(small_rationals)
    def test_rational(self, q):
        assert from_record(to_record(q)) == q

    def test_zero_values_stay_typed(self):
        assert to_record(XPoly.zero()) == {"kind": "x", "value": {"var": "x", "coeffs": []}}
        assert from_record({"kind": "xy", "value": []}) == XPoly.zero()


class TestCompute:
    def test_first_member(self, capsys):
        code, doc = run_json(capsys, "compute", "--n", "1")
        assert code == 0
        assert doc["schema_version"] == "tsallis-bernoulli/1"
        assert doc["results"][0]["value"] == {"var": "x", "coeffs": [["-1/2", "1/2"], ["1"]]}

    def test_zeroth(self, capsys):
        _, doc = run_json(capsys, "compute", "--n", "0")
        assert doc["results"][0]["value"]["coeffs"] == [["1"]]

    def test_classical_text(self, capsys):
        code, out = run(capsys, "compute", "--n", "2", "--lambda", "0", "--format", "text")
        assert code == 0
        assert out.strip() == "x^2 - x + 1/6"

    def test_exact_value(self, capsys):
        _, doc = run_json(capsys, "compute", "--n", "1", "--lambda", "1/2", "--x", "1/3")
        assert doc["results"][0] == {"n": 1, "route": "recurrence", "kind": "rational", "value": "1/12"}

    def test_x_only(self, capsys):
        _, doc = run_json(capsys, "compute", "--n", "1", "--x", "0")
        assert doc["results"][0]["kind"] == "lambda"
        assert doc["results"][0]["value"] == ["-1/2", "1/2"]

    def test_all_routes(self, capsys):
        code, doc = run_json(capsys, "compute", "--n", "6", "--route", "all")
        assert code == 0
        routes = [r["route"] for r in doc["results"] if "route" in r]
        assert routes == ["recurrence", "explicit", "determinant", "series"]
        assert doc["results"][-1] == {"routes_agree": True}

    def test_disagreement_exit_code(self, capsys, monkeypatch):
        real = cli.beta_family

        def broken(n, route):
            fam = real(n, route)
            if route == "series" or getattr(route, "value", None) == "series":
                return type(fam)(fam.max_n, fam.numbers, fam.polys[:-1] + (fam.polys[-1] + 1,), fam.route)
            return fam

        monkeypatch.setattr(cli, "beta_family", broken)
        code, doc = run_json(capsys, "compute", "--n", "3", "--route", "all")
        assert code == 3
        assert doc["results"][-1] == {"routes_agree": False}

    @pytest.mark.parametrize(
        "argv",
        [
            ["compute", "--n", "-1"],
            ["compute", "--n", "2", "--lambda", "0.5"],
            ["compute", "--n", "2", "--route", "magic"],
            ["bivariate", "--n", "2", "--r", "9"],
            ["bivariate", "--n", "2", "--r", "0"],
            ["verify", "nonsense"],
        ],
    )
    def test_usage_errors_exit_2(self, argv, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2


class TestNumbers:
    def test_rows(self, capsys):
        _, doc = run_json(capsys, "numbers", "--max-n", "4")
        rows = {r["n"]: r["value"] for r in doc["results"]}
        assert rows[0] == ["1"]
        assert rows[1] == ["-1/2", "1/2"]
        assert rows[4][0] == "-1/30"

    def test_csv(self, capsys):
        _, out = run(capsys, "numbers", "--max-n", "2", "--format", "csv", "--no-meta")
        rows = list(csv.DictReader(io.StringIO(out)))
        assert {(r["n"], r["lexp"], r["coeff"]) for r in rows} == {
            ("0", "0", "1"),
            ("1", "0", "-1/2"),
            ("1", "1", "1/2"),
            ("2", "0", "1/6"),
            ("2", "2", "-1/6"),
        }


class TestBivariate:
    def test_r2_n2(self, capsys):
        _, doc = run_json(capsys, "bivariate", "--n", "2", "--r", "2")
        assert from_record(doc["results"][0]) == beta_r_recurrence(2, 2)
        assert {"xexp": 0, "yexp": 1, "coeff": ["2"]} in doc["results"][0]["value"]

    def test_n_below_r(self, capsys):
        _, doc = run_json(capsys, "bivariate", "--n", "1", "--r", "2")
        assert from_record(doc["results"][0]) == beta_tilde_recurrence(1)

    @pytest.mark.parametrize("r", ["1", "4", "8"])
    def test_zeroth(self, capsys, r):
        _, doc = run_json(capsys, "bivariate", "--n", "0", "--r", r, "--route", "double-sum")
        assert doc["results"][0]["value"] == [{"xexp": 0, "yexp": 0, "coeff": ["1"]}]


class TestSeries:
    def test_dump(self, capsys):
        _, doc = run_json(capsys, "series", "--order", "3")
        assert [r["n"] for r in doc["results"]] == [0, 1, 2, 3]
        assert from_record(doc["results"][1]) == beta_tilde_recurrence(1)


class TestVerify:
    def test_routes(self, capsys):
        code, out = run(capsys, "verify", "routes", "--max-n", "12")
        assert code == 0
        assert "FAIL" not in out

    def test_translation_via_flag(self, capsys):
        code, doc = run_json(capsys, "verify", "--suite", "translation", "--max-n", "8")
        assert code == 0
        assert all(r["passed"] for r in doc["results"])
        assert {r["suite"] for r in doc["results"]} == {"translation"}

    def test_all_at_zero(self, capsys):
        code, _ = run(capsys, "verify", "all", "--max-n", "0")
        assert code == 0

    def test_failure_exit_code(self, capsys, monkeypatch):
        def failing(name, max_n):
            return [Check("routes", "broken", 0, False, "boom"), Check("routes", "fine", 0, True)]

        monkeypatch.setattr(cli, "run_suite", failing)
        code, out = run(capsys, "verify", "routes", "--max-n", "1")
        assert code == 1
        assert "FAIL  routes" in out and "PASS  routes" in out


class TestEval:
    @pytest.mark.parametrize(
        "argv, expected",
        [
            (["explambda", "--x", "0", "--lambda", "0.7"], 1.0),
            (["loglambda", "--x", "1", "--lambda", "0.3"], 0.0),
            (["explambda", "--x", "1", "--lambda", "1"], 2.0),
        ],
    )
    def test_values(self, capsys, argv, expected):
        code, doc = run_json(capsys, "eval", *argv)
        assert code == 0
        assert doc["results"][0]["value"] == expected

    def test_domain_error_record(self, capsys):
        code, out = run(capsys, "eval", "explambda", "--x", "-3", "--lambda", "0.5")
        assert code == 2
        err = json.loads(out)["error"]
        assert err["type"] == "NumericDomainError"


class TestRendering:
    def test_latex_and_json_describe_the_same_object(self, capsys):
        _, doc = run_json(capsys, "compute", "--n", "5")
        _, latex = run(capsys, "compute", "--n", "5", "--format", "latex", "--no-meta")
        assert latex.strip() == to_latex(from_record(doc["results"][0]))

    def test_latex_term_order(self):
        p = beta_tilde_recurrence(2)
        assert to_latex(p) == (
            "\\left(-\\lambda + 1\\right) x^{2} + \\left(\\lambda - 1\\right) x"
            " + \\left(-\\frac{1}{6} \\lambda^{2} + \\frac{1}{6}\\right)"
        )

    def test_text_of_first_member(self):
        assert to_text(beta_tilde_recurrence(1)) == "x + (1/2*lambda - 1/2)"

    def test_deterministic_without_meta(self, capsys):
        outs = [run(capsys, "bivariate", "--n", "4", "--r", "2", "--no-meta")[1] for _ in range(2)]
        assert outs[0] == outs[1]
        assert "meta" not in json.loads(outs[0])

    def test_meta_present_by_default(self, capsys):
        _, out = run(capsys, "numbers", "--max-n", "1")
        assert "generated_at" in json.loads(out)["meta"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "tsallis_bernoulli", "compute", "--n", "2", "--lambda", "0", "--format", "text"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "x^2 - x + 1/6"
