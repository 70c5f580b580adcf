"""Exit criteria. Each test prints one PASS/FAIL line and is summarized at the end of the run."""
import json
import random
import subprocess
import sys
import time
from fractions import Fraction
from math import comb

from acceptance_log import criterion
from oracles import laplace_det
from paper_table import PAPER_TABLE
from test_bernoulli import classical_bernoulli_poly
from tsallis_bernoulli.bernoulli import (
    Route,
    beta_family,
    beta_tilde_derivative_series,
    lambda_appell_monomials,
    lambda_appell_reconstruct,
    translation_lhs,
    translation_rhs,
    xn_expansion,
)
from tsallis_bernoulli.bivariate import BivariateRoute, bivariate_family, partial_x_check, partial_y_check
from tsallis_bernoulli.epsilon import EpsilonTable
from tsallis_bernoulli.hessenberg import HessMatrix, hessenberg_det
from tsallis_bernoulli.numeric import exp_lambda, log_lambda, product_form_exp
from tsallis_bernoulli.poly import LambdaPoly, XPoly, XYPoly, substitute_lambda
from tsallis_bernoulli.serialize import from_record, to_json
from tsallis_bernoulli.series import TruncSeries, series_div

F = Fraction
LAM = LambdaPoly.lam()
X = XPoly.x()
EPS = EpsilonTable.build(22)


def _classical_series_oracle(max_n):
    # t e^{tx} / (e^t - 1) with plain factorial coefficients
    from math import factorial

    num = TruncSeries([XPoly.monomial(n, F(1, factorial(n))) for n in range(max_n + 1)])
    den = TruncSeries([XPoly.const(F(1, factorial(k + 1))) for k in range(max_n + 1)])
    return series_div(num, den).egf_coefficients()


def test_c01_paper_table():
    with criterion(1, "paper table: bt_0..bt_4 by every route", max_seconds=1.0):
        for route in Route:
            polys = beta_family(4, route).polys
            assert list(polys) == PAPER_TABLE, route
        assert PAPER_TABLE[4].at_x(0) == -(1 - 20 * LAM**2 + 19 * LAM**4) / 30


def test_c02_route_equivalence():
    with criterion(2, "route equivalence n <= 20", max_seconds=30.0):
        fams = {route: beta_family(20, route).polys for route in Route}
        ref = fams[Route.RECURRENCE]
        assert len(ref) == 21
        for route, polys in fams.items():
            for n in range(21):
                assert polys[n] == ref[n], (route, n)


def test_c03_boundary_and_classical_limit():
    with criterion(3, "boundary and classical limit n <= 20"):
        fam = beta_family(20)
        series_oracle = _classical_series_oracle(20)
        for n in range(21):
            assert fam.polys[n].at_x(0) == fam.numbers[n]
            classical = substitute_lambda(fam.polys[n], 0)
            assert classical == series_oracle[n]
            assert classical == classical_bernoulli_poly(n)
        constants = {2: F(1, 6), 4: F(-1, 30), 6: F(1, 42), 8: F(-1, 30), 10: F(5, 66)}
        for n, value in constants.items():
            assert fam.polys[n].at_x(0)(0) == value


def test_c04_translation():
    with criterion(4, "translation identity, contraction and classical shift n <= 10"):
        fam = beta_family(10)
        for n in range(11):
            rhs = translation_rhs(n, EPS, fam.polys)
            assert rhs == translation_lhs(n, fam.polys)
            explicit = XPoly([EPS.minus[k] * fam.numbers[n - k] * comb(n, k) for k in range(n + 1)])
            assert rhs.contract() == explicit
            classical = [classical_bernoulli_poly(m) for m in range(n + 1)]
            shift = XYPoly.zero()
            for ell in range(n + 1):
                shift = shift + XYPoly.from_x(classical[n - ell]) * XYPoly.monomial(0, ell, comb(n, ell))
            assert rhs.at_lambda(0) == shift
            assert classical[n].compose_shift() == shift


def test_c05_lambda_appell():
    with criterion(5, "lambda-Appell suite n <= 20, monomial family n <= 10"):
        fam = beta_family(20)
        lx = XPoly.monomial(1, LAM)
        for n in range(21):
            d = fam.polys[n].diff()
            assert beta_tilde_derivative_series(n, fam.polys) == d
            if n >= 1:
                prev = fam.polys[n - 1]
                assert d == (prev - lx * prev.diff()) * n
                assert lambda_appell_reconstruct(n, fam.polys, fam.numbers) == fam.polys[n]
        assert lambda_appell_monomials(10) == [XPoly.monomial(n, EPS.minus[n]) for n in range(11)]


def test_c06_xn_expansion():
    with criterion(6, "x^n expansion n <= 12"):
        fam = beta_family(12)
        for n in range(13):
            assert xn_expansion(n, EPS, fam.polys) == XPoly.monomial(n, EPS.minus[n])


def test_c07_hessenberg_oracle():
    with criterion(7, "Hessenberg recurrence == Laplace on 100 random matrices"):
        rng = random.Random(2024)
        for _ in range(100):
            n = rng.randint(1, 6)
            rows = [
                [F(rng.randint(-9, 9), rng.randint(1, 7)) if ell >= j - 1 else F(0) for ell in range(n)]
                for j in range(n)
            ]
            assert hessenberg_det(HessMatrix(rows)) == laplace_det(rows)


def test_c08_bivariate():
    with criterion(8, "bivariate suite n <= 10, r in {1,2,3}", max_seconds=60.0):
        one_var = beta_family(10).polys
        for r in (1, 2, 3):
            fams = {route: bivariate_family(10, r, route).polys for route in BivariateRoute}
            rec = fams[BivariateRoute.RECURRENCE]
            for n in range(11):
                for route, polys in fams.items():
                    assert polys[n] == rec[n], (r, route, n)
                    assert polys[n].at_y_zero() == one_var[n]
                if n >= 1:
                    lhs, rhs = partial_x_check(n, r, rec)
                    assert lhs == rhs
                if n >= r:
                    lhs, rhs = partial_y_check(n, r, rec)
                    assert lhs == rhs


def test_c09_numeric():
    import math

    with criterion(9, "numeric: inversion, continuity, product form"):
        rng = random.Random(9)
        count = 0
        while count < 200:
            lam, X0 = rng.uniform(-1, 1), rng.uniform(-5, 5)
            if 1 + lam * X0 <= 1e-3:
                continue
            assert abs(log_lambda(exp_lambda(X0, lam), lam) - X0) <= 1e-10 * max(1.0, abs(X0))
            count += 1
        for k in range(-30, 31):
            X0 = k / 10
            for lam in (1e-7, -1e-7):
                assert abs(exp_lambda(X0, lam) - math.exp(X0)) <= 1e-5 * math.exp(X0)
        count = 0
        while count < 200:
            lam, t, x = rng.uniform(-1, 1), rng.uniform(-2, 2), rng.uniform(-2, 2)
            if abs(lam * t * x) > 0.5:
                continue
            closed = exp_lambda(t * x, lam)
            assert abs(product_form_exp(t, x, lam, 60) - closed) <= 1e-10 * abs(closed)
            count += 1


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "tsallis_bernoulli", *argv], capture_output=True, text=True)


def test_c10_cli_contract():
    with criterion(10, "CLI: JSON round trip, determinism, verify all --max-n 10 < 120 s"):
        fam = beta_family(6)
        out = _cli("compute", "--n", "6", "--route", "all", "--no-meta")
        assert out.returncode == 0
        doc = json.loads(out.stdout)
        for rec in doc["results"]:
            if "kind" in rec:
                p = from_record(rec)
                assert p == fam.polys[6]
                assert to_json(p) == rec["value"]
        out = _cli("numbers", "--max-n", "8", "--no-meta")
        for rec in json.loads(out.stdout)["results"]:
            assert to_json(from_record(rec)) == rec["value"]
        biv = bivariate_family(5, 2).polys[5]
        first = _cli("bivariate", "--n", "5", "--r", "2", "--no-meta")
        second = _cli("bivariate", "--n", "5", "--r", "2", "--no-meta")
        assert first.stdout == second.stdout
        assert from_record(json.loads(first.stdout)["results"][0]) == biv
        start = time.perf_counter()
        verify = _cli("verify", "all", "--max-n", "10")
        assert verify.returncode == 0, verify.stdout
        assert time.perf_counter() - start < 120
