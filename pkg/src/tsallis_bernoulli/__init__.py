"""Exact Tsallis-deformed Bernoulli polynomials.

The deformed polynomials ``bt_n(lambda|x)`` are generated by
``t*exp_lambda(t*x) / (exp_lambda(t) - 1)`` where
``exp_lambda(X) = (1 + lambda*X)**(1/lambda)``.
"""
from .bernoulli import (
    BetaFamily,
    Route,
    beta_family,
    beta_tilde,
    beta_tilde_explicit,
    beta_tilde_recurrence,
    beta_tilde_series,
    degenerate_bernoulli_numbers,
)
from .bivariate import beta_r_connection, beta_r_double_sum, beta_r_recurrence, bivariate_family
from .epsilon import EpsilonTable, epsilon
from .hessenberg import HessMatrix, beta_tilde_determinant, build_D_matrix, hessenberg_det
from .poly import LambdaPoly, XPoly, XYPoly, poly_eval, substitute_lambda

__version__ = "0.1.0"

__all__ = [
    "BetaFamily",
    "EpsilonTable",
    "HessMatrix",
    "LambdaPoly",
    "Route",
    "XPoly",
    "XYPoly",
    "beta_family",
    "beta_r_connection",
    "beta_r_double_sum",
    "beta_r_recurrence",
    "beta_tilde",
    "beta_tilde_determinant",
    "beta_tilde_explicit",
    "beta_tilde_recurrence",
    "beta_tilde_series",
    "bivariate_family",
    "build_D_matrix",
    "degenerate_bernoulli_numbers",
    "epsilon",
    "hessenberg_det",
    "poly_eval",
    "substitute_lambda",
]
