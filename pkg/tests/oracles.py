"""Test-only oracles and hypothesis strategies."""
from fractions import Fraction
from itertools import permutations

from hypothesis import strategies as st

from tsallis_bernoulli.poly import LambdaPoly, XPoly, XYPoly

small_rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)

lambda_polys = st.lists(small_rationals, max_size=4).map(LambdaPoly)
x_polys = st.lists(lambda_polys, max_size=4).map(XPoly)
xy_polys = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), lambda_polys, max_size=5
).map(XYPoly)


def laplace_det(rows):
    """Determinant by cofactor expansion along the first row (test oracle only)."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if not rows[0][j]:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = rows[0][j] * laplace_det(minor)
        total = total - term if j % 2 else total + term
    return total


def leibniz_det(rows):
    """Permutation-sum determinant; only for tiny matrices."""
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        prod = 1
        for i in range(n):
            prod = prod * rows[i][perm[i]]
        total = total + sign * prod
    return total
