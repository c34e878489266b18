"""Symmetric-function helpers and exact row reduction, against sympy."""

import itertools
import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from quiversod.linalg import RowEchelon, rank
from quiversod.symmetric import (
    alternant_partition,
    complete_in_e,
    expand_linear_product,
    power_sums_in_e,
    schur_in_e,
    todd_log_coefficients,
)


def _vars(n):
    return sympy.symbols(f"x1:{n + 1}")


def _e_poly(items, n):
    """Evaluate an e-basis polynomial as a sympy expression in x_1..x_n."""
    xs = _vars(n)
    es = [sympy.Integer(1)] + [
        sum(sympy.Mul(*c) for c in itertools.combinations(xs, k)) for k in range(1, n + 1)
    ]
    return sympy.expand(sum(sympy.Rational(c) * sympy.Mul(*[es[k + 1] ** m[k] for k in range(n)]) for m, c in dict(items).items()))


def _schur_bialternant(n, lam):
    xs = _vars(n)
    lam = list(lam) + [0] * (n - len(lam))
    num = sympy.Matrix(n, n, lambda i, j: xs[j] ** (lam[i] + n - 1 - i)).det()
    den = sympy.Matrix(n, n, lambda i, j: xs[j] ** (n - 1 - i)).det()
    return sympy.expand(sympy.cancel(num / den))


@pytest.mark.parametrize("n,lam", [(2, (1,)), (2, (2, 1)), (3, (2, 1)), (3, (3, 1, 1)), (3, (2, 2)), (4, (1, 1))])
def test_schur_against_bialternant(n, lam):
    assert sympy.expand(_e_poly(schur_in_e(n, lam), n) - _schur_bialternant(n, lam)) == 0


@pytest.mark.parametrize("n,k", [(1, 3), (2, 3), (3, 2), (3, 4)])
def test_complete_homogeneous(n, k):
    xs = _vars(n)
    h = sum(sympy.Mul(*c) for c in itertools.combinations_with_replacement(xs, k))
    assert sympy.expand(_e_poly(complete_in_e(n, k), n) - h) == 0


@pytest.mark.parametrize("n", [1, 2, 3])
def test_power_sums(n):
    xs = _vars(n)
    ps = power_sums_in_e(n, 5)
    for k in range(6):
        assert sympy.expand(_e_poly(ps[k], n) - sum(x ** k for x in xs)) == 0


def test_alternant_partition():
    assert alternant_partition((1, 0)) == (1, ())
    assert alternant_partition((0, 1)) == (-1, ())
    assert alternant_partition((1, 1)) is None
    assert alternant_partition((3, 0)) == (1, (2,))
    xs = _vars(3)
    den = sympy.Matrix(3, 3, lambda i, j: xs[j] ** (2 - i)).det()
    for exps in [(0, 3, 1), (4, 0, 2), (1, 5, 0), (2, 2, 0)]:
        num = sympy.Matrix(3, 3, lambda i, j: xs[j] ** exps[i]).det()
        res = alternant_partition(exps)
        expected = sympy.expand(sympy.cancel(num / den))
        if res is None:
            assert expected == 0
        else:
            sign, lam = res
            assert sympy.expand(expected - sign * _e_poly(schur_in_e(3, lam), 3)) == 0


def test_expand_linear_product():
    poly = expand_linear_product([(0, 1), (0, 2)], 3)
    x = _vars(3)
    expr = sum(c * sympy.Mul(*[x[i] ** m[i] for i in range(3)]) for m, c in poly.items())
    assert sympy.expand(expr - (x[0] - x[1]) * (x[0] - x[2])) == 0


def test_todd_log_coefficients():
    z = sympy.Symbol("z")
    series = sympy.series(sympy.log(z / (1 - sympy.exp(-z))), z, 0, 9).removeO()
    t = todd_log_coefficients(8)
    for k in range(9):
        assert Fraction(str(series.coeff(z, k))) == t[k]


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 10 ** 6))
def test_rank_against_sympy(nrows, ncols, seed):
    rng = random.Random(seed)
    M = [[rng.choice([0, 0, 1, -1, 2, Fraction(1, 3)]) for _ in range(ncols)] for _ in range(nrows)]
    rows = [{j: v for j, v in enumerate(r) if v} for r in M]
    assert rank(rows, ncols) == sympy.Matrix([[sympy.Rational(str(v)) for v in r] for r in M]).rank()


def test_row_echelon_reduce_and_free_columns():
    E = RowEchelon(3)
    E.add({0: Fraction(1), 1: Fraction(1)})
    E.add({1: Fraction(1), 2: Fraction(1)})
    assert len(E.free_columns()) == 1
    rem = E.reduce({0: Fraction(1)})
    assert set(rem) <= set(E.free_columns())
