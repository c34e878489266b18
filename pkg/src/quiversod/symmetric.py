"""Exact polynomial helpers for symmetric functions in several variable groups.

Polynomials are dicts ``{exponent tuple: coefficient}``.  Symmetric
polynomials in one group of ``n`` variables are written in the elementary
symmetric basis, i.e. as polynomials in ``e_1..e_n`` (exponent tuples of
length n, ``e_k`` of degree k).
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Poly = dict


def add_into(acc: Poly, p: Poly, scale=1) -> Poly:
    for m, c in p.items():
        v = acc.get(m, 0) + scale * c
        if v:
            acc[m] = v
        else:
            acc.pop(m, None)
    return acc


def mul(p: Poly, q: Poly, degree_of=None, max_degree: int | None = None) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            if max_degree is not None and degree_of(m) > max_degree:
                continue
            v = out.get(m, 0) + c1 * c2
            if v:
                out[m] = v
            else:
                del out[m]
    return out


def expand_linear_product(factors: Iterable[tuple[int, int]], nvars: int) -> Poly:
    """Expand prod (x_i - x_j) over the given index pairs (i, j)."""
    poly: Poly = {(0,) * nvars: 1}
    for i, j in factors:
        new: Poly = {}
        for m, c in poly.items():
            for idx, sgn in ((i, 1), (j, -1)):
                mm = list(m)
                mm[idx] += 1
                mm = tuple(mm)
                v = new.get(mm, 0) + sgn * c
                if v:
                    new[mm] = v
                else:
                    new.pop(mm, None)
        poly = new
    return poly


def alternant_partition(exps: Sequence[int]) -> tuple[int, tuple[int, ...]] | None:
    """a_alpha / a_delta = sign * s_lambda; returns (sign, lambda) or None when zero.

    a_delta is the Vandermonde prod_{r<s}(x_r - x_s).
    """
    n = len(exps)
    if len(set(exps)) != n:
        return None
    order = sorted(range(n), key=lambda r: -exps[r])
    inversions = sum(1 for x, y in itertools.combinations(order, 2) if x > y)
    lam = tuple(exps[r] - (n - 1 - pos) for pos, r in enumerate(order))
    return (-1 if inversions % 2 else 1), tuple(x for x in lam if x)


def _unit(n: int, k: int) -> tuple[int, ...]:
    return tuple(1 if j == k - 1 else 0 for j in range(n))


@lru_cache(maxsize=None)
def complete_in_e(n: int, k: int) -> tuple:
    """h_k in n variables as a polynomial in e_1..e_n (frozen item tuple)."""
    if k < 0:
        return ()
    if k == 0:
        return (((0,) * n, 1),)
    acc: Poly = {}
    for j in range(1, min(k, n) + 1):
        prev = dict(complete_in_e(n, k - j))
        ej = {_unit(n, j): (-1) ** (j - 1)}
        add_into(acc, mul(ej, prev))
    return tuple(acc.items())


@lru_cache(maxsize=None)
def schur_in_e(n: int, lam: tuple[int, ...]) -> tuple:
    """s_lambda(x_1..x_n) in the e-basis via Jacobi-Trudi det(h_{lambda_i - i + j})."""
    lam = tuple(x for x in lam if x)
    if len(lam) > n:
        return ()
    if not lam:
        return (((0,) * n, 1),)
    size = len(lam)
    acc: Poly = {}
    for perm in itertools.permutations(range(size)):
        inv = sum(1 for x, y in itertools.combinations(perm, 2) if x > y)
        term: Poly = {(0,) * n: -1 if inv % 2 else 1}
        for row, col in enumerate(perm):
            h = complete_in_e(n, lam[row] - row + col)
            if not h:
                term = {}
                break
            term = mul(term, dict(h))
        add_into(acc, term)
    return tuple(acc.items())


@lru_cache(maxsize=None)
def power_sums_in_e(n: int, upto: int) -> tuple:
    """(p_0, p_1, ..., p_upto) in n variables, each as an e-basis item tuple."""
    ps: list[Poly] = [{(0,) * n: n}]
    for k in range(1, upto + 1):
        acc: Poly = {}
        if k <= n:
            acc[_unit(n, k)] = (-1) ** (k - 1) * k
        for j in range(1, min(k - 1, n) + 1):
            add_into(acc, mul({_unit(n, j): (-1) ** (j - 1)}, ps[k - j]))
        ps.append(acc)
    return tuple(tuple(p.items()) for p in ps)


def todd_log_coefficients(upto: int) -> list[Fraction]:
    """Coefficients t_k of log(x / (1 - exp(-x))) = sum_k t_k x^k, k = 0..upto."""
    # (1 - e^{-x}) / x = sum_k (-1)^k x^k / (k+1)!
    g = [Fraction((-1) ** k, _fact(k + 1)) for k in range(upto + 1)]
    # log(x/(1-e^{-x})) = -log(g); log g via g'/g integrated
    dg = [(k + 1) * g[k + 1] for k in range(upto)]
    # q = g'/g as a power series
    q: list[Fraction] = []
    for k in range(upto):
        v = dg[k] - sum(q[j] * g[k - j] for j in range(k))
        q.append(v / g[0])
    logg = [Fraction(0)] + [q[k - 1] / k for k in range(1, upto + 1)]
    return [-x for x in logg]


def _fact(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


factorial = _fact
