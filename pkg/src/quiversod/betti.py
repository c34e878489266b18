"""Poincare polynomials of quiver moduli through the Harder-Narasimhan recursion.

The stack of all representations of dimension e has motive
``g_e = q^{-<e,e>} / prod_i prod_{k=1}^{e_i} (1 - q^{-k})``.  Stratifying by HN
type gives ``g_e = sum_types q^{-sum_{k<l} <e^l, e^k>} prod_k a_{e^k}``, which
is solved for the semistable series ``a_e``.  For coprime ``d`` the moduli
space has motive ``(q - 1) a_d``; cohomology is algebraic, so its
coefficients are the diagonal Hodge numbers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import sympy

from .core import Moduli, Quiver, QuiverError, Vector, euler_form, slope, subdimension_vectors

_q = sympy.Symbol("q")


@dataclass(frozen=True)
class PoincarePolynomial:
    """Coefficients b_0..b_D with b_k = h^{k,k}."""

    coefficients: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    def __len__(self) -> int:
        return len(self.coefficients)


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def _stack_series(Q: Quiver, e: Vector):
    den = sympy.Integer(1)
    for ei in e:
        for k in range(1, ei + 1):
            den *= 1 - _q ** (-k)
    return _q ** (-euler_form(Q, e, e)) / den


def semistable_series(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> dict[Vector, sympy.Expr]:
    """The series a_e for every 0 < e <= d, as cancelled rational functions of q."""
    d = tuple(d)
    theta = tuple(theta)
    a: dict[Vector, sympy.Expr] = {}

    @lru_cache(maxsize=None)
    def tail(e: Vector, bound: Fraction | None) -> sympy.Expr:
        # sum over HN types of e whose slopes are all < bound
        if not any(e):
            return sympy.Integer(1)
        total = sympy.Integer(0)
        for first in subdimension_vectors(e):
            if not any(first):
                continue
            mu = slope(theta, first)
            if bound is not None and mu >= bound:
                continue
            if first == e:
                total += a[e]
                continue
            rest = _sub(e, first)
            total += _q ** (-euler_form(Q, rest, first)) * a[first] * tail(rest, mu)
        return total

    order = sorted((e for e in subdimension_vectors(d) if any(e)), key=sum)
    for e in order:
        unstable = sympy.Integer(0)
        for first in subdimension_vectors(e):
            if not any(first) or first == e:
                continue
            mu = slope(theta, first)
            rest = _sub(e, first)
            unstable += _q ** (-euler_form(Q, rest, first)) * a[first] * tail(rest, mu)
        a[e] = sympy.cancel(sympy.together(_stack_series(Q, e) - unstable))
    return a


def _moduli_of(Q: Quiver, d, theta) -> Moduli:
    moduli = Moduli(Q, tuple(d), tuple(theta) if theta is not None else None)
    moduli.require_assumptions()
    return moduli


def poincare_polynomial(Q: Quiver, d: Sequence[int], theta: Sequence[int] | None = None) -> PoincarePolynomial:
    """Diagonal Hodge numbers b_0..b_D of the moduli space."""
    moduli = _moduli_of(Q, d, theta)
    a = semistable_series(Q, moduli.d, moduli.theta)
    motive = sympy.cancel((_q - 1) * a[moduli.d])
    num, den = sympy.fraction(motive)
    num_poly = sympy.Poly(sympy.expand(num), _q)
    den_poly = sympy.Poly(sympy.expand(den), _q)
    if len(den_poly.terms()) != 1:
        raise QuiverError(f"the motive of the moduli space is not a Laurent polynomial: {motive}")
    coeffs = num_poly.all_coeffs()[::-1]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    # strip trailing zeros already handled by Poly; normalise orientation
    if coeffs and coeffs[0] != 1 and coeffs[-1] == 1:
        coeffs = coeffs[::-1]
    coeffs = [int(c) for c in coeffs]
    if coeffs[0] != 1 or len(coeffs) - 1 != moduli.dimension:
        raise QuiverError(f"Poincare polynomial {coeffs} does not have degree {moduli.dimension} and b_0 = 1")
    if any(c < 0 for c in coeffs):
        raise QuiverError(f"negative Betti number in {coeffs}")
    return PoincarePolynomial(tuple(coeffs))


def hochschild_zero(Q: Quiver, d: Sequence[int], theta: Sequence[int] | None = None) -> int:
    """dim HH_0 = sum of the Hodge numbers, all of which sit on the diagonal."""
    return poincare_polynomial(Q, d, theta).total


def picard_rank(Q: Quiver, d: Sequence[int], theta: Sequence[int] | None = None) -> int:
    P = poincare_polynomial(Q, d, theta)
    if P.degree < 1:
        raise QuiverError("Picard rank is undefined for a point")
    return P[1]
