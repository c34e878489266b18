"""Tautological presentation of the Chow ring, Chern characters and Riemann-Roch.

Generators are the Chern classes ``xi_{i,k} = c_k(U_i)`` (``1 <= k <= d_i``)
of the universal bundles for a fixed linearisation ``a``.  The relations are

* the linear relation ``sum_i a_i xi_{i,1} = 0``;
* for every forbidden subdimension vector ``e`` (``0 < e < d`` with
  ``theta . e > 0``) the antisymmetrisations of ``b * delta_e``, where
  ``delta_e = prod_arrows prod_{r <= e_s} prod_{s > e_t} (x_{t,s} - x_{s,r})``
  and ``b`` runs over an Artin basis of the Chern-root polynomial ring as a
  module over the symmetric polynomials.

Antisymmetrisation divided by the Vandermonde is evaluated term by term: each
monomial becomes a signed product of Schur polynomials, which are rewritten
in the ``xi`` through Jacobi-Trudi.  Everything is exact over the rationals.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .bundles import BundleExpression
from .core import Moduli, Quiver, QuiverError, Vector, dot, subdimension_vectors
from .linalg import RowEchelon
from .symmetric import (
    add_into,
    alternant_partition,
    expand_linear_product,
    factorial,
    power_sums_in_e,
    schur_in_e,
    todd_log_coefficients,
)


class PresentationError(QuiverError):
    pass


def forbidden_subdimensions(d: Sequence[int], theta: Sequence[int]) -> list[Vector]:
    return [e for e in subdimension_vectors(d, proper=True) if dot(theta, e) > 0]


def _monomials(weights: tuple[int, ...], degree: int) -> list[tuple[int, ...]]:
    """All exponent vectors of the given weighted degree, in a fixed order."""
    out: list[tuple[int, ...]] = []

    def rec(pos: int, left: int, acc: list[int]):
        if pos == len(weights) - 1:
            w = weights[pos]
            if left % w == 0:
                out.append(tuple(acc + [left // w]))
            return
        for c in range(left // weights[pos], -1, -1):
            rec(pos + 1, left - c * weights[pos], acc + [c])

    if not weights:
        return [()] if degree == 0 else []
    rec(0, degree, [])
    return out


class Presentation:
    """Graded quotient ring Q[xi] / I truncated at the moduli dimension."""

    def __init__(self, moduli: Moduli, a: Sequence[int]):
        moduli.require_assumptions()
        self.moduli = moduli
        self.a = moduli.check_linearisation(a)
        d = moduli.d
        self.D = moduli.dimension
        # variable j <-> (vertex i, k); weights = k
        self.variables: list[tuple[int, int]] = [(i, k) for i in range(1, moduli.n + 1) for k in range(1, d[i - 1] + 1)]
        self.weights = tuple(k for _, k in self.variables)
        self.offsets = {}
        pos = 0
        for i in range(1, moduli.n + 1):
            self.offsets[i] = pos
            pos += d[i - 1]
        self.monomials = [_monomials(self.weights, n) for n in range(self.D + 1)]
        self.index = [{m: j for j, m in enumerate(ms)} for ms in self.monomials]
        self.ideal = [RowEchelon(len(ms)) for ms in self.monomials]
        self._build()
        self.basis = [[self.monomials[n][c] for c in self.ideal[n].free_columns()] for n in range(self.D + 1)]
        self.basis_index = [{m: j for j, m in enumerate(b)} for b in self.basis]
        sizes = self.basis_sizes
        if sizes[0] != 1 or sizes[self.D] != 1:
            raise PresentationError(f"graded pieces in degrees 0 and D must be 1-dimensional, got {sizes}")
        self._nf_cache: dict[tuple[int, ...], dict[int, Fraction]] = {}
        self.degree_scalar = Fraction(1)
        td = self._todd = self.todd_class()
        top = td.coefficient_top()
        if top == 0:
            raise PresentationError("the Todd class has vanishing top degree")
        self.degree_scalar = 1 / top

    # -- construction -------------------------------------------------

    def _degree(self, m: tuple[int, ...]) -> int:
        return sum(c * w for c, w in zip(m, self.weights))

    def _row(self, poly: dict) -> tuple[int, dict[int, Fraction]] | None:
        if not poly:
            return None
        degs = {self._degree(m) for m in poly}
        if len(degs) != 1:
            raise PresentationError("relation is not homogeneous")
        n = degs.pop()
        idx = self.index[n]
        return n, {idx[m]: Fraction(c) for m, c in poly.items()}

    def _build(self) -> None:
        gens: list[list[dict[int, Fraction]]] = [[] for _ in range(self.D + 1)]
        lin = {}
        for i, ai in enumerate(self.a, start=1):
            if ai and self.moduli.d[i - 1] >= 1:
                m = [0] * len(self.variables)
                m[self.offsets[i]] = 1
                lin[tuple(m)] = ai
        if self.D >= 1 and lin:
            row = self._row(lin)
            gens[1].append(row[1])
        for e in forbidden_subdimensions(self.moduli.d, self.moduli.theta):
            for poly in self._tautological(e):
                row = self._row(poly)
                if row is not None:
                    gens[row[0]].append(row[1])
        for n in range(self.D + 1):
            ech = self.ideal[n]
            ech.extend(gens[n])
            # multiply lower ideal pieces by each generator variable
            for j, w in enumerate(self.weights):
                if w > n:
                    continue
                lower = self.ideal[n - w]
                src = self.monomials[n - w]
                idx = self.index[n]
                for row in list(lower.pivots.values()):
                    shifted = {}
                    for c, v in row.items():
                        m = list(src[c])
                        m[j] += 1
                        shifted[idx[tuple(m)]] = v
                    ech.add(shifted)

    def _tautological(self, e: Vector):
        """Generators rho(b * delta_e) of total degree at most D."""
        Q, d = self.moduli.quiver, self.moduli.d
        n = self.moduli.n
        nroots = sum(d)
        root = lambda i, r: self.offsets[i] + r - 1  # noqa: E731  (r is 1-based)
        pairs = []
        for s, t in Q.arrows:
            for r in range(1, e[s - 1] + 1):
                for u in range(e[t - 1] + 1, d[t - 1] + 1):
                    pairs.append((root(t, u), root(s, r)))
        shift = sum(math.comb(x, 2) for x in d)
        base = len(pairs) - shift
        if base > self.D:
            return
        delta = expand_linear_product(pairs, nroots)
        groups = [(self.offsets[i], d[i - 1]) for i in range(1, n + 1)]
        artin_groups = [
            list(itertools.product(*[range(r + 1) for r in range(dim)])) if dim else [()]
            for _, dim in groups
        ]
        for b in itertools.product(*artin_groups):
            bdeg = sum(sum(x) for x in b)
            if base + bdeg > self.D:
                continue
            flat = [x for part in b for x in part]
            schur_terms: dict[tuple, int] = {}
            for m, c in delta.items():
                key = []
                sign = c
                for (off, dim) in groups:
                    exps = tuple(m[off + r] + flat[off + r] for r in range(dim))
                    res = _alternant(exps)
                    if res is None:
                        sign = 0
                        break
                    sign *= res[0]
                    key.append(res[1])
                if sign:
                    key = tuple(key)
                    v = schur_terms.get(key, 0) + sign
                    if v:
                        schur_terms[key] = v
                    else:
                        del schur_terms[key]
            poly: dict = {}
            for lams, c in schur_terms.items():
                add_into(poly, self._schur_product(lams), c)
            if poly:
                yield poly

    @lru_cache(maxsize=None)
    def _schur_product(self, lams: tuple) -> dict:
        out: dict = {(): 1}
        for i, lam in enumerate(lams, start=1):
            s = schur_in_e(self.moduli.d[i - 1], lam)
            new = {}
            for m1, c1 in out.items():
                for m2, c2 in s:
                    m = m1 + m2
                    new[m] = new.get(m, 0) + c1 * c2
            out = {m: c for m, c in new.items() if c}
        return out

    # -- normal forms ----------------------------------------------------

    @property
    def basis_sizes(self) -> list[int]:
        return [len(b) for b in self.basis]

    def normal_form_monomial(self, m: tuple[int, ...]) -> dict[int, Fraction]:
        """Coordinates of a monomial in the graded basis of its degree."""
        if m not in self._nf_cache:
            n = self._degree(m)
            if n > self.D:
                self._nf_cache[m] = {}
            else:
                rem = self.ideal[n].reduce({self.index[n][m]: Fraction(1)})
                mons = self.monomials[n]
                bidx = self.basis_index[n]
                self._nf_cache[m] = {bidx[mons[c]]: v for c, v in rem.items()}
        return self._nf_cache[m]

    def class_of(self, poly: dict) -> "ChowClass":
        parts = [dict() for _ in range(self.D + 1)]
        for m, c in poly.items():
            n = self._degree(m)
            if n > self.D:
                continue
            add_into(parts[n], self.normal_form_monomial(m), Fraction(c))
        return ChowClass(self, tuple(_freeze(p) for p in parts))

    def zero(self) -> "ChowClass":
        return ChowClass(self, tuple(() for _ in range(self.D + 1)))

    def one(self) -> "ChowClass":
        return self.class_of({(0,) * len(self.variables): 1})

    def xi(self, i: int, k: int) -> "ChowClass":
        m = [0] * len(self.variables)
        m[self.offsets[i] + k - 1] = 1
        return self.class_of({tuple(m): 1})

    def _group_poly(self, i: int, items) -> dict:
        """Embed an e-basis polynomial of vertex i into the full variable set."""
        off, dim = self.offsets[i], self.moduli.d[i - 1]
        out = {}
        for m, c in items:
            full = [0] * len(self.variables)
            full[off:off + dim] = m
            out[tuple(full)] = c
        return out

    # -- characteristic classes -----------------------------------------

    def c1_line(self, e: Sequence) -> "ChowClass":
        """c1(L(e)) = -sum_i e_i xi_{i,1}."""
        out = self.zero()
        for i, ei in enumerate(e, start=1):
            if ei and self.moduli.d[i - 1]:
                out = out + self.xi(i, 1) * Fraction(-Fraction(ei))
        return out

    def ch_universal(self, i: int, dual: bool = False) -> "ChowClass":
        dim = self.moduli.d[i - 1]
        ps = power_sums_in_e(dim, self.D)
        poly: dict = {}
        for k in range(self.D + 1):
            coef = Fraction((-1) ** k if dual else 1, factorial(k))
            add_into(poly, self._group_poly(i, ps[k]), coef)
        return self.class_of(poly)

    def chern_character(self, F: BundleExpression) -> "ChowClass":
        if F.factors and F.linearisation is not None and tuple(F.linearisation) != self.a:
            raise QuiverError(f"bundle linearisation {F.linearisation} differs from the presentation's {self.a}")
        out = self.c1_line(F.twist_vector(self.moduli.n)).exp()
        for i, dual in F.factors:
            out = out * self.ch_universal(i, dual)
        return out

    def canonical_class(self) -> "ChowClass":
        """c1(omega) = sum_i theta_can_i xi_{i,1}."""
        out = self.zero()
        for i, t in enumerate(self.moduli.theta_can, start=1):
            if t and self.moduli.d[i - 1]:
                out = out + self.xi(i, 1) * t
        return out

    def h_class(self) -> "ChowClass":
        return self.canonical_class() * Fraction(-1, self.moduli.index)

    def tangent_ch(self) -> "ChowClass":
        n = self.moduli.n
        ch = [self.ch_universal(i) for i in range(1, n + 1)]
        chd = [self.ch_universal(i, True) for i in range(1, n + 1)]
        out = self.one()
        for i in range(n):
            out = out - chd[i] * ch[i]
        for s, t in self.moduli.quiver.arrows:
            out = out + chd[s - 1] * ch[t - 1]
        return out

    def todd_class(self) -> "ChowClass":
        chT = self.tangent_ch()
        t = todd_log_coefficients(self.D)
        log_td = self.zero()
        for k in range(1, self.D + 1):
            if t[k]:
                log_td = log_td + chT.homogeneous(k) * (t[k] * factorial(k))
        return log_td.exp()

    # -- integration -------------------------------------------------------

    def degree(self, cls: "ChowClass") -> Fraction:
        return cls.coefficient_top() * self.degree_scalar

    def euler_characteristic(self, F: BundleExpression) -> int:
        if not F.descends(self.moduli.d):
            raise QuiverError(f"{F.describe(self.moduli)} does not descend to the moduli space")
        chi = self.degree(self.chern_character(F) * self.todd)
        if chi.denominator != 1:
            raise PresentationError(f"non-integral Euler characteristic {chi} for {F.describe(self.moduli)}")
        return int(chi)

    @property
    def todd(self) -> "ChowClass":
        if not hasattr(self, "_todd"):
            self._todd = self.todd_class()
        return self._todd

    def intersection_number(self, classes: Sequence["ChowClass"]) -> Fraction:
        prod = self.one()
        total = 0
        for c in classes:
            degs = c.degrees()
            if len(degs) > 1:
                raise QuiverError("intersection_number needs homogeneous classes")
            total += degs[0] if degs else 0
            prod = prod * c
        if any(c.degrees() for c in classes) and total != self.D:
            raise QuiverError(f"classes have total degree {total}, expected {self.D}")
        return self.degree(prod)


def _alternant(exps):
    return _alternant_cached(tuple(exps))


@lru_cache(maxsize=None)
def _alternant_cached(exps):
    return alternant_partition(exps)


def _freeze(p: dict) -> tuple:
    return tuple(sorted((k, v) for k, v in p.items() if v))


@dataclass(frozen=True)
class ChowClass:
    """A class as coordinates in the graded basis, one tuple per degree."""

    presentation: Presentation = field(repr=False, compare=False)
    parts: tuple

    def _parts(self):
        return [dict(p) for p in self.parts]

    def __add__(self, other: "ChowClass") -> "ChowClass":
        out = self._parts()
        for n, p in enumerate(other.parts):
            add_into(out[n], dict(p))
        return ChowClass(self.presentation, tuple(_freeze(p) for p in out))

    def __neg__(self) -> "ChowClass":
        return self * -1

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other) -> "ChowClass":
        P = self.presentation
        if not isinstance(other, ChowClass):
            x = Fraction(other)
            return ChowClass(P, tuple(tuple((k, v * x) for k, v in p if v * x) for p in self.parts))
        out = [dict() for _ in range(P.D + 1)]
        for n1, p1 in enumerate(self.parts):
            if not p1:
                continue
            for n2, p2 in enumerate(other.parts):
                if not p2 or n1 + n2 > P.D:
                    continue
                for j1, c1 in p1:
                    m1 = P.basis[n1][j1]
                    for j2, c2 in p2:
                        m2 = P.basis[n2][j2]
                        m = tuple(x + y for x, y in zip(m1, m2))
                        add_into(out[n1 + n2], P.normal_form_monomial(m), c1 * c2)
        return ChowClass(P, tuple(_freeze(p) for p in out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ChowClass":
        out = self.presentation.one()
        for _ in range(k):
            out = out * self
        return out

    def homogeneous(self, n: int) -> "ChowClass":
        return ChowClass(self.presentation, tuple(p if k == n else () for k, p in enumerate(self.parts)))

    def degrees(self) -> list[int]:
        return [n for n, p in enumerate(self.parts) if p]

    def rank(self) -> Fraction:
        return dict(self.parts[0]).get(0, Fraction(0))

    def coefficient_top(self) -> Fraction:
        return Fraction(dict(self.parts[self.presentation.D]).get(0, 0))

    def is_zero(self) -> bool:
        return not any(self.parts)

    def exp(self) -> "ChowClass":
        """exp of a class; the degree-0 part must vanish."""
        if self.parts[0]:
            raise QuiverError("exp needs a class without degree-0 part")
        P = self.presentation
        out = P.one()
        power = P.one()
        for k in range(1, P.D + 1):
            power = power * self
            if power.is_zero():
                break
            out = out + power * Fraction(1, factorial(k))
        return out


def build_presentation(Q: Quiver, d: Sequence[int], theta: Sequence[int] | None, a: Sequence[int]) -> Presentation:
    return Presentation(Moduli(Q, tuple(d), tuple(theta) if theta is not None else None), a)


def chern_character(P: Presentation, F: BundleExpression) -> ChowClass:
    return P.chern_character(F)


def canonical_class(P: Presentation) -> ChowClass:
    return P.canonical_class()


def todd_class(P: Presentation) -> ChowClass:
    return P.todd


def euler_characteristic(P: Presentation, F: BundleExpression) -> int:
    return P.euler_characteristic(F)


def intersection_number(P: Presentation, classes: Sequence[ChowClass]) -> Fraction:
    return P.intersection_number(classes)
