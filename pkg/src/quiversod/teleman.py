"""One-parameter-subgroup weights on HN strata and the Teleman quantization test."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Sequence

from .bundles import BundleExpression
from .core import Moduli, Quiver, QuiverError, Vector, dot, euler_form
from .hn import HNType, nontrivial_hn_types


class WeightMultiset(Mapping):
    """Weights with positive multiplicities; integer weights are stored as int."""

    def __init__(self, weights: Mapping | Iterable = ()):
        counts: Counter = Counter()
        items = weights.items() if isinstance(weights, Mapping) else ((w, 1) for w in weights)
        for w, mult in items:
            w = Fraction(w)
            key = w.numerator if w.denominator == 1 else w
            counts[key] += mult
        self._counts = {w: m for w, m in counts.items() if m > 0}

    def __getitem__(self, w):
        return self._counts[w]

    def __iter__(self):
        return iter(sorted(self._counts))

    def __len__(self):
        return len(self._counts)

    def __eq__(self, other):
        if isinstance(other, WeightMultiset):
            return self._counts == other._counts
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._counts.items()))

    def __repr__(self):
        return f"WeightMultiset({dict(sorted(self._counts.items()))})"

    def support(self) -> list:
        return sorted(self._counts)

    @property
    def total(self) -> int:
        return sum(self._counts.values())

    def max(self):
        return max(self._counts)

    def negated(self) -> "WeightMultiset":
        return WeightMultiset({-w: m for w, m in self._counts.items()})

    def shifted(self, x) -> "WeightMultiset":
        return WeightMultiset({w + x: m for w, m in self._counts.items()})

    def scaled(self, x) -> "WeightMultiset":
        return WeightMultiset({w * x: m for w, m in self._counts.items()})

    def tensor(self, other: "WeightMultiset") -> "WeightMultiset":
        out: Counter = Counter()
        for w, m in self._counts.items():
            for v, n in other._counts.items():
                out[w + v] += m * n
        return WeightMultiset(out)


@dataclass(frozen=True)
class StratumWeights:
    hn_type: HNType
    c: int
    k: tuple[int, ...]

    @property
    def parts(self) -> tuple[Vector, ...]:
        return self.hn_type.parts

    def weighted_sum(self) -> tuple[int, ...]:
        """sum_n k_n d^n as a vector."""
        n = len(self.parts[0])
        return tuple(sum(k * p[i] for k, p in zip(self.k, self.parts)) for i in range(n))

    def rescaled(self, lam: int) -> "StratumWeights":
        return StratumWeights(self.hn_type, self.c * lam, tuple(lam * x for x in self.k))


def stratum_weights(hn_type: HNType, theta: Sequence[int]) -> StratumWeights:
    slopes = hn_type.slopes(theta)
    c = reduce(math.lcm, (s.denominator for s in slopes), 1)
    return StratumWeights(hn_type, c, tuple(int(s * c) for s in slopes))


def weights_universal(sw: StratumWeights, i: int, a: Sequence[int]) -> WeightMultiset:
    """Weights of U_i(a): k_m - sum_n (a . d^n) k_n with multiplicity d^m_i."""
    offset = sum(dot(a, p) * k for p, k in zip(sw.parts, sw.k))
    return WeightMultiset({k - offset: p[i - 1] for p, k in zip(sw.parts, sw.k) if p[i - 1]})


def weights_hom(sw: StratumWeights, i: int, j: int) -> WeightMultiset:
    """Weights of U_i^dual (x) U_j; independent of the linearisation."""
    out: Counter = Counter()
    for pm, km in zip(sw.parts, sw.k):
        for pn, kn in zip(sw.parts, sw.k):
            mult = pm[j - 1] * pn[i - 1]
            if mult:
                out[km - kn] += mult
    return WeightMultiset(out)


def weight_linearised(sw: StratumWeights, e: Sequence) -> Fraction | int:
    w = -dot([Fraction(x) for x in e], sw.weighted_sum())
    return w.numerator if w.denominator == 1 else w


def weights_expression(sw: StratumWeights, F: BundleExpression) -> WeightMultiset:
    """Weights of a tensor word: one weight per factor, summed."""
    n = len(sw.parts[0])
    result = WeightMultiset({weight_linearised(sw, F.twist_vector(n)): 1})
    for i, is_dual in F.factors:
        if F.linearisation is None:
            raise QuiverError(f"{F} has universal factors but no linearisation")
        w = weights_universal(sw, i, F.linearisation)
        result = result.tensor(w.negated() if is_dual else w)
    return result


def eta_bound(sw: StratumWeights, Q: Quiver) -> int:
    """sum_{s<t} (k_t - k_s) <d^s, d^t>."""
    parts, k = sw.parts, sw.k
    return sum(
        (k[t] - k[s]) * euler_form(Q, parts[s], parts[t])
        for s in range(len(parts))
        for t in range(s + 1, len(parts))
    )


@dataclass(frozen=True)
class StratumCheck:
    hn_type: HNType
    max_weight: Fraction
    eta: Fraction
    satisfied: bool

    @property
    def margin(self) -> Fraction:
        return self.eta - self.max_weight


@dataclass(frozen=True)
class TelemanReport:
    bundle: BundleExpression
    strata: tuple[StratumCheck, ...]

    @property
    def satisfied(self) -> bool:
        return all(s.satisfied for s in self.strata)

    def failing(self) -> list[StratumCheck]:
        return [s for s in self.strata if not s.satisfied]


def strata(moduli: Moduli) -> list[StratumWeights]:
    """StratumWeights of every nontrivial HN type, in the hn_types order."""
    return [stratum_weights(t, moduli.theta) for t in nontrivial_hn_types(moduli.quiver, moduli.d, moduli.theta)]


def teleman_report(moduli: Moduli, F: BundleExpression, strata_: Sequence[StratumWeights] | None = None) -> TelemanReport:
    """Check max W(F, d*) < eta on every unstable stratum.

    A satisfied report certifies H^k(M, F) = 0 for k >= 1.
    """
    if not F.descends(moduli.d):
        raise QuiverError(f"{F.describe(moduli)} does not descend: twist . d != 0")
    if strata_ is None:
        strata_ = strata(moduli)
    checks = []
    for sw in strata_:
        mw = weights_expression(sw, F).max()
        eta = eta_bound(sw, moduli.quiver)
        checks.append(StratumCheck(sw.hn_type, Fraction(mw), Fraction(eta), mw < eta))
    return TelemanReport(F, tuple(checks))


def t_star(Q: Quiver, d: Sequence[int]) -> tuple[dict[HNType, int], int]:
    """Per-type largest t with k_1 - k_l + (t/r) theta_can . sum_s k_s d^s < eta, and the minimum."""
    moduli = Moduli(Q, tuple(d))
    moduli.require_assumptions()
    r = moduli.index
    values: dict[HNType, int] = {}
    for sw in strata(moduli):
        slope_term = dot(moduli.theta_can, sw.weighted_sum())
        if slope_term <= 0:
            raise QuiverError(f"H has nonnegative weight on {sw.hn_type}")
        gap = Fraction(eta_bound(sw, Q) - (sw.k[0] - sw.k[-1])) * r / slope_term
        values[sw.hn_type] = math.ceil(gap) - 1
    if not values:
        raise QuiverError("no unstable strata; t_star is undefined")
    return values, min(values.values())


def theorem_d_criterion(Q: Quiver, d: Sequence[int]) -> bool:
    """min t_star == r - 1, the sufficient condition for the U-only decomposition."""
    moduli = Moduli(Q, tuple(d))
    _, tmin = t_star(Q, d)
    return tmin == moduli.index - 1
