"""Vanishing verdicts for bundle cohomology and the exceptional-collection questions.

A verdict combines three sources of evidence, always applied in this order:

``TelemanDirect``
    the quantization inequality holds for F, so ``H^k(F) = 0`` for k >= 1;
``TelemanInvariants``
    the inequality holds for F, so ``H^0(M, F)`` equals the invariants of
    ``k[R] (x) F``; if no monomial of ``k[R]`` has the opposite central
    character to F, these invariants vanish.  Also applied to the Serre partner;
``SerrePartner``
    the inequality holds for ``F' = F^dual (x) K``, so
    ``H^k(F) = H^{D-k}(F')^dual = 0`` for ``k <= D - 1``;
``ChiZero`` / ``ChiNonzero``
    when all groups but one are known to vanish, the Euler characteristic
    from Riemann-Roch decides the remaining one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .betti import hochschild_zero
from .bundles import OH, BundleExpression, U, Udual, serre_partner, structure_sheaf
from .core import Moduli, Quiver, QuiverError, Vector
from .teleman import strata, t_star, teleman_report


class Status(str, enum.Enum):
    VANISHES = "Vanishes"
    NONZERO = "Nonzero"
    INCONCLUSIVE = "Inconclusive"


class Answer(str, enum.Enum):
    POSITIVE = "Positive"
    NEGATIVE = "Negative"
    INCONCLUSIVE = "Inconclusive"


RANGES = ("H0", "H>=1", "all")


@dataclass(frozen=True)
class Evidence:
    rule: str
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.rule}({self.detail})" if self.detail else self.rule


@dataclass(frozen=True)
class VanishingVerdict:
    bundle: BundleExpression
    label: str
    degree_ranges: dict
    evidence: tuple[Evidence, ...]
    chi: int | None = None

    @property
    def h0(self) -> Status:
        return self.degree_ranges["H0"]

    @property
    def higher(self) -> Status:
        return self.degree_ranges["H>=1"]

    @property
    def all(self) -> Status:
        return self.degree_ranges["all"]


def _combine(*statuses: Status) -> Status:
    if all(s is Status.VANISHES for s in statuses):
        return Status.VANISHES
    if any(s is Status.NONZERO for s in statuses):
        return Status.NONZERO
    return Status.INCONCLUSIVE


# -- central characters -------------------------------------------------------


def central_character(F: BundleExpression, moduli: Moduli) -> tuple[Fraction, ...] | None:
    """Weights of the centre prod_i C^* of GL_d on the fibre of F.

    U_i(a) is V_i (x) det^{-a}, and L(e) is det^{-e}.  Returns None when F has
    universal factors without a linearisation.
    """
    n, d = moduli.n, moduli.d
    w = [Fraction(0)] * n
    tw = F.twist_vector(n)
    for j in range(n):
        w[j] -= tw[j] * d[j]
    for i, dual in F.factors:
        a = F.linearisation
        if a is None:
            return None
        sign = -1 if dual else 1
        w[i - 1] += sign
        for j in range(n):
            w[j] -= sign * a[j] * d[j]
    return tuple(w)


def admits_invariant_monomials(Q: Quiver, w: Sequence[Fraction]) -> bool | None:
    """Whether some monomial in the coordinates of R has central character -w.

    A coordinate of an arrow s -> t has character e_s - e_t.  Returns None if
    w is not integral (no conclusion is drawn then).
    """
    if any(Fraction(x).denominator != 1 for x in w):
        return None
    target = tuple(-int(x) for x in w)
    if sum(target) != 0:
        return False
    n = Q.vertex_count
    # depth potential: phi(t) >= phi(s) + 1 along arrows, so sum n_a <= -phi . target
    order = Q.topological_order()
    depth = {v: 0 for v in range(1, n + 1)}
    for v in order:
        for s, t in Q.arrows:
            if s == v:
                depth[t] = max(depth[t], depth[s] + 1)
    bound = -sum(depth[v] * target[v - 1] for v in range(1, n + 1))
    if bound < 0:
        return False
    vectors = sorted({(s, t) for s, t in Q.arrows})

    @lru_cache(maxsize=None)
    def feasible(idx: int, rest: tuple[int, ...], budget: int) -> bool:
        if not any(rest):
            return True
        if idx == len(vectors) or budget <= 0:
            return False
        s, t = vectors[idx]
        for k in range(budget + 1):
            r = list(rest)
            r[s - 1] -= k
            r[t - 1] += k
            if feasible(idx + 1, tuple(r), budget - k):
                return True
        return False

    return feasible(0, target, bound)


# -- verdicts -------------------------------------------------------------------


class VerdictEngine:
    """Caches strata, Teleman reports and the Chow presentation for one (M, a)."""

    def __init__(self, moduli: Moduli, a: Sequence[int] | None):
        moduli.require_assumptions()
        self.moduli = moduli
        self.a = moduli.check_linearisation(a) if a is not None else None
        self.strata = strata(moduli)
        self._presentation = None
        self._teleman: dict = {}
        self._chi: dict = {}

    @property
    def presentation(self):
        if self._presentation is None:
            from .chow import Presentation

            if self.a is None:
                raise QuiverError("Euler characteristics need a linearisation")
            self._presentation = Presentation(self.moduli, self.a)
        return self._presentation

    def teleman(self, F: BundleExpression) -> bool:
        if F not in self._teleman:
            self._teleman[F] = teleman_report(self.moduli, F, self.strata).satisfied
        return self._teleman[F]

    def chi(self, F: BundleExpression) -> int:
        if F not in self._chi:
            self._chi[F] = self.presentation.euler_characteristic(F)
        return self._chi[F]

    def no_sections(self, F: BundleExpression) -> bool:
        w = central_character(F, self.moduli)
        return w is not None and admits_invariant_monomials(self.moduli.quiver, w) is False

    def verdict(self, F: BundleExpression, label: str | None = None, scope: str | None = None) -> VanishingVerdict:
        """Apply Teleman, Serre and chi in that order.

        With ``scope`` set, the Chow-ring step is skipped once that range is
        already decided.
        """
        D = self.moduli.dimension
        label = label or F.describe(self.moduli)
        ev: list[Evidence] = []
        h0 = mid = top = Status.INCONCLUSIVE
        if D <= 1:
            mid = Status.VANISHES
        if D == 0:
            top = Status.VANISHES
        tF = self.teleman(F)
        if tF:
            mid = top = Status.VANISHES
            ev.append(Evidence("TelemanDirect"))
            if self.no_sections(F):
                h0 = Status.VANISHES
                ev.append(Evidence("TelemanInvariants"))
        if D >= 1:
            P = serre_partner(F, self.moduli)
            if self.teleman(P):
                h0 = Status.VANISHES
                if D >= 2:
                    mid = Status.VANISHES
                ev.append(Evidence("SerrePartner", P.describe(self.moduli)))
                if self.no_sections(P) and top is not Status.VANISHES:
                    top = Status.VANISHES
                    ev.append(Evidence("TelemanInvariants", "partner"))
        chi = None
        unknown = [name for name, st in (("H0", h0), ("top", top)) if st is Status.INCONCLUSIVE]
        decided = {"H0": h0, "H>=1": _combine(mid, top), "all": _combine(h0, mid, top)}
        if scope is not None and decided[scope] is not Status.INCONCLUSIVE:
            unknown = []
        if mid is Status.VANISHES and len(unknown) == 1:
            chi = self.chi(F)
            status = Status.VANISHES if chi == 0 else Status.NONZERO
            ev.append(Evidence("ChiZero" if chi == 0 else "ChiNonzero", f"chi = {chi}"))
            if unknown[0] == "H0":
                h0 = status
            else:
                top = status
        higher = _combine(mid, top)
        ranges = {"H0": h0, "H>=1": higher, "all": _combine(h0, higher)}
        return VanishingVerdict(F, label, ranges, tuple(ev), chi)


def vanishing_verdict(Q: Quiver, d: Sequence[int], theta: Sequence[int] | None, a: Sequence[int] | None,
                      F: BundleExpression) -> VanishingVerdict:
    moduli = Moduli(Q, tuple(d), tuple(theta) if theta is not None else None)
    return VerdictEngine(moduli, a).verdict(F)


# -- questions --------------------------------------------------------------------


@dataclass(frozen=True)
class Requirement:
    """One bundle together with the cohomological range that must vanish."""

    bundle: BundleExpression
    label: str
    scope: str  # "all" or "H>=1"


@dataclass
class QuestionVerdict:
    question: str
    answer: Answer
    predicted_collection_length: int
    hh0: int
    collection: list[str]
    verdicts: list[tuple[Requirement, VanishingVerdict]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return {Answer.POSITIVE: 0, Answer.NEGATIVE: 1, Answer.INCONCLUSIVE: 2}[self.answer]


def _twist(F: BundleExpression, moduli: Moduli, s: int) -> BundleExpression:
    return F * OH(moduli, s) if s else F


def _label(base: str, s: int) -> str:
    if s == 0:
        return base
    return f"{base}({s}H)" if base != "O" else f"O({s}H)"


class Questions:
    """Question A, B, C and the U-only decomposition for a fixed linearisation."""

    def __init__(self, moduli: Moduli, a: Sequence[int], hh0: int | None = None):
        self.moduli = moduli
        self.engine = VerdictEngine(moduli, a)
        self.a = self.engine.a
        self._hh0 = hh0

    @property
    def hh0(self) -> int:
        if self._hh0 is None:
            self._hh0 = hochschild_zero(self.moduli.quiver, self.moduli.d, self.moduli.theta)
        return self._hh0

    # bundles
    def _U(self, i):
        return U(i, self.a)

    def _Ud(self, i):
        return Udual(i, self.a)

    def _vertices(self):
        return range(1, self.moduli.n + 1)

    def _hom(self, s: int) -> list[Requirement]:
        return [
            Requirement(_twist(self._Ud(i) * self._U(j), self.moduli, s), _label(f"U{i}^*U{j}", s), "")
            for i in self._vertices()
            for j in self._vertices()
        ]

    def _req(self, items, scope):
        return [Requirement(r.bundle, r.label, scope) for r in items]

    def _family(self, kind: str, s: int) -> list[Requirement]:
        M = self.moduli
        if kind == "hom":
            return self._hom(s)
        if kind == "O":
            return [Requirement(_twist(structure_sheaf(), M, s), _label("O", s), "")]
        if kind == "U":
            return [Requirement(_twist(self._U(i), M, s), _label(f"U{i}", s), "") for i in self._vertices()]
        if kind == "Ud":
            return [Requirement(_twist(self._Ud(i), M, s), _label(f"U{i}^", s), "") for i in self._vertices()]
        raise ValueError(kind)

    def exceptional_requirements(self, collection: str) -> list[Requirement]:
        r = self.moduli.index
        out: list[Requirement] = []
        if collection == "A" or (collection == "B" and r == 1):
            out += self._family("Ud", 0)
        elif collection == "B":
            for s in range(1, r):
                out += self._family("hom", -s) + self._family("O", -s) + self._family("U", -s)
            for t in range(r):
                out += self._family("Ud", -t)
        elif collection == "U":
            for s in range(1, r):
                out += self._family("hom", -s)
        else:
            raise QuiverError(f"unknown collection {collection!r}")
        return self._req(out, "all")

    def strong_requirements(self, collection: str) -> list[Requirement]:
        r = self.moduli.index
        out = self._family("hom", 0)
        if collection == "A" or (collection == "B" and r == 1):
            out += self._family("U", 0)
        elif collection == "B":
            for s in range(1, r):
                out += self._family("hom", s) + self._family("O", s) + self._family("Ud", s)
            for t in range(r):
                out += self._family("U", t)
        elif collection == "U":
            for s in range(1, r):
                out += self._family("hom", s)
        return self._req(out, "H>=1")

    def collection(self, kind: str) -> list[str]:
        n, r = self.moduli.n, self.moduli.index
        blocks = 1 if (kind == "A" or r == 1) else r
        items = []
        for s in range(blocks):
            if kind != "U":
                items.append(_label("O", s))
            items += [_label(f"U{i}", s) for i in range(1, n + 1)]
        return items

    def _evaluate(self, name: str, kind: str, reqs: list[Requirement], notes=None) -> QuestionVerdict:
        items = self.collection(kind)
        qv = QuestionVerdict(name, Answer.INCONCLUSIVE, len(items), self.hh0, items, notes=list(notes or []))
        if len(items) > self.hh0:
            qv.answer = Answer.NEGATIVE
            qv.notes.append(f"Hochschild obstruction: {len(items)} objects > dim HH0 = {self.hh0}")
            return qv
        answer = Answer.POSITIVE
        seen = set()
        for req in reqs:
            if (req.bundle, req.scope) in seen:
                continue
            seen.add((req.bundle, req.scope))
            v = self.engine.verdict(req.bundle, req.label, req.scope)
            qv.verdicts.append((req, v))
            st = v.degree_ranges[req.scope]
            if st is Status.NONZERO:
                answer = Answer.NEGATIVE
            elif st is Status.INCONCLUSIVE and answer is Answer.POSITIVE:
                answer = Answer.INCONCLUSIVE
        qv.answer = answer
        return qv

    def question_a(self) -> QuestionVerdict:
        return self._evaluate("A", "A", self.exceptional_requirements("A"))

    def question_b(self) -> QuestionVerdict:
        if self.moduli.index == 1:
            qv = self._evaluate("B", "A", self.exceptional_requirements("A"), ["index 1: same as question A"])
            return qv
        return self._evaluate("B", "B", self.exceptional_requirements("B"))

    def question_c(self, collection: str | None = None) -> QuestionVerdict:
        notes = []
        if collection is None:
            collection = "B" if self.question_b().answer is Answer.POSITIVE else "A"
            notes.append(f"collection of question {collection}")
        reqs = self.exceptional_requirements(collection) + self.strong_requirements(collection)
        return self._evaluate("C", collection, reqs, notes)

    def theorem_d(self) -> QuestionVerdict:
        """U-only decomposition: the t_star criterion, else the verdict chain."""
        per_type, tmin = t_star(self.moduli.quiver, self.moduli.d)
        r = self.moduli.index
        notes = [f"min t_star = {tmin}, r - 1 = {r - 1}"]
        if tmin == r - 1:
            items = self.collection("U")
            notes.append("t_star criterion holds")
            return QuestionVerdict("TheoremD", Answer.POSITIVE, len(items), self.hh0, items, notes=notes)
        notes.append("t_star criterion fails; falling back to the vanishing chain")
        reqs = self.exceptional_requirements("U") + self.strong_requirements("U")
        qv = self._evaluate("TheoremD", "U", reqs, notes)
        return qv


def _questions(Q, d, theta, a) -> Questions:
    return Questions(Moduli(Q, tuple(d), tuple(theta) if theta is not None else None), a)


def question_a(Q: Quiver, d, theta, a) -> QuestionVerdict:
    return _questions(Q, d, theta, a).question_a()


def question_b(Q: Quiver, d, theta, a) -> QuestionVerdict:
    return _questions(Q, d, theta, a).question_b()


def question_c(Q: Quiver, d, theta, a, collection: str | None = None) -> QuestionVerdict:
    return _questions(Q, d, theta, a).question_c(collection)


def theorem_d_verdict(Q: Quiver, d, theta, a) -> QuestionVerdict:
    return _questions(Q, d, theta, a).theorem_d()


def mkronecker_h0_condition(m: int, a: Sequence[int] = (2, -1)) -> bool | None:
    """H^0(U_i^dual) = 0 for all i on the m-Kronecker moduli of dimension (2, 3).

    True / False when certified, None when the evidence is inconclusive.
    """
    if m < 3:
        raise QuiverError(f"the m-Kronecker check needs m >= 3, got {m}")
    moduli = Moduli(Quiver.kronecker(m), (2, 3))
    engine = VerdictEngine(moduli, a)
    statuses = [engine.verdict(Udual(i, engine.a)).h0 for i in (1, 2)]
    if all(s is Status.VANISHES for s in statuses):
        return True
    if any(s is Status.NONZERO for s in statuses):
        return False
    return None
