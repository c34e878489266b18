"""Symbolic equivariant bundles built from U_i, U_i^dual and linearised line bundles.

A :class:`BundleExpression` is a tensor word.  The universal factors are
always the bundles U_i(a) for one linearisation ``a``; all line-bundle
twists are collected into a single character ``twist`` so that
``Lin(e) * Lin(e') == Lin(e + e')`` holds on the nose.

Conventions (pinned by the tests): O(sH) is the descent of
``L(s * theta_can / r)``, the canonical bundle is ``L(-theta_can)``, and in
the Chow ring ``c1(L(e)) = -sum_i e_i xi_{i,1}``.

Expression mini-language (whitespace ignored)::

    expr    := factor ("*" factor)*
    factor  := "O" | "O(" twist ")" | twist | "U" INT ["^"] | "L(" RAT ("," RAT)* ")"
    twist   := [SIGN] [INT] "H"

``U2^`` is the dual of U_2, ``O(-1H)``, ``O(-H)`` and ``-H`` are the same
line bundle, ``L(4,-3)`` is the twist by the character (4, -3).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Moduli, QuiverError, Vector, dot


class ExpressionError(QuiverError):
    pass


def _frac_vector(e: Sequence) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in e)


def format_rational(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class BundleExpression:
    factors: tuple[tuple[int, bool], ...] = ()
    twist: tuple[Fraction, ...] = ()
    linearisation: Vector | None = None

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(sorted((int(i), bool(dl)) for i, dl in self.factors)))
        tw = _frac_vector(self.twist)
        if not any(tw):
            tw = ()
        object.__setattr__(self, "twist", tw)
        if self.linearisation is not None:
            object.__setattr__(self, "linearisation", tuple(int(x) for x in self.linearisation))

    def __mul__(self, other: "BundleExpression") -> "BundleExpression":
        a, b = self.linearisation, other.linearisation
        if a is not None and b is not None and a != b:
            raise ExpressionError(f"inconsistent linearisations {a} and {b} in one expression")
        return BundleExpression(
            self.factors + other.factors,
            _add(self.twist, other.twist),
            a if a is not None else b,
        )

    def dual(self) -> "BundleExpression":
        return BundleExpression(
            tuple((i, not dl) for i, dl in self.factors),
            tuple(-x for x in self.twist),
            self.linearisation,
        )

    def twisted(self, e: Sequence) -> "BundleExpression":
        return BundleExpression(self.factors, _add(self.twist, _frac_vector(e)), self.linearisation)

    def rank(self, d: Sequence[int]) -> int:
        r = 1
        for i, _ in self.factors:
            r *= d[i - 1]
        return r

    def twist_vector(self, n: int) -> tuple[Fraction, ...]:
        return self.twist if self.twist else (Fraction(0),) * n

    def descends(self, d: Sequence[int]) -> bool:
        return dot(self.twist_vector(len(d)), d) == 0

    def describe(self, moduli: Moduli | None = None) -> str:
        """Render in the mini-language; twists that are multiples of H print as O(sH)."""
        words = [f"U{i}^" if dl else f"U{i}" for i, dl in self.factors]
        if self.twist:
            s = _h_multiple(self.twist, moduli) if moduli is not None else None
            if s is not None:
                words.append(f"O({format_rational(s)}H)")
            else:
                words.append("L(" + ",".join(format_rational(x) for x in self.twist) + ")")
        return " * ".join(words) if words else "O"

    def __str__(self) -> str:
        return self.describe()


def _add(u, v):
    if not u:
        return tuple(v)
    if not v:
        return tuple(u)
    if len(u) != len(v):
        raise ExpressionError("twist characters of different lengths")
    return tuple(x + y for x, y in zip(u, v))


def _h_multiple(twist, moduli: Moduli):
    h = moduli.h_character
    ratios = {x / y for x, y in zip(twist, h) if y}
    if len(ratios) != 1:
        return None
    s = ratios.pop()
    if any(x != s * y for x, y in zip(twist, h)):
        return None
    return s


def U(i: int, a: Sequence[int] | None = None) -> BundleExpression:
    return BundleExpression(((i, False),), (), a)


def Udual(i: int, a: Sequence[int] | None = None) -> BundleExpression:
    return BundleExpression(((i, True),), (), a)


def Lin(e: Sequence) -> BundleExpression:
    return BundleExpression((), _frac_vector(e))


def structure_sheaf() -> BundleExpression:
    return BundleExpression()


def OH(moduli: Moduli, s) -> BundleExpression:
    """O(sH), the descent of L(s * theta_can / r)."""
    return Lin(tuple(Fraction(s) * x for x in moduli.h_character))


def canonical_bundle(moduli: Moduli) -> BundleExpression:
    return Lin(tuple(-x for x in moduli.theta_can))


def serre_partner(F: BundleExpression, moduli: Moduli) -> BundleExpression:
    """F^dual (x) K, so that H^k(F) is dual to H^{D-k} of the partner."""
    return F.dual() * canonical_bundle(moduli)


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<u>U(?P<ui>\d+)(?P<dual>\^)?)
      | (?P<oh>O\(\s*(?P<ohs>[+-]?\s*\d*)\s*H\s*\))
      | (?P<o>O)
      | (?P<h>(?P<hs>[+-]?\d*)H)
      | (?P<l>L\((?P<lv>[^)]*)\))
      | (?P<star>\*)
    )""",
    re.VERBOSE,
)


def _h_coefficient(text: str) -> int:
    text = text.replace(" ", "")
    if text in ("", "+"):
        return 1
    if text == "-":
        return -1
    return int(text)


def parse_bundle(text: str, moduli: Moduli, a: Sequence[int] | None = None) -> BundleExpression:
    """Parse the expression mini-language against a moduli problem."""
    pos = 0
    factors: list[BundleExpression] = []
    expect_factor = True
    text = text.strip()
    if not text:
        raise ExpressionError("empty bundle expression")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ExpressionError(f"cannot parse bundle expression at {text[pos:]!r}")
        pos = m.end()
        if m.group("star"):
            if expect_factor:
                raise ExpressionError(f"unexpected '*' in {text!r}")
            expect_factor = True
            continue
        if not expect_factor:
            raise ExpressionError(f"missing '*' before {m.group(0).strip()!r} in {text!r}")
        expect_factor = False
        if m.group("u"):
            i = int(m.group("ui"))
            if not 1 <= i <= moduli.n:
                raise ExpressionError(f"vertex {i} out of range 1..{moduli.n}")
            factors.append(Udual(i, a) if m.group("dual") else U(i, a))
        elif m.group("oh"):
            factors.append(OH(moduli, _h_coefficient(m.group("ohs"))))
        elif m.group("o"):
            factors.append(structure_sheaf())
        elif m.group("h"):
            factors.append(OH(moduli, _h_coefficient(m.group("hs"))))
        elif m.group("l"):
            try:
                e = [Fraction(x.strip()) for x in m.group("lv").split(",")]
            except ValueError as exc:
                raise ExpressionError(f"bad character in {m.group(0)!r}") from exc
            if len(e) != moduli.n:
                raise ExpressionError(f"character {m.group(0)!r} needs {moduli.n} entries")
            factors.append(Lin(e))
    if expect_factor:
        raise ExpressionError(f"expression {text!r} ends with '*'")
    result = factors[0]
    for f in factors[1:]:
        result = result * f
    if result.factors and result.linearisation is None:
        raise ExpressionError("expressions with U atoms need a linearisation")
    return result
