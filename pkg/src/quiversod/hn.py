"""Generic subrepresentations, semistability and Harder-Narasimhan types."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .core import Quiver, QuiverError, Vector, dot, euler_form, slope, subdimension_vectors


@dataclass(frozen=True)
class HNType:
    """Ordered parts d^1, ..., d^l of strictly decreasing slope."""

    parts: tuple[Vector, ...]

    def __post_init__(self):
        parts = tuple(tuple(p) for p in self.parts)
        if not parts:
            raise QuiverError("an HN type needs at least one part")
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    @property
    def total(self) -> Vector:
        return tuple(sum(col) for col in zip(*self.parts))

    @property
    def is_trivial(self) -> bool:
        return len(self.parts) == 1

    def slopes(self, theta: Sequence[int]) -> list[Fraction]:
        return [slope(theta, p) for p in self.parts]

    def to_list(self) -> list[list[int]]:
        return [list(p) for p in self.parts]

    def __str__(self) -> str:
        return "(" + ", ".join("(" + ", ".join(map(str, p)) + ")" for p in self.parts) + ")"


def _sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


@lru_cache(maxsize=None)
def _generic_subdims(Q: Quiver, e: Vector) -> frozenset:
    # Schofield: e' is generic in e iff <f, e - e'> >= 0 for every f generic in e'.
    result = set()
    for sub in subdimension_vectors(e):
        if not any(sub) or sub == e:
            result.add(sub)
            continue
        rest = _sub(e, sub)
        if all(euler_form(Q, f, rest) >= 0 for f in _generic_subdims(Q, sub)):
            result.add(sub)
    return frozenset(result)


def generic_subdimension_vectors(Q: Quiver, e: Sequence[int]) -> set[Vector]:
    """Dimension vectors of subrepresentations of a general representation of dimension e."""
    e = Q.check_vector(e, "dimension vector")
    if any(x < 0 for x in e):
        raise QuiverError(f"dimension vector {e} has a negative entry")
    return set(_generic_subdims(Q, e))


@lru_cache(maxsize=None)
def _has_semistable(Q: Quiver, e: Vector, theta: Vector) -> bool:
    mu = slope(theta, e)
    return all(
        slope(theta, f) <= mu
        for f in _generic_subdims(Q, e)
        if any(f) and f != e
    )


def has_semistable(Q: Quiver, e: Sequence[int], theta: Sequence[int]) -> bool:
    """Whether some representation of dimension e is mu_theta-semistable.

    The slope of e itself is not required to vanish.
    """
    e = Q.check_vector(e, "dimension vector")
    if sum(e) <= 0:
        raise QuiverError("has_semistable needs a nonzero dimension vector")
    return _has_semistable(Q, e, Q.check_vector(theta, "stability parameter"))


def hn_types(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> list[HNType]:
    """All Harder-Narasimhan types of d, trivial one included when it occurs.

    Sorted lexicographically on the concatenated parts.
    """
    d = Q.check_vector(d, "dimension vector")
    theta = Q.check_vector(theta, "stability parameter")
    if dot(theta, d) != 0:
        raise QuiverError(f"theta . d = {dot(theta, d)} must vanish")

    @lru_cache(maxsize=None)
    def tails(e: Vector, bound: Fraction | None) -> tuple:
        if not any(e):
            return ((),)
        out = []
        for first in subdimension_vectors(e):
            if not any(first):
                continue
            mu = slope(theta, first)
            if bound is not None and mu >= bound:
                continue
            if not _has_semistable(Q, first, theta):
                continue
            for rest in tails(_sub(e, first), mu):
                out.append((first,) + rest)
        return tuple(out)

    types = [HNType(parts) for parts in tails(d, None)]
    types.sort(key=lambda t: tuple(x for p in t.parts for x in p))
    return types


def nontrivial_hn_types(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> list[HNType]:
    return [t for t in hn_types(Q, d, theta) if not t.is_trivial]
