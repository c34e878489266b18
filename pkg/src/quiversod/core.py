"""Quivers, dimension vectors, stability parameters and the standing assumptions.

Vertices are numbered ``1..n`` in every public interface (arrows, vertex
arguments, bundle atoms); vectors are plain tuples indexed from 0, so entry
``v[i - 1]`` belongs to vertex ``i``.  All arithmetic is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, reduce
from math import gcd
from typing import Iterator, Sequence

Vector = tuple[int, ...]


class QuiverError(ValueError):
    """Invalid input: malformed quiver, wrong vector length, bad parameter."""


class AssumptionError(QuiverError):
    """The moduli problem violates acyclicity, coprimality or strong ample stability."""


@dataclass(frozen=True)
class Quiver:
    vertex_count: int
    arrows: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.vertex_count < 1:
            raise QuiverError(f"vertex_count must be positive, got {self.vertex_count}")
        arrows = tuple((int(s), int(t)) for s, t in self.arrows)
        for s, t in arrows:
            if not (1 <= s <= self.vertex_count and 1 <= t <= self.vertex_count):
                raise QuiverError(f"arrow ({s}, {t}) has an endpoint outside 1..{self.vertex_count}")
        object.__setattr__(self, "arrows", arrows)

    @classmethod
    def kronecker(cls, m: int) -> "Quiver":
        """The m-Kronecker quiver: two vertices, m arrows 1 -> 2."""
        return cls(2, ((1, 2),) * m)

    @property
    def vertices(self) -> range:
        return range(1, self.vertex_count + 1)

    def topological_order(self) -> list[int] | None:
        """A topological order of the vertices, or None if there is a cycle."""
        indeg = {v: 0 for v in self.vertices}
        for _, t in self.arrows:
            indeg[t] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for s, t in self.arrows:
                if s == v:
                    indeg[t] -= 1
                    if indeg[t] == 0:
                        ready.append(t)
        return order if len(order) == self.vertex_count else None

    def cycle_witness(self) -> list[int] | None:
        """Vertices of some oriented cycle (a loop gives a one-element list)."""
        for s, t in self.arrows:
            if s == t:
                return [s]
        succ = {v: sorted({t for s, t in self.arrows if s == v}) for v in self.vertices}
        state: dict[int, int] = {}
        stack: list[int] = []

        def visit(v):
            state[v] = 1
            stack.append(v)
            for w in succ[v]:
                if state.get(w) == 1:
                    return stack[stack.index(w):]
                if w not in state:
                    found = visit(w)
                    if found:
                        return found
            stack.pop()
            state[v] = 2
            return None

        for v in self.vertices:
            if v not in state:
                found = visit(v)
                if found:
                    return list(found)
        return None

    def is_acyclic(self) -> bool:
        return self.topological_order() is not None

    def check_vector(self, v: Sequence[int], what: str = "vector") -> Vector:
        v = tuple(int(x) for x in v)
        if len(v) != self.vertex_count:
            raise QuiverError(f"{what} has length {len(v)}, expected {self.vertex_count}")
        return v


def check_dimension_vector(Q: Quiver, d: Sequence[int]) -> Vector:
    d = Q.check_vector(d, "dimension vector")
    if any(x < 0 for x in d):
        raise QuiverError(f"dimension vector {d} has a negative entry")
    if not any(d):
        raise QuiverError("dimension vector must not be zero")
    return d


def dot(u: Sequence, v: Sequence):
    return sum(a * b for a, b in zip(u, v))


def euler_form(Q: Quiver, e: Sequence[int], f: Sequence[int]) -> int:
    """<e, f> = sum_i e_i f_i - sum_{arrows a} e_{s(a)} f_{t(a)}."""
    e = Q.check_vector(e)
    f = Q.check_vector(f)
    return dot(e, f) - sum(e[s - 1] * f[t - 1] for s, t in Q.arrows)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(1 if j == i - 1 else 0 for j in range(n))


def canonical_stability(Q: Quiver, d: Sequence[int]) -> Vector:
    """theta_can with entry i equal to <d, 1_i> - <1_i, d>.

    For a quiver without arrows this is the zero vector, which is not a
    usable stability parameter; callers that need one must check.
    """
    d = check_dimension_vector(Q, d)
    n = Q.vertex_count
    return tuple(
        euler_form(Q, d, unit_vector(n, i)) - euler_form(Q, unit_vector(n, i), d)
        for i in Q.vertices
    )


def slope(theta: Sequence[int], e: Sequence[int]) -> Fraction:
    total = sum(e)
    if total <= 0:
        raise QuiverError(f"slope of {tuple(e)} undefined: total dimension must be positive")
    return Fraction(dot(theta, e), total)


def subdimension_vectors(d: Sequence[int], proper: bool = False) -> Iterator[Vector]:
    """All e with 0 <= e <= d componentwise, in lexicographic order.

    With ``proper=True`` the zero vector and d itself are skipped.
    """
    d = tuple(d)
    for e in itertools.product(*(range(x + 1) for x in d)):
        if proper and (not any(e) or e == d):
            continue
        yield e


def _check_theta(Q: Quiver, d: Vector, theta: Sequence[int]) -> Vector:
    theta = Q.check_vector(theta, "stability parameter")
    if not any(theta):
        raise QuiverError("stability parameter must not be zero")
    if dot(theta, d) != 0:
        raise QuiverError(f"theta . d = {dot(theta, d)} must vanish (theta={theta}, d={d})")
    return theta


def coprimality_witnesses(d: Sequence[int], theta: Sequence[int]) -> list[Vector]:
    return [e for e in subdimension_vectors(d, proper=True) if dot(theta, e) == 0]


def is_coprime(d: Sequence[int], theta: Sequence[int]) -> bool:
    if dot(theta, d) != 0:
        raise QuiverError(f"theta . d = {dot(theta, d)} must vanish")
    return not coprimality_witnesses(d, theta)


def ample_stability_witnesses(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> list[Vector]:
    d = tuple(d)
    bad = []
    for e in subdimension_vectors(d, proper=True):
        if dot(theta, e) > 0:
            rest = tuple(x - y for x, y in zip(d, e))
            if euler_form(Q, e, rest) > -2:
                bad.append(e)
    return bad


def is_strongly_amply_stable(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> bool:
    """Every e <= d with theta . e > 0 satisfies <e, d - e> <= -2."""
    d = check_dimension_vector(Q, d)
    _check_theta(Q, d, theta)
    return not ample_stability_witnesses(Q, d, theta)


@dataclass(frozen=True)
class AssumptionReport:
    acyclic: bool
    coprime: bool
    strongly_amply_stable: bool
    witnesses: dict[str, list] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.acyclic and self.coprime and self.strongly_amply_stable

    def failures(self) -> list[str]:
        return [k for k in ("acyclic", "coprime", "strongly_amply_stable") if not getattr(self, k)]


def check_assumptions(Q: Quiver, d: Sequence[int], theta: Sequence[int]) -> AssumptionReport:
    d = check_dimension_vector(Q, d)
    theta = _check_theta(Q, d, theta)
    witnesses: dict[str, list] = {}
    cycle = Q.cycle_witness()
    if cycle is not None:
        witnesses["acyclic"] = [cycle]
    cop = coprimality_witnesses(d, theta)
    if cop:
        witnesses["coprime"] = cop
    amp = ample_stability_witnesses(Q, d, theta)
    if amp:
        witnesses["strongly_amply_stable"] = amp
    return AssumptionReport(
        acyclic=cycle is None,
        coprime=not cop,
        strongly_amply_stable=not amp,
        witnesses=witnesses,
    )


def fano_index(Q: Quiver, d: Sequence[int]) -> int:
    theta = canonical_stability(Q, d)
    r = reduce(gcd, theta, 0)
    if r == 0:
        raise QuiverError("canonical stability parameter vanishes; the moduli problem is degenerate")
    return r


def moduli_dimension(Q: Quiver, d: Sequence[int]) -> int:
    dim = 1 - euler_form(Q, d, d)
    if dim < 0:
        raise QuiverError(f"1 - <d, d> = {dim} is negative; no smooth moduli space")
    return dim


def default_linearisation(d: Sequence[int]) -> Vector:
    """The integer vector a with a . d = 1 that is smallest in the
    lexicographic order on (|a_1|, |a_2|, ...), positive entries first on ties.
    """
    d = tuple(d)
    if reduce(gcd, d, 0) != 1:
        raise QuiverError(f"no linearisation exists: gcd{d} != 1")

    def solvable(rest, target):
        g = reduce(gcd, rest, 0)
        return target == 0 if g == 0 else target % g == 0

    a: list[int] = []
    target = 1
    for pos, di in enumerate(d):
        rest = d[pos + 1:]
        if di == 0:
            a.append(0)
            continue
        for size in itertools.count():
            found = None
            for v in ((size, -size) if size else (0,)):
                if solvable(rest, target - v * di):
                    found = v
                    break
            if found is not None:
                a.append(found)
                target -= found * di
                break
    return tuple(a)


@dataclass(frozen=True)
class Moduli:
    """A moduli problem (Q, d, theta); theta defaults to the canonical one."""

    quiver: Quiver
    d: Vector
    theta: Vector | None = None

    def __post_init__(self):
        d = check_dimension_vector(self.quiver, self.d)
        object.__setattr__(self, "d", d)
        theta = canonical_stability(self.quiver, d) if self.theta is None else self.theta
        object.__setattr__(self, "theta", _check_theta(self.quiver, d, theta))

    @property
    def n(self) -> int:
        return self.quiver.vertex_count

    @cached_property
    def theta_can(self) -> Vector:
        return canonical_stability(self.quiver, self.d)

    @cached_property
    def index(self) -> int:
        return fano_index(self.quiver, self.d)

    @cached_property
    def dimension(self) -> int:
        return moduli_dimension(self.quiver, self.d)

    @cached_property
    def h_character(self) -> tuple[Fraction, ...]:
        """theta_can / r: the character whose line bundle descends to O(H)."""
        return tuple(Fraction(x, self.index) for x in self.theta_can)

    @cached_property
    def assumptions(self) -> AssumptionReport:
        return check_assumptions(self.quiver, self.d, self.theta)

    def require_assumptions(self) -> None:
        rep = self.assumptions
        if not rep.ok:
            details = "; ".join(f"{k}: {rep.witnesses.get(k)}" for k in rep.failures())
            raise AssumptionError(f"assumptions violated ({details})")

    def euler(self, e, f) -> int:
        return euler_form(self.quiver, e, f)

    def check_linearisation(self, a: Sequence[int]) -> Vector:
        a = self.quiver.check_vector(a, "linearisation")
        if dot(a, self.d) != 1:
            raise QuiverError(f"linearisation {a} has a . d = {dot(a, self.d)}, expected 1")
        return a
