"""Shared fixtures and independent oracles for the test suite."""

from __future__ import annotations

import functools
import json
import random
from pathlib import Path

import pytest

from quiversod.catalog import load_instance
from quiversod.chow import Presentation

GOLDEN = Path(__file__).parent / "golden"


def golden(name: str) -> dict:
    return json.loads((GOLDEN / name).read_text())


@functools.lru_cache(maxsize=None)
def problem(name: str):
    return load_instance(name)


@functools.lru_cache(maxsize=None)
def presentation(name: str) -> Presentation:
    p = problem(name)
    return Presentation(p.moduli, p.linearisation_or_default())


@pytest.fixture(scope="session")
def kronecker34():
    return problem("kronecker3_d34")


@pytest.fixture(scope="session")
def kronecker34_presentation():
    return presentation("kronecker3_d34")


# -- oracle: generic subdimension vectors by a random rank computation -----------

PRIME = 2_147_483_647


def rank_mod_p(rows: list[list[int]], p: int = PRIME) -> int:
    """Rank of an integer matrix over F_p by plain Gaussian elimination."""
    m = [[x % p for x in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def is_generic_subdimension(arrows, e, f, samples: int = 20, rng: random.Random | None = None) -> bool:
    """f is a subdimension vector of a general representation of dimension e.

    Equivalent to dominance of GL_e x^P R_{f in e} -> R_e, i.e. to surjectivity of
    (X, N') -> [X, N] + N' at a general N preserving the flag f in e.  The
    generic rank is the maximum over random samples.
    """
    rng = rng or random.Random(0)
    target = sum(e[s - 1] * e[t - 1] for s, t in arrows)
    if target == 0:
        return True
    n = len(e)
    best = 0
    for _ in range(samples):
        # N_a : k^{e_s} -> k^{e_t} maps the first f_s basis vectors into the first f_t.
        N = []
        for s, t in arrows:
            es, et, fs, ft = e[s - 1], e[t - 1], f[s - 1], f[t - 1]
            N.append([[0 if (c < fs and r >= ft) else rng.randrange(PRIME) for c in range(es)] for r in range(et)])
        # coordinates of R_e: one per (arrow, row, column)
        coords = [(k, r, c) for k, (s, t) in enumerate(arrows) for r in range(e[t - 1]) for c in range(e[s - 1])]
        index = {x: i for i, x in enumerate(coords)}
        columns = []
        # image of the elementary matrix E_{pq} in gl_{e_v}
        for v in range(1, n + 1):
            for p_ in range(e[v - 1]):
                for q in range(e[v - 1]):
                    vec = [0] * len(coords)
                    for k, (s, t) in enumerate(arrows):
                        if t == v:  # X_t N_a: row p gets row q of N_a
                            for c in range(e[s - 1]):
                                vec[index[(k, p_, c)]] += N[k][q][c]
                        if s == v:  # - N_a X_s: column q gets column p of N_a
                            for r in range(e[t - 1]):
                                vec[index[(k, r, q)]] -= N[k][r][p_]
                    columns.append(vec)
        for k, (s, t) in enumerate(arrows):
            fs, ft = f[s - 1], f[t - 1]
            for r in range(e[t - 1]):
                for c in range(e[s - 1]):
                    if not (c < fs and r >= ft):
                        vec = [0] * len(coords)
                        vec[index[(k, r, c)]] = 1
                        columns.append(vec)
        best = max(best, rank_mod_p(columns))
        if best == target:
            return True
    return False


def pytest_terminal_summary(terminalreporter):
    from tests import acceptance_log

    if acceptance_log.LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in acceptance_log.LINES:
            terminalreporter.write_line(line)
