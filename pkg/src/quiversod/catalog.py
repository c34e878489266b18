"""Named instances from the examples, shipped as input documents."""

from __future__ import annotations

import json
from importlib import resources

from .core import Quiver
from .io import Problem, parse_problem

DEL_PEZZOS = (
    "delpezzo_q1_p2",
    "delpezzo_q2_p1xp1",
    "delpezzo_q3_bl1",
    "delpezzo_q4_bl2",
    "delpezzo_q5_bl3",
    "delpezzo_q6_bl4",
)


def instance_names() -> list[str]:
    files = resources.files("quiversod").joinpath("instances").iterdir()
    return sorted(f.name[:-5] for f in files if f.name.endswith(".json"))


def instance_path(name: str):
    return resources.files("quiversod").joinpath("instances", f"{name}.json")


def load_instance(name: str) -> Problem:
    path = instance_path(name)
    if not path.is_file():
        raise KeyError(f"unknown instance {name!r}; known: {', '.join(instance_names())}")
    return parse_problem(json.loads(path.read_text()))


def mkronecker(m: int, a=(2, -1)) -> Problem:
    """The m-Kronecker quiver with d = (2, 3) and canonical stability."""
    return Problem(Quiver.kronecker(m), (2, 3), None, tuple(a))
