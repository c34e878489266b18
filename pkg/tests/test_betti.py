"""Poincare polynomials from the HN recursion."""

import pytest

from quiversod.betti import hochschild_zero, picard_rank, poincare_polynomial
from quiversod.catalog import DEL_PEZZOS, instance_names, load_instance
from quiversod.core import Quiver, QuiverError

from .conftest import golden

K3 = Quiver.kronecker(3)


def test_hodge_column_example():
    P = poincare_polynomial(K3, (3, 4), (12, -9))
    assert tuple(P) == (1, 1, 3, 5, 8, 10, 12, 10, 8, 5, 3, 1, 1)
    assert P.total == 68 and P.degree == 12


def test_small_examples():
    assert tuple(poincare_polynomial(Quiver.kronecker(2), (1, 1))) == (1, 1)
    assert tuple(poincare_polynomial(K3, (1, 1))) == (1, 1, 1)
    assert picard_rank(Quiver.kronecker(2), (1, 1)) == 1


def test_hochschild_examples():
    assert hochschild_zero(K3, (3, 4), (12, -9)) == 68
    for name, expected in [("fano5fold", 12), ("fano3fold_2_35", 6)]:
        p = load_instance(name)
        assert hochschild_zero(p.quiver, p.d) == expected
    p = load_instance("fano5fold")
    assert picard_rank(p.quiver, p.d) == 2


def test_table3_hochschild_and_picard():
    rows = golden("table3_transcribed.json")["rows"]
    assert [r[1] for r in rows] == list(DEL_PEZZOS)
    for _, name, hh0, pic, _, _ in rows:
        p = load_instance(name)
        assert hochschild_zero(p.quiver, p.d) == hh0
        assert picard_rank(p.quiver, p.d) == pic


@pytest.mark.parametrize("name", [n for n in instance_names()])
def test_palindromic_and_unit_ends(name):
    p = load_instance(name)
    P = poincare_polynomial(p.quiver, p.d, p.theta)
    assert P.is_palindromic()
    assert P[0] == 1 and P[P.degree] == 1
    assert P.degree == p.moduli.dimension


@pytest.mark.parametrize("m,d", [(3, (2, 3)), (4, (2, 3)), (3, (1, 2)), (5, (1, 1)), (3, (2, 5))])
def test_palindromic_kronecker_family(m, d):
    P = poincare_polynomial(Quiver.kronecker(m), d)
    assert P.is_palindromic() and P[0] == P[P.degree] == 1


@pytest.mark.parametrize("c", [2, 3])
def test_theta_rescaling_invariance(c):
    assert poincare_polynomial(K3, (3, 4), (12 * c, -9 * c)) == poincare_polynomial(K3, (3, 4), (12, -9))


def test_rejects_failing_assumptions():
    with pytest.raises(QuiverError):
        poincare_polynomial(Quiver.kronecker(2), (2, 2), (1, -1))
