from fractions import Fraction

import pytest
from hypothesis import given, settings

from racah_natural.sparse import MAX_EXPONENT, ExponentOverflowError
from racah_natural.usl2 import (
    E,
    F,
    H,
    USl2Element,
    casimir,
    commutator,
    ef_power_identity,
    equitable,
    grade_project,
    graded_decomposition,
    nu,
    pbw_multiply,
    verify_commutator_lemmas,
    verify_pbw_laws,
    w_element,
    w_expressions,
)
from tests.strategies import usl2_elements


def test_defining_relations():
    assert F * E == E * F - H
    assert H * E == E * H + 2 * E
    assert F * H == H * F + 2 * F
    assert commutator(E, F) == H


def test_pbw_multiply_orders_letters():
    assert pbw_multiply(F, E) == USl2Element.pbw(1, 0, 1) - H
    assert str(E * F) == "e f"
    assert str(USl2Element.pbw(2, 1, 3)) == "e^2 h f^3"


def test_equitable_relations():
    x, y, z = (equitable(n) for n in "xyz")
    assert commutator(x, y) == x + y
    assert commutator(y, z) == y + z
    assert commutator(z, x) == z + x


def test_unknown_names():
    with pytest.raises(ValueError):
        equitable("q")
    with pytest.raises(ValueError):
        nu("y")


def test_casimir_is_central():
    lam = casimir()
    for g in (E, F, H):
        assert not commutator(lam, g)


def test_w_expressions_agree():
    w = w_element()
    assert all(value == w for value in w_expressions().values())


@pytest.mark.parametrize("i", range(5))
def test_ef_power_identity(i):
    lhs, rhs = ef_power_identity(i)
    assert lhs == rhs


def test_grading():
    assert grade_project(E * F, 0) == E * F
    assert not grade_project(E, 1)
    parts = graded_decomposition(E + F + H)
    assert parts.degrees == [-1, 0, 1]
    assert parts[-1] == E
    assert parts.total() == E + F + H
    assert not parts[5]


def test_exponent_checks():
    with pytest.raises(ValueError):
        USl2Element.pbw(-1, 0, 0)
    with pytest.raises(ExponentOverflowError):
        E ** (MAX_EXPONENT + 1)


def test_scalars_and_zero():
    assert E * 0 == USl2Element.zero()
    assert (E * Fraction(1, 2)).coefficient((1, 0, 0)) == Fraction(1, 2)
    assert USl2Element.one() * H == H


def test_commutator_lemmas():
    report = verify_commutator_lemmas()
    assert report.passed, report.summary()


def test_pbw_laws_small():
    report = verify_pbw_laws(max_exponent=1, max_power=3)
    assert report.passed, report.summary()


def test_word_bases_are_normal_ordered_before_ranking():
    report = verify_pbw_laws(max_exponent=1, max_power=0)
    assert report.passed, report.summary()
    ids = [check.statement_id for check in report.checks]
    assert "basis.equitable" in ids and "basis.reversed" in ids
    assert "basis.pbw" not in ids
    assert F * H * E != USl2Element.pbw(1, 1, 1)


@pytest.mark.slow
def test_pbw_laws():
    report = verify_pbw_laws(max_exponent=3, max_power=6)
    assert report.passed, report.summary()


@settings(max_examples=40, deadline=None)
@given(usl2_elements(), usl2_elements(), usl2_elements())
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=40, deadline=None)
@given(usl2_elements(), usl2_elements(), usl2_elements())
def test_distributivity(u, v, w):
    assert u * (v + w) == u * v + u * w
    assert (u + v) * w == u * w + v * w


@settings(max_examples=40, deadline=None)
@given(usl2_elements(), usl2_elements())
def test_grading_is_multiplicative(u, v):
    for m, part_u in graded_decomposition(u).components.items():
        for n, part_v in graded_decomposition(v).components.items():
            product = part_u * part_v
            assert grade_project(product, m + n) == product
