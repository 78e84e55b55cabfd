from fractions import Fraction

import numpy as np
import pytest

from racah_natural.parser import parse
from racah_natural.rep_oracle import (
    EvaluationPoint,
    build_irrep,
    check_point,
    evaluate,
    evaluate_expression,
    identity,
    oracle_check_relations,
    random_points,
    tensor_leaf_matrices,
    zeros,
)
from racah_natural.tensor import a

POINT = EvaluationPoint(Fraction(1), Fraction(1, 2), Fraction(-3))


def _equal(m1, m2):
    return m1.shape == m2.shape and all(x == y for x, y in zip(m1.flat, m2.flat))


def test_trivial_module():
    rep = build_irrep(1)
    for name in "efh":
        assert _equal(rep.generator(name), zeros(1))


def test_two_dimensional_module():
    rep = build_irrep(2)
    assert _equal(rep.E, np.array([[0, 1], [0, 0]], dtype=object))
    assert _equal(rep.F, np.array([[0, 0], [1, 0]], dtype=object))
    assert _equal(rep.H, np.array([[1, 0], [0, -1]], dtype=object))
    with pytest.raises(ValueError):
        rep.generator("x")


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_module_relations(d):
    rep = build_irrep(d)
    E, F, H = rep.E, rep.F, rep.H
    assert _equal(H @ E - E @ H, E * 2)
    assert _equal(H @ F - F @ H, F * -2)
    assert _equal(E @ F - F @ E, H)
    lam = tensor_leaf_matrices(rep, POINT)["Lambda"]
    assert _equal(lam, identity(d) * Fraction(d * d - 1, 4))


@pytest.mark.parametrize("d", [0, -1])
def test_bad_dimension(d):
    with pytest.raises(ValueError):
        build_irrep(d)


def test_evaluate_indeterminate():
    rep = build_irrep(3)
    p = EvaluationPoint(Fraction(2), Fraction(0), Fraction(0))
    assert _equal(evaluate(a, rep, p), identity(3) * 2)


def test_check_point():
    report = check_point(2, POINT)
    assert report.passed, report.summary()
    assert report.name == "d2.p0"


def test_oracle_check_relations():
    report = oracle_check_relations([1, 2], random_points(1, seed=4), seed=4)
    assert report.passed, report.summary()
    assert {check.statement_id.split(".")[0] for check in report.checks} == {"d1", "d2"}


def test_random_points():
    points = random_points(4, seed=5, height=3)
    assert points == random_points(4, seed=5, height=3)
    for p in points:
        for v in p:
            assert abs(v.numerator) <= 3 and 1 <= v.denominator <= 3


def test_evaluate_expression():
    rep = build_irrep(3)
    value = evaluate_expression(parse("[A, B] - 2 D").expr, rep, POINT)
    assert _equal(value, zeros(3))
