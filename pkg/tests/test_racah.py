from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from racah_natural.expr import Commutator, Leaf
from racah_natural.racah import (
    A,
    B,
    C,
    D,
    RacahElement,
    RacahMonomial,
    alpha,
    basis_expr,
    basis_tuple,
    beta,
    bilinear_form,
    casimir_difference,
    casimir_element,
    check_centrality,
    delta,
    gamma,
    normalize,
    random_element,
    random_expression,
    verify_relations,
)
from tests.strategies import racah_elements


def test_ba_rewrites_to_ab_minus_2d():
    nf = normalize(B * A)
    assert nf == RacahElement({(1, 0, 1, 0, 0, 0, 0): 1, (0, 1, 0, 0, 0, 0, 0): -2})
    assert str(nf) == "A B - 2 D"


def test_substitutions():
    assert normalize(C) == normalize(delta - A - B)
    assert normalize(gamma) == normalize(-alpha - beta)
    assert normalize(alpha + beta + gamma) == RacahElement.zero()


def test_commutator_relations():
    for u, v in ((A, B), (B, C), (C, A)):
        assert normalize(Commutator(u, v) - 2 * D) == RacahElement.zero()


def test_omega_a_is_a_basis_element():
    assert normalize(casimir_element("A")) == RacahElement.basis(0, 0, 0, 1, 0, 0, 0)
    assert normalize(Leaf("OmegaA")) == RacahElement.basis(0, 0, 0, 1, 0, 0, 0)


def test_casimir_differences_are_central_polynomials():
    assert casimir_difference("B") == normalize((alpha + beta) * (delta + 1))
    assert casimir_difference("C") == normalize(beta * (delta + 1))
    assert casimir_difference("B").is_central_only()
    with pytest.raises(ValueError):
        casimir_element("D")


def test_bilinear_form():
    assert bilinear_form(A * B, (1, 0, 1, 0, 0, 0, 0)) == 1
    assert bilinear_form(B * A, (0, 1, 0, 0, 0, 0, 0)) == -2
    assert bilinear_form(B * A, (0, 0, 0, 0, 0, 0, 0)) == 0
    for v in ((2, 1, 3, 1, 0, 2, 1), (0, 0, 0, 0, 0, 0, 0), (1, 1, 0, 0, 1, 0, 0)):
        assert bilinear_form(basis_expr(RacahMonomial(*v)), v) == 1


def test_bilinear_form_rejects_bad_tuples():
    with pytest.raises(ValueError):
        bilinear_form(A, (0, 2, 0, 0, 0, 0, 0))
    with pytest.raises(ValueError):
        basis_tuple((1, 0, 0))
    with pytest.raises(ValueError):
        basis_tuple((-1, 0, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("name", ["alpha", "beta", "gamma", "delta", "OmegaA", "OmegaB", "OmegaC"])
def test_central_letters(name):
    report = check_centrality(Leaf(name))
    assert report.passed, report.summary()


@pytest.mark.parametrize("which", "ABC")
def test_casimir_trees_are_central(which):
    report = check_centrality(casimir_element(which), f"Omega{which}")
    assert report.passed, report.summary()


def test_a_is_not_central():
    report = check_centrality(A)
    assert not report.passed
    assert [check.statement_id for check in report.failures] == ["A.B", "A.C", "A.D"]


def test_d_powers_stay_in_the_basis():
    for n in range(2, 5):
        assert normalize(D**n).max_j() <= 1


def test_idempotence():
    nf = normalize(D * D * A + Fraction(1, 3) * B * D * C)
    assert normalize(nf.to_expr()) == nf


def test_relations_report():
    report = verify_relations()
    assert report.passed, report.summary()


def test_unknown_leaf():
    with pytest.raises(ValueError):
        normalize(Leaf("Q"))


def test_random_expressions_respect_depth():
    rng = np.random.default_rng(3)
    for _ in range(50):
        expr = random_expression(rng, max_depth=4, max_weight=4)
        assert expr.depth() <= 4


def test_random_element_is_nonzero():
    rng = np.random.default_rng(5)
    for _ in range(20):
        u = random_element(rng, max_weight=4)
        assert u
        assert all(m.weight <= 4 for m in u.terms)


@settings(max_examples=20, deadline=None)
@given(racah_elements(), racah_elements(), racah_elements())
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=20, deadline=None)
@given(racah_elements(central=1), racah_elements())
def test_central_part_commutes_with_generators(u, v):
    central = RacahElement({m: c for m, c in u.terms.items() if m.is_central()})
    assert central * v == v * central
