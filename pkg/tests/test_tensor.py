import pytest
from hypothesis import given, settings

from racah_natural.expr import Leaf
from racah_natural.tensor import (
    TensorElement,
    a,
    b,
    c,
    canonical,
    grade_project_tensor,
    homogeneous_components,
    lambda_basis_element,
    lift,
    structural,
    tensor_multiply,
    tensor_degrees,
    usl2_name,
    verify_basis_faithfulness,
    verify_structural_laws,
)
from racah_natural.usl2 import E, F, casimir, equitable
from tests.strategies import tensor_elements


def test_indeterminates_commute_with_everything():
    assert a * b == b * a
    assert tensor_multiply(a, lift(E)) == tensor_multiply(lift(E), a)
    assert tensor_multiply(lift(E), lift(F)) - tensor_multiply(lift(F), lift(E)) == usl2_name("h")
    assert str(a * lift(E)) == "a ox e"
    assert str(a**2 * c) == "a^2 c"


def test_unknown_names():
    with pytest.raises(ValueError):
        TensorElement.indeterminate("d")
    with pytest.raises(ValueError):
        structural("Q")
    with pytest.raises(ValueError):
        usl2_name("Omega")


def test_usl2_part():
    u = a * lift(E) + lift(F) + 3 * a
    assert u.usl2_part((1, 0, 0)) == E + 3
    assert u.usl2_part((0, 0, 0)) == F
    assert [tuple(p) for p in u.abc_support()] == [(0, 0, 0), (1, 0, 0)]


def test_structural_degrees():
    R, L = structural("R"), structural("L")
    assert grade_project_tensor(R, 1) == R
    assert grade_project_tensor(L, -1) == L
    assert tensor_degrees(R * L) == [0]
    assert tensor_degrees(structural("theta")) == [0]


def test_theta_and_vartheta():
    y = usl2_name("y")
    assert structural("theta") == y - b
    assert structural("vartheta") == y + a


def test_homogeneous_components_sum_back():
    u = usl2_name("x") * usl2_name("z") + a * usl2_name("w")
    parts = homogeneous_components(u)
    total = TensorElement.zero()
    for part in parts.values():
        total = total + part
    assert total == u


def test_canonical_reads_tensor_leaves():
    assert canonical(Leaf("a") * Leaf("e")) == a * lift(E)
    assert canonical(Leaf("Lambda")) == lift(casimir())
    assert canonical(Leaf("x")) == lift(equitable("x"))


def test_lambda_basis_element_degree():
    v = lambda_basis_element(1, 0, 1, 1, 1, -2)
    assert grade_project_tensor(v, -2) == v
    assert lambda_basis_element(0, 0, 0, 0, 0, 0) == TensorElement.one()


def test_structural_laws():
    report = verify_structural_laws()
    assert report.passed, report.summary()


def test_basis_faithfulness():
    report = verify_basis_faithfulness(max_exponent=1)
    assert report.passed, report.summary()


@settings(max_examples=30, deadline=None)
@given(tensor_elements(), tensor_elements(), tensor_elements())
def test_associativity(u, v, w):
    assert (u * v) * w == u * (v * w)


@settings(max_examples=30, deadline=None)
@given(tensor_elements())
def test_casimir_commutes(u):
    assert not usl2_name("Lambda").commutator(u)
