from fractions import Fraction

import pytest

from racah_natural.expr import Leaf, Number, Power, Scaled
from racah_natural.parser import RACAH, TENSOR, ParseError, parse
from racah_natural.racah import RacahElement, normalize
from racah_natural.tensor import a, canonical, lift
from racah_natural.usl2 import E


def nf(text):
    return normalize(parse(text).expr)


def test_racah_relation_parses_to_zero():
    parsed = parse("[A,B] - 2*D")
    assert parsed.side == RACAH
    assert normalize(parsed.expr) == RacahElement.zero()


def test_leaf():
    assert parse("OmegaA").expr == Leaf("OmegaA")


def test_anticommutator():
    assert nf("{A,B}") == nf("A*B + B*A")


def test_precedence():
    assert nf("-A^2") == nf("-(A*A)")
    assert nf("2 A B") == nf("2*A*B")
    assert nf("A - -B") == nf("A + B")
    assert nf("A B^2") == nf("A*(B*B)")
    assert parse("-A^2").expr == Scaled(-1, Power(Leaf("A"), 2))


def test_rational_literals():
    assert parse("3/4").expr == Number(Fraction(3, 4))
    assert nf("1/2 D + 1/2 D") == nf("D")


def test_tensor_side():
    parsed = parse("a ox e")
    assert parsed.side == TENSOR
    assert canonical(parsed.expr) == a * lift(E)
    assert canonical(parse("a e").expr) == a * lift(E)


@pytest.mark.parametrize("text", ["A +", "(A", "[A, B", "A ^ B", "*A", ""])
def test_syntax_errors(text):
    with pytest.raises(ParseError) as info:
        parse(text)


@pytest.mark.parametrize("text", ["Q", "A x", "1/0", "A^1/2"])
def test_semantic_errors(text):
    with pytest.raises(ParseError):
        parse(text)


@pytest.mark.parametrize(
    "text", ["[A,B] - 2*D", "{A, B^2} - 1/3 C delta", "-(A + B)^2 * OmegaB", "[[A, D], C] + 2"]
)
def test_render_round_trip(text):
    expr = parse(text).expr
    assert nf(str(expr)) == normalize(expr)
