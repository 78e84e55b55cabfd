"""Free expression trees shared by the Racah and tensor sides.

Trees are immutable and hashable, so evaluations can be memoized per subtree.
``evaluate`` is generic over the target: algebra elements use ``*`` for the
product, matrices pass ``mul=numpy.matmul``.
"""

import operator
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Tuple

from .sparse import check_exponent, format_scalar

# render precedence
_SUM, _NEG, _PRODUCT, _POWER, _ATOM = range(5)


class Expr:
    __slots__ = ()

    def __add__(self, other):
        other = as_expr(other)
        return Sum(_flatten(Sum, self) + _flatten(Sum, other))

    def __radd__(self, other):
        return as_expr(other) + self

    def __neg__(self):
        return Scaled(Fraction(-1), self)

    def __sub__(self, other):
        return self + (-as_expr(other))

    def __rsub__(self, other):
        return as_expr(other) - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return Scaled(Fraction(other), self)
        other = as_expr(other)
        return Product(_flatten(Product, self) + _flatten(Product, other))

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return Scaled(Fraction(other), self)
        return as_expr(other) * self

    def __truediv__(self, q):
        return Scaled(1 / Fraction(q), self)

    def __pow__(self, n):
        return Power(self, check_exponent(int(n)))

    def evaluate(self, leaf, one, mul=operator.mul):
        raise NotImplementedError

    def leaves(self):
        raise NotImplementedError

    def depth(self):
        raise NotImplementedError

    def render(self):
        raise NotImplementedError

    @property
    def precedence(self):
        return _ATOM

    def wrapped(self, level):
        text = self.render()
        return f"({text})" if self.precedence < level else text

    def __str__(self):
        return self.render()


def as_expr(value):
    if isinstance(value, Expr):
        return value
    if isinstance(value, Rational):
        return Number(Fraction(value))
    raise TypeError(f"cannot use {type(value).__name__} in an expression")


def _flatten(cls, expr):
    return expr.children if isinstance(expr, cls) else (expr,)


@dataclass(frozen=True)
class Leaf(Expr):
    name: str

    def evaluate(self, leaf, one, mul=operator.mul):
        return leaf(self.name)

    def leaves(self):
        return {self.name}

    def depth(self):
        return 1

    def render(self):
        return self.name


@dataclass(frozen=True)
class Number(Expr):
    value: Fraction

    def evaluate(self, leaf, one, mul=operator.mul):
        return one * self.value

    def leaves(self):
        return set()

    def depth(self):
        return 1

    @property
    def precedence(self):
        return _ATOM if self.value >= 0 else _NEG

    def render(self):
        return format_scalar(self.value)


@dataclass(frozen=True)
class Sum(Expr):
    children: Tuple[Expr, ...]

    def evaluate(self, leaf, one, mul=operator.mul):
        values = [child.evaluate(leaf, one, mul) for child in self.children]
        total = values[0]
        for value in values[1:]:
            total = total + value
        return total

    def leaves(self):
        return set().union(*(child.leaves() for child in self.children))

    def depth(self):
        return 1 + max(child.depth() for child in self.children)

    @property
    def precedence(self):
        return _SUM

    def render(self):
        pieces = [self.children[0].wrapped(_NEG)]
        for child in self.children[1:]:
            text = child.wrapped(_NEG)
            pieces.append(f"- {text[1:].lstrip()}" if text.startswith("-") else f"+ {text}")
        return " ".join(pieces)


@dataclass(frozen=True)
class Product(Expr):
    children: Tuple[Expr, ...]

    def evaluate(self, leaf, one, mul=operator.mul):
        values = [child.evaluate(leaf, one, mul) for child in self.children]
        total = values[0]
        for value in values[1:]:
            total = mul(total, value)
        return total

    def leaves(self):
        return set().union(*(child.leaves() for child in self.children))

    def depth(self):
        return 1 + max(child.depth() for child in self.children)

    @property
    def precedence(self):
        return _PRODUCT

    def render(self):
        return " * ".join(child.wrapped(_POWER) for child in self.children)


@dataclass(frozen=True)
class Scaled(Expr):
    coeff: Fraction
    child: Expr

    def evaluate(self, leaf, one, mul=operator.mul):
        return self.child.evaluate(leaf, one, mul) * self.coeff

    def leaves(self):
        return self.child.leaves()

    def depth(self):
        return 1 + self.child.depth()

    @property
    def precedence(self):
        return _NEG if self.coeff < 0 else _PRODUCT

    def render(self):
        body = self.child.wrapped(_POWER)
        mag = abs(self.coeff)
        text = body if mag == 1 else f"{format_scalar(mag)} * {body}"
        return f"-{text}" if self.coeff < 0 else text


@dataclass(frozen=True)
class Commutator(Expr):
    left: Expr
    right: Expr

    def evaluate(self, leaf, one, mul=operator.mul):
        u = self.left.evaluate(leaf, one, mul)
        v = self.right.evaluate(leaf, one, mul)
        return mul(u, v) - mul(v, u)

    def leaves(self):
        return self.left.leaves() | self.right.leaves()

    def depth(self):
        return 1 + max(self.left.depth(), self.right.depth())

    def render(self):
        return f"[{self.left.render()}, {self.right.render()}]"


@dataclass(frozen=True)
class Anticommutator(Expr):
    left: Expr
    right: Expr

    def evaluate(self, leaf, one, mul=operator.mul):
        u = self.left.evaluate(leaf, one, mul)
        v = self.right.evaluate(leaf, one, mul)
        return mul(u, v) + mul(v, u)

    def leaves(self):
        return self.left.leaves() | self.right.leaves()

    def depth(self):
        return 1 + max(self.left.depth(), self.right.depth())

    def render(self):
        return f"{{{self.left.render()}, {self.right.render()}}}"


@dataclass(frozen=True)
class Power(Expr):
    base: Expr
    exponent: int

    def evaluate(self, leaf, one, mul=operator.mul):
        value = self.base.evaluate(leaf, one, mul)
        result = one
        for _ in range(self.exponent):
            result = mul(result, value)
        return result

    def leaves(self):
        return self.base.leaves()

    def depth(self):
        return 1 + self.base.depth()

    @property
    def precedence(self):
        return _POWER

    def render(self):
        return f"{self.base.wrapped(_ATOM)}^{self.exponent}"


def commutator(u, v):
    return Commutator(as_expr(u), as_expr(v))


def anticommutator(u, v):
    return Anticommutator(as_expr(u), as_expr(v))


def leaf(name):
    return Leaf(name)
