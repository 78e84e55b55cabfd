"""Text grammar for Racah and tensor-side expressions.

Precedence, tightest first: ``^``, then juxtaposition / ``*`` / ``ox``, then
unary minus, then binary ``+`` and ``-``. ``[u, v]`` is the commutator and
``{u, v}`` the anticommutator. Literals are integers or ``p/q``.
"""

import re
from fractions import Fraction

import lark
from lark.exceptions import UnexpectedEOF, UnexpectedInput, VisitError

from .expr import Leaf, Number, anticommutator, commutator

GRAMMAR = r"""
?start: sum

?sum: neg
    | sum "+" neg           -> add
    | sum "-" neg           -> sub

?neg: product
    | "-" neg               -> negate

?product: power
    | product "*" power     -> mul
    | product "ox" power    -> mul
    | product power         -> mul

?power: atom
      | atom "^" NUMBER     -> pow

?atom: NUMBER                   -> number
     | NAME                     -> name
     | "(" sum ")"
     | "[" sum "," sum "]"      -> commutator
     | "{" sum "," sum "}"      -> anticommutator

NUMBER: /\d+(\/\d+)?/
NAME: /[A-Za-z_][A-Za-z0-9_]*/

%import common.WS
%ignore WS
"""

RACAH_NAMES = frozenset(["A", "B", "C", "D", "alpha", "beta", "gamma", "delta", "OmegaA", "OmegaB", "OmegaC"])
TENSOR_NAMES = frozenset(
    ["x", "y", "z", "e", "f", "h", "w", "Lambda", "nu_x", "nu_z", "a", "b", "c", "R", "L", "theta", "vartheta"]
)

RACAH = "racah"
TENSOR = "tensor"


class ParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = f" at line {line}, column {column}" if line is not None else ""
        super().__init__(f"{message}{where}")


class ParsedExpression:
    """An expression tree together with the algebra it lives in."""

    def __init__(self, expr, side):
        self.expr = expr
        self.side = side

    def __repr__(self):
        return f"ParsedExpression({self.side}: {self.expr})"


class _ToExpr(lark.Transformer):
    def __init__(self):
        super().__init__()
        self.side = None

    def number(self, children):
        return Number(_fraction(children[0]))

    def name(self, children):
        token = children[0]
        name = str(token)
        if name in RACAH_NAMES:
            side = RACAH
        elif name in TENSOR_NAMES:
            side = TENSOR
        else:
            raise ParseError(f"unknown identifier {name!r}", token.line, token.column)
        if self.side is None:
            self.side = side
        elif side != self.side:
            raise ParseError(
                f"identifier {name!r} mixes Racah and tensor-side names in one expression", token.line, token.column
            )
        return Leaf(name)

    def add(self, children):
        return children[0] + children[1]

    def sub(self, children):
        return children[0] - children[1]

    def negate(self, children):
        return -children[0]

    def mul(self, children):
        return children[0] * children[1]

    def pow(self, children):
        base, token = children
        if "/" in token:
            raise ParseError(f"exponent must be a nonnegative integer, got {token}", token.line, token.column)
        return base ** int(token)

    def commutator(self, children):
        return commutator(children[0], children[1])

    def anticommutator(self, children):
        return anticommutator(children[0], children[1])


def _fraction(token):
    text = str(token)
    if re.search(r"/0+$", text):
        raise ParseError(f"zero denominator in {text}", token.line, token.column)
    return Fraction(text)


_parser = lark.Lark(GRAMMAR, start="start", parser="lalr")


def parse(text):
    """Parse ``text`` into a ParsedExpression; raises ParseError."""
    try:
        tree = _parser.parse(text)
    except UnexpectedEOF:
        raise ParseError("unexpected end of input", 1, len(text) + 1) from None
    except UnexpectedInput as err:
        raise ParseError(f"syntax error near {_context(text, err)!r}", err.line, err.column) from None
    transformer = _ToExpr()
    try:
        expr = transformer.transform(tree)
    except VisitError as err:
        if isinstance(err.orig_exc, (ValueError, OverflowError)):
            raise err.orig_exc from None
        raise
    return ParsedExpression(expr, transformer.side or RACAH)


def _context(text, err):
    try:
        return err.get_context(text, span=10).splitlines()[0].strip()
    except Exception:
        return text
