"""Finite sparse linear combinations with exact rational coefficients.

Every algebra element in the package is a map from a hashable, totally ordered
key (a monomial) to a nonzero ``Fraction``. Subclasses only say how two keys
multiply and which key is the unit.
"""

from fractions import Fraction
from numbers import Rational

ZERO = Fraction(0)
ONE = Fraction(1)

# Exponents are stored as machine-width integers in the exported formats.
MAX_EXPONENT = 2**31 - 1


class ExponentOverflowError(OverflowError):
    pass


def check_exponent(n):
    if n < 0:
        raise ValueError(f"exponents must be nonnegative, got {n}")
    if n > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {n} exceeds the machine-width limit {MAX_EXPONENT}")
    return n


def accumulate(terms, key, coeff):
    """terms[key] += coeff, dropping the key when the sum vanishes."""
    if not coeff:
        return
    total = terms.get(key, ZERO) + coeff
    if total:
        terms[key] = total
    else:
        del terms[key]


def format_scalar(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class SparseElement:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for key, coeff in items:
                accumulate(clean, key, Fraction(coeff))
        self._terms = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # subclass interface

    @classmethod
    def unit_key(cls):
        raise NotImplementedError

    @staticmethod
    def key_product(k1, k2):
        """Iterable of (key, coeff) pairs for the product of two basis monomials."""
        raise NotImplementedError

    # constructors

    @classmethod
    def zero(cls):
        return cls._trusted({})

    @classmethod
    def one(cls):
        return cls._trusted({cls.unit_key(): ONE})

    @classmethod
    def scalar(cls, q):
        q = Fraction(q)
        return cls._trusted({cls.unit_key(): q} if q else {})

    @classmethod
    def monomial(cls, key, coeff=1):
        return cls({key: coeff})

    # access

    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def keys(self):
        return sorted(self._terms)

    def coefficient(self, key):
        return self._terms.get(key, ZERO)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_scalar(self):
        return not self._terms or set(self._terms) == {self.unit_key()}

    # arithmetic

    def _coerce(self, other):
        if isinstance(other, type(self)):
            return other
        if isinstance(other, (int, Rational)):
            return type(self).scalar(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self._terms)
        for key, coeff in other._terms.items():
            accumulate(out, key, coeff)
        return type(self)._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._trusted({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, q):
        q = Fraction(q)
        if not q:
            return type(self).zero()
        return type(self)._trusted({k: c * q for k, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, type(self)):
            return NotImplemented
        out = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                c12 = c1 * c2
                for key, coeff in self.key_product(k1, k2):
                    accumulate(out, key, c12 * coeff)
        return type(self)._trusted(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, q):
        if isinstance(q, (int, Rational)):
            return self.scale(ONE / Fraction(q))
        return NotImplemented

    def __pow__(self, n):
        check_exponent(n)
        result = type(self).one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def commutator(self, other):
        return self * other - other * self

    def anticommutator(self, other):
        return self * other + other * self

    # comparison

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    # rendering

    def format_key(self, key):
        raise NotImplementedError

    def latex_key(self, key):
        raise NotImplementedError

    def ordered_items(self):
        return self.items()

    def _render(self, fmt_key, times=" "):
        if not self._terms:
            return "0"
        pieces = []
        for key, coeff in self.ordered_items():
            body = fmt_key(key)
            mag = abs(coeff)
            if not body:
                text = format_scalar(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{format_scalar(mag)}{times}{body}"
            if not pieces:
                pieces.append(f"-{text}" if coeff < 0 else text)
            else:
                pieces.append(f"- {text}" if coeff < 0 else f"+ {text}")
        return " ".join(pieces)

    def __str__(self):
        return self._render(self.format_key)

    def to_latex(self):
        return _latex_fractions(self._render(self.latex_key, times=""))

    def __repr__(self):
        return f"{type(self).__name__}({self})"


def _latex_fractions(text):
    # p/q coefficients become \frac{p}{q}
    out = []
    for token in text.split(" "):
        head, sep, tail = token.partition("/")
        if sep and head.lstrip("-").isdigit():
            digits = "".join(ch for ch in tail if ch.isdigit())
            rest = tail[len(digits):]
            sign = "-" if head.startswith("-") else ""
            token = f"{sign}\\frac{{{head.lstrip('-')}}}{{{digits}}}{rest}"
        out.append(token)
    return " ".join(out)
