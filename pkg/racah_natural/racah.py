"""The Racah algebra on generators A, B, C, D.

Normal form coordinates are taken in the basis

    A^i D^j B^k OmegaA^l alpha^r delta^s beta^t,    j in {0, 1}.

Leaves that are not basis letters are replaced first:

    C      -> delta - A - B
    gamma  -> -alpha - beta
    OmegaB -> OmegaA + (alpha + beta)(delta + 1)
    OmegaC -> OmegaA + beta (delta + 1)

OmegaA, alpha, delta, beta are central and only ever add exponents. A letter is
pushed into a normal word A^i D^j B^k from the left with

    B A -> A B - 2 D
    D A -> A D - A^2 - 2 A B + 2 D + A delta - alpha
    B D -> D B - 2 A B + 2 D + B delta - B^2 + beta
    D D -> OmegaA - (B A C + C A B)/2 - A^2 - B gamma + C beta + A delta

The D exchange rules are the defining expressions of alpha and beta with C
substituted; the last rule solves the defining expression of OmegaA for D^2.
Its right side contains no D, so normalizing it once never asks for D D again.

Termination: order the non-central part of a word by (weight, inversions)
lexicographically, with weight A = B = 1, D = 2, and inversions counted against
A < D < B. Every rule replaces a word by terms that are strictly smaller, and
the measure is compatible with putting a word in a context.
"""

from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

from .expr import Anticommutator, Commutator, Expr, Leaf, Number, Sum
from .report import VerificationReport
from .sparse import ONE, SparseElement, accumulate, check_exponent, format_scalar

GENERATORS = ("A", "B", "C", "D")
CENTRAL = ("alpha", "beta", "gamma", "delta")
CASIMIRS = ("OmegaA", "OmegaB", "OmegaC")
NAMES = GENERATORS + CENTRAL + CASIMIRS

# weights used to bound random expressions
LEAF_WEIGHTS = {
    "A": 1, "B": 1, "C": 1, "D": 2,
    "alpha": 3, "beta": 3, "gamma": 3, "delta": 1,
    "OmegaA": 4, "OmegaB": 4, "OmegaC": 4,
}


class RacahMonomial(NamedTuple):
    i: int
    j: int
    k: int
    l: int  # noqa: E741
    r: int
    s: int
    t: int

    @property
    def height(self):
        return self.i + self.j

    @property
    def depth(self):
        return self.j + self.k

    @property
    def weight(self):
        return self.i + 2 * self.j + self.k + 4 * self.l + 3 * self.r + self.s + 3 * self.t

    def is_central(self):
        return not (self.i or self.j or self.k)


RACAH_UNIT = RacahMonomial(0, 0, 0, 0, 0, 0, 0)

_LETTERS = (("A", "i"), ("D", "j"), ("B", "k"), ("OmegaA", "l"), ("alpha", "r"), ("delta", "s"), ("beta", "t"))
_LATEX = {"A": "A", "D": "D", "B": "B", "OmegaA": "\\Omega", "alpha": "\\alpha", "delta": "\\delta", "beta": "\\beta"}


def _m(i, j, k, l=0, r=0, s=0, t=0):  # noqa: E741
    return RacahMonomial(check_exponent(i), j, check_exponent(k), l, r, s, t)


def basis_tuple(v):
    """Validate a 7-tuple (i,j,k,l,r,s,t) of the basis."""
    v = tuple(v)
    if len(v) != 7 or any(not isinstance(n, int) or n < 0 for n in v):
        raise ValueError(f"basis tuples have seven nonnegative integer entries, got {v}")
    if v[1] not in (0, 1):
        raise ValueError(f"basis tuples need j in {{0, 1}}, got j = {v[1]}")
    return RacahMonomial(*(check_exponent(n) for n in v))


def _shift_a(items):
    return [(m._replace(i=check_exponent(m.i + 1)), c) for m, c in items]


@lru_cache(maxsize=None)
def _left_times(letter, i, j, k):
    """letter * A^i D^j B^k; central exponents in the keys are offsets."""
    if letter == "A":
        return ((_m(i + 1, j, k), ONE),)
    out = {}

    def add(items, scale=1):
        for m, c in items:
            accumulate(out, m, c * scale)

    if letter == "B":
        if i:
            add(_shift_a(_left_times("B", i - 1, j, k)))
            add(_left_times("D", i - 1, j, k), -2)
        elif not j:
            return ((_m(0, 0, k + 1), ONE),)
        else:
            add([
                (_m(0, 1, k + 1), ONE),
                (_m(1, 0, k + 1), Fraction(-2)),
                (_m(0, 1, k), Fraction(2)),
                (_m(0, 0, k + 1, s=1), ONE),
                (_m(0, 0, k + 2), -ONE),
                (_m(0, 0, k, t=1), ONE),
            ])
        return tuple(out.items())

    if letter == "D":
        if i:
            add(_shift_a(_left_times("D", i - 1, j, k)))
            add(_shift_a(_left_times("B", i - 1, j, k)), -2)
            add(_left_times("D", i - 1, j, k), 2)
            add([
                (_m(i + 1, j, k), -ONE),
                (_m(i, j, k, s=1), ONE),
                (_m(i - 1, j, k, r=1), -ONE),
            ])
        elif not j:
            return ((_m(0, 1, k), ONE),)
        else:
            for m, c in _d_squared():
                accumulate(out, m._replace(k=check_exponent(m.k + k)), c)
        return tuple(out.items())
    raise ValueError(f"unknown Racah letter {letter!r}")


@lru_cache(maxsize=None)
def monomial_product(m1, m2):
    current = {m2: ONE}
    for letter in "B" * m1.k + "D" * m1.j + "A" * m1.i:
        nxt = {}
        for m, c in current.items():
            for m_out, c_out in _left_times(letter, m.i, m.j, m.k):
                key = RacahMonomial(
                    m_out.i, m_out.j, m_out.k,
                    m.l + m_out.l, m.r + m_out.r, m.s + m_out.s, m.t + m_out.t,
                )
                accumulate(nxt, key, c * c_out)
        current = nxt
    if m1.l or m1.r or m1.s or m1.t:
        current = {
            m._replace(
                l=check_exponent(m.l + m1.l),
                r=check_exponent(m.r + m1.r),
                s=check_exponent(m.s + m1.s),
                t=check_exponent(m.t + m1.t),
            ): c
            for m, c in current.items()
        }
    return tuple(current.items())


class RacahElement(SparseElement):
    """Normal form coordinates of an element of the Racah algebra."""

    __slots__ = ()

    @classmethod
    def unit_key(cls):
        return RACAH_UNIT

    @staticmethod
    def key_product(k1, k2):
        return monomial_product(k1, k2)

    @classmethod
    def basis(cls, *exponents):
        return cls({basis_tuple(exponents): ONE})

    def ordered_items(self):
        return sorted(self._terms.items(), reverse=True)

    def format_key(self, key):
        return " ".join(_power(name, n) for (name, _), n in zip(_LETTERS, key) if n)

    def latex_key(self, key):
        return "".join(_power(_LATEX[name], n, latex=True) for (name, _), n in zip(_LETTERS, key) if n)

    def max_j(self):
        return max((m.j for m in self._terms), default=0)

    def is_central_only(self):
        return all(m.is_central() and not m.l for m in self._terms)

    def to_structured(self):
        return [{"tuple": list(m), "coeff": format_scalar(c)} for m, c in self.items()]

    def to_expr(self):
        """Read the normal form back as an expression tree."""
        if not self._terms:
            return Number(Fraction(0))
        terms = [basis_expr(m) * c if c != 1 else basis_expr(m) for m, c in self.items()]
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))


def _power(name, n, latex=False):
    if n == 1:
        return name
    return f"{name}^{{{n}}}" if latex else f"{name}^{n}"


def basis_expr(m):
    factors = [Leaf(name) ** n if n > 1 else Leaf(name) for (name, _), n in zip(_LETTERS, m) if n]
    if not factors:
        return Number(ONE)
    out = factors[0]
    for factor in factors[1:]:
        out = out * factor
    return out


# leaves

A = Leaf("A")
B = Leaf("B")
C = Leaf("C")
D = Leaf("D")
alpha = Leaf("alpha")
beta = Leaf("beta")
gamma = Leaf("gamma")
delta = Leaf("delta")
OmegaA = Leaf("OmegaA")
OmegaB = Leaf("OmegaB")
OmegaC = Leaf("OmegaC")

_D_SQUARED = OmegaA - (B * A * C + C * A * B) / 2 - A**2 - B * gamma + C * beta + A * delta


@lru_cache(maxsize=None)
def _d_squared():
    return tuple(normalize(_D_SQUARED).terms.items())


@lru_cache(maxsize=None)
def racah_leaf(name):
    basic = {
        "A": _m(1, 0, 0), "D": _m(0, 1, 0), "B": _m(0, 0, 1),
        "OmegaA": _m(0, 0, 0, l=1), "alpha": _m(0, 0, 0, r=1),
        "delta": _m(0, 0, 0, s=1), "beta": _m(0, 0, 0, t=1),
    }
    if name in basic:
        return RacahElement({basic[name]: ONE})
    if name == "C":
        return racah_leaf("delta") - racah_leaf("A") - racah_leaf("B")
    if name == "gamma":
        return -racah_leaf("alpha") - racah_leaf("beta")
    if name == "OmegaB":
        return racah_leaf("OmegaA") + (racah_leaf("alpha") + racah_leaf("beta")) * (racah_leaf("delta") + 1)
    if name == "OmegaC":
        return racah_leaf("OmegaA") + racah_leaf("beta") * (racah_leaf("delta") + 1)
    raise ValueError(f"unknown Racah generator {name!r}, expected one of {', '.join(NAMES)}")


@lru_cache(maxsize=4096)
def _normalize_cached(expr):
    return expr.evaluate(racah_leaf, RacahElement.one())


def normalize(expr):
    if isinstance(expr, RacahElement):
        return expr
    return _normalize_cached(expr)


def casimir_element(which):
    """Defining expression tree of OmegaA, OmegaB or OmegaC."""
    if which == "A":
        return D**2 + (B * A * C + C * A * B) / 2 + A**2 + B * gamma - C * beta - A * delta
    if which == "B":
        return D**2 + (C * B * A + A * B * C) / 2 + B**2 + C * alpha - A * gamma - B * delta
    if which == "C":
        return D**2 + (A * C * B + B * C * A) / 2 + C**2 + A * beta - B * alpha - C * delta
    raise ValueError(f"unknown Casimir element {which!r}, expected A, B or C")


def casimir_difference(which):
    """Omega_which - OmegaA in normal form; it lies in the span of alpha^r delta^s beta^t."""
    return normalize(casimir_element(which)) - normalize(casimir_element("A"))


def bilinear_form(u, v):
    """Coefficient of the basis element v in the normal form of u."""
    return normalize(u).coefficient(basis_tuple(v))


def check_centrality(expr, label=None):
    label = label or str(expr)
    report = VerificationReport(f"centrality.{label}")
    for g in GENERATORS:
        report.expect_zero(f"{label}.{g}", f"[{label},{g}] = 0", normalize(Commutator(expr, Leaf(g))))
    return report


def verify_relations():
    """The defining relations and the substitution rules hold in normal form."""
    report = VerificationReport("racah_relations")
    zero_checks = [
        ("relation.AB", "[A,B] = 2D", Commutator(A, B) - 2 * D),
        ("relation.BC", "[B,C] = 2D", Commutator(B, C) - 2 * D),
        ("relation.CA", "[C,A] = 2D", Commutator(C, A) - 2 * D),
        ("relation.alpha", "alpha = [A,D] + AC - BA", alpha - (Commutator(A, D) + A * C - B * A)),
        ("relation.beta", "beta = [B,D] + BA - CB", beta - (Commutator(B, D) + B * A - C * B)),
        ("relation.gamma", "gamma = [C,D] + CB - AC", gamma - (Commutator(C, D) + C * B - A * C)),
        ("relation.delta", "delta = A + B + C", delta - (A + B + C)),
        ("relation.central_sum", "alpha + beta + gamma = 0", alpha + beta + gamma),
    ]
    for sid, citation, expr in zero_checks:
        report.expect_zero(sid, citation, normalize(expr))

    report.expect_equal("normal.BA", "B A = A B - 2 D", normalize(B * A),
                        RacahElement({_m(1, 0, 1): 1, _m(0, 1, 0): -2}))
    report.expect_equal("normal.OmegaA", "OmegaA is a basis element", normalize(casimir_element("A")),
                        RacahElement.basis(0, 0, 0, 1, 0, 0, 0))
    for which in ("B", "C"):
        diff = casimir_difference(which)
        report.record(f"casimir_class.{which}", f"Omega{which} - OmegaA is a polynomial in alpha, beta, delta",
                      diff.is_central_only(), witness=str(diff))
        report.expect_equal(f"casimir_leaf.{which}", f"Omega{which} expression equals its rewrite",
                            normalize(casimir_element(which)), normalize(Leaf(f"Omega{which}")))
    report.expect_equal("casimir_difference.B", "OmegaB - OmegaA = (alpha + beta)(delta + 1)",
                        casimir_difference("B"), normalize((alpha + beta) * (delta + 1)))
    report.expect_equal("casimir_difference.C", "OmegaC - OmegaA = beta (delta + 1)",
                        casimir_difference("C"), normalize(beta * (delta + 1)))
    return report


# random inputs for the oracles


def _random_scalar(rng, height=5):
    num = int(rng.integers(-height, height + 1)) or 1
    return Fraction(num, int(rng.integers(1, height + 1)))


def _random_leaf(rng, budget):
    names = [name for name, w in LEAF_WEIGHTS.items() if w <= budget]
    choice = int(rng.integers(0, len(names) + 1))
    if choice == len(names):
        return Number(_random_scalar(rng))
    return Leaf(names[choice])


def random_expression(rng, max_depth=6, max_weight=6):
    """Random tree of depth at most max_depth whose degree stays within max_weight."""
    if max_depth <= 1 or max_weight < 2 or rng.random() < 0.25:
        return _random_leaf(rng, max_weight)
    kind = rng.choice(["sum", "product", "scaled", "commutator", "anticommutator", "power"])
    sub = max_depth - 1
    if kind == "sum":
        return Sum(tuple(random_expression(rng, sub, max_weight) for _ in range(int(rng.integers(2, 4)))))
    if kind == "scaled":
        return random_expression(rng, sub, max_weight) * _random_scalar(rng)
    if kind == "power":
        n = int(rng.integers(0, 3))
        return random_expression(rng, sub, max_weight // max(n, 1)) ** n
    w = int(rng.integers(1, max_weight))
    left = random_expression(rng, sub, w)
    right = random_expression(rng, sub, max_weight - w)
    if kind == "product":
        return left * right
    if kind == "commutator":
        return Commutator(left, right)
    return Anticommutator(left, right)


def random_element(rng, max_terms=3, max_weight=4):
    """Random nonzero normal form whose basis monomials have weight at most max_weight."""
    terms = {}
    while not terms:
        for _ in range(int(rng.integers(1, max_terms + 1))):
            while True:
                exps = [int(v) for v in rng.integers(0, 3, size=7)]
                exps[1] = min(exps[1], 1)
                m = RacahMonomial(*exps)
                if m.weight <= max_weight:
                    break
            accumulate(terms, m, _random_scalar(rng))
    return RacahElement(terms)


def as_expr(u):
    """Expression tree for an Expr or a RacahElement."""
    return u if isinstance(u, Expr) else u.to_expr()
