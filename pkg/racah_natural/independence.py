"""Algebraic independence and bounded-degree injectivity.

Commutative polynomials in x1..x4 are sympy polynomials over QQ. The rank of
x1^h x2^i x3^j x4^k is 5h + i + 3j + 2k; the leading monomial of
y1^r y2^s y3^t y4^u is x1^(2r+s+t+u) x2^r x3^s x4^t, and the exponents of that
monomial determine (r, s, t, u).
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import prod
from time import time
from typing import NamedTuple, Tuple

import numpy as np
import sympy
from joblib import Parallel, delayed
from tqdm import tqdm

from .linalg import coefficient_rows, exact_rank, triplets
from .natural import basis_image, generator_image
from .racah import RacahMonomial
from .report import VerificationReport
from .tensor import TensorElement, a, b, c, structural, usl2_name

x1, x2, x3, x4 = GENS = sympy.symbols("x1:5")

RANK_WEIGHTS = (5, 1, 3, 2)


class RankTieError(ValueError):
    pass


class CapLimitExceededError(ValueError):
    pass


class RankedMonomial(NamedTuple):
    h: int
    i: int
    j: int
    k: int

    @property
    def rank(self):
        return sum(w * e for w, e in zip(RANK_WEIGHTS, self))

    def __mul__(self, other):
        return RankedMonomial(*(p + q for p, q in zip(self, other)))

    def __str__(self):
        pieces = [f"x{n}^{e}" if e > 1 else f"x{n}" for n, e in enumerate(self, start=1) if e]
        return " ".join(pieces) or "1"


class QuadPoly:
    """Commutative polynomial in x1..x4 with rational coefficients."""

    def __init__(self, expr):
        self.poly = expr if isinstance(expr, sympy.Poly) else sympy.Poly(expr, *GENS, domain="QQ")

    def terms(self):
        return {
            RankedMonomial(*monom): Fraction(int(coeff.p), int(coeff.q))
            for monom, coeff in self.poly.terms()
            if coeff
        }

    def __bool__(self):
        return not self.poly.is_zero

    def __mul__(self, other):
        return QuadPoly(self.poly * other.poly)

    def __pow__(self, n):
        return QuadPoly(self.poly**n)

    def __add__(self, other):
        return QuadPoly(self.poly + other.poly)

    def __sub__(self, other):
        return QuadPoly(self.poly - other.poly)

    def __eq__(self, other):
        return isinstance(other, QuadPoly) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def evaluate(self, point):
        return self.poly.eval(dict(zip(GENS, point)))

    def substitute(self, values, one):
        """Evaluate at commuting ring elements ``values``."""
        out = one * 0
        for m, coeff in self.terms().items():
            term = one * coeff
            for value, e in zip(values, m):
                if e:
                    term = term * value**e
            out = out + term
        return out

    def __str__(self):
        return str(self.poly.as_expr())


def ys():
    y1 = (
        x1**2 * x2 + x1 * x2**2 - x1 * x2 * x3 - x1 * x2 * x4 - x1 * x3 * x4 - x2 * x3 * x4
        + x3**2 * x4 + x3 * x4**2 - x1 * x3 - x1 * x4 - x2 * x3 - x2 * x4
    )
    y2 = x1 * x3 - x1 * x4 - x2 * x3 + x2 * x4
    y3 = x1 * x4 - x1 * x2 - x3 * x4 + x2 * x3
    y4 = x1 + x2 + x3 + x4
    return tuple(QuadPoly(y) for y in (y1, y2, y3, y4))


def leading_monomial(p):
    if not p:
        raise ValueError("the zero polynomial has no leading monomial")
    terms = p.terms()
    top = max(m.rank for m in terms)
    winners = [m for m in terms if m.rank == top]
    if len(winners) > 1:
        raise RankTieError(f"monomials {', '.join(map(str, sorted(winners)))} share the top rank {top}")
    return winners[0]


def predicted_leading_monomial(r, s, t, u):
    return RankedMonomial(2 * r + s + t + u, r, s, t)


def solve_exponents(m):
    """(r, s, t, u) recovered from the leading monomial of y1^r y2^s y3^t y4^u."""
    h, i, j, k = m
    return i, j, k, h - 2 * i - j - k


def _random_point(rng, height=10):
    return [
        sympy.Rational(int(rng.integers(-height, height + 1)), int(rng.integers(1, height + 1))) for _ in GENS
    ]


def verify_leading_monomial_law(max_exp=2, seed=0):
    report = VerificationReport("leading_monomial")
    rng = np.random.default_rng(seed)
    y = ys()
    for r, s, t, u in product(range(max_exp + 1), repeat=4):
        p = y[0] ** r * y[1] ** s * y[2] ** t * y[3] ** u
        sid = f"law.{r}{s}{t}{u}"
        try:
            lead = leading_monomial(p)
        except RankTieError as err:
            report.record(sid, "leading monomial is unique", False, witness=str(err))
            continue
        expected = predicted_leading_monomial(r, s, t, u)
        report.record(sid, f"leading monomial of y1^{r} y2^{s} y3^{t} y4^{u} is {expected}", lead == expected,
                      witness=f"got {lead}")
        report.record(f"{sid}.coeff", "leading coefficient is 1", p.terms()[lead] == 1,
                      witness=f"got {p.terms()[lead]}")
        report.record(f"{sid}.solve", "exponents are recovered from the leading monomial",
                      solve_exponents(lead) == (r, s, t, u), witness=f"got {solve_exponents(lead)}")
        point = _random_point(rng)
        direct = sympy.Integer(1)
        for poly, e in zip(y, (r, s, t, u)):
            direct *= poly.evaluate(point) ** e
        report.record(f"{sid}.point", "expansion agrees with the factored product at a random point",
                      p.evaluate(point) == direct, witness=f"at {point}")
    return report


def _abc_squares():
    return a * (a + 1), b * (b + 1), c * (c + 1)


def substitution_values():
    """(1 (x) Lambda, a(a+1), b(b+1), c(c+1)) in place of x1..x4."""
    return (usl2_name("Lambda"),) + _abc_squares()


def verify_independence_substitution():
    """OmegaA, alpha, beta, delta images are y1..y4 at x = (Lambda, a(a+1), b(b+1), c(c+1))."""
    report = VerificationReport("substitution")
    values = substitution_values()
    one = TensorElement.one()
    for name, y in zip(("OmegaA", "alpha", "beta", "delta"), ys()):
        report.expect_equal(f"substitution.{name}", f"image of {name} is a polynomial in Lambda and the squares",
                            y.substitute(values, one), generator_image(name))
    for name in ("theta", "vartheta"):
        element = structural(name)
        report.expect_zero(f"commute.{name}", f"{name} commutes with Lambda and the squares",
                           sum((element.commutator(v) for v in values), TensorElement.zero()))
    return report


def _independence_family(head, max_total_degree):
    names = ("OmegaA", "alpha", "beta", "delta")
    images = [generator_image(n) for n in names]
    family = []
    for exps in product(range(max_total_degree + 1), repeat=5):
        if sum(exps) > max_total_degree:
            continue
        element = head ** exps[0]
        for image, e in zip(images, exps[1:]):
            element = element * image**e
        family.append(element)
    return family


def verify_theta_independence(max_total_degree=2):
    report = VerificationReport("theta_independence")
    for name in ("theta", "vartheta"):
        family = _independence_family(structural(name), max_total_degree)
        _, rows = coefficient_rows(family)
        rank = exact_rank(rows)
        report.record(f"{name}.rank", f"monomials in {name}, OmegaA, alpha, beta, delta of degree <= "
                      f"{max_total_degree} are independent", rank == len(family),
                      witness=f"rank {rank} of {len(family)}")
    return report


# injectivity


@dataclass(frozen=True)
class InjectivityCertificate:
    caps: Tuple[int, ...]
    dimension: int
    rank: int
    elapsed: float
    status: str

    @property
    def passed(self):
        return self.status == "pass"

    def to_structured(self):
        return {
            "caps": list(self.caps),
            "dimension": self.dimension,
            "rank": self.rank,
            "elapsed": round(self.elapsed, 3),
            "status": self.status,
            "scope": "finite-degree evidence, not a proof of injectivity",
        }

    def summary(self):
        caps = ",".join(map(str, self.caps))
        return f"injectivity caps {caps}: rank {self.rank} of {self.dimension} [{self.status.upper()}]"


def _cap_ranges(caps):
    caps = tuple(caps)
    if len(caps) != 7 or any(not isinstance(n, int) or n < 0 for n in caps):
        raise ValueError(f"caps are seven nonnegative integers (i,j,k,l,r,s,t), got {caps}")
    ranges = [range(n + 1) for n in caps]
    ranges[1] = range(min(caps[1], 1) + 1)
    return ranges


def certificate_size(caps):
    """Number of basis tuples within caps, counted without listing them."""
    return prod(len(r) for r in _cap_ranges(caps))


def certificate_tuples(caps):
    return [RacahMonomial(*m) for m in product(*_cap_ranges(caps))]


def injectivity_certificate(caps, cap_limit=2000, n_jobs=1, progress=False, dump=None):
    """Exact rank of the images of all basis elements within caps."""
    init_time = time()
    size = certificate_size(caps)
    if size > cap_limit:
        raise CapLimitExceededError(f"caps {tuple(caps)} give {size} basis elements, above the limit {cap_limit}")
    tuples = certificate_tuples(caps)
    images = Parallel(n_jobs=n_jobs)(
        delayed(basis_image)(m) for m in tqdm(tuples, desc="images", disable=not progress)
    )
    columns, rows = coefficient_rows(images)
    rank = exact_rank(rows)
    certificate = InjectivityCertificate(
        caps=tuple(caps),
        dimension=len(tuples),
        rank=rank,
        elapsed=time() - init_time,
        status="pass" if rank == len(tuples) else "fail",
    )
    if dump is not None:
        with open(dump, "w") as fh:
            fh.write(dump_header(certificate, tuples, len(columns)))
            fh.write(triplets(rows))
            fh.write("\n")
    return certificate


def dump_header(certificate, tuples, n_columns):
    lines = [
        f"# caps {' '.join(map(str, certificate.caps))}",
        f"# rows {certificate.dimension} columns {n_columns} rank {certificate.rank}",
    ]
    for n, m in enumerate(tuples):
        lines.append(f"# row {n}: {' '.join(map(str, m))} height {m.height} depth {m.depth}")
    return "\n".join(lines) + "\n"
