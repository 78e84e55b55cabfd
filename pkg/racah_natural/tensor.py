"""F[a,b,c] tensor U(sl2).

Elements are stored over the basis a^r b^s c^t (x) e^i h^j f^k. The Z-grading
only looks at the U(sl2) factor, so a term has degree k - i.
"""

from fractions import Fraction
from itertools import combinations, product
from typing import NamedTuple

from .linalg import exact_rank
from .report import VerificationReport
from .sparse import SparseElement, check_exponent, format_scalar
from .usl2 import (
    UNIT,
    PBWMonomial,
    USl2Element,
    casimir,
    equitable,
    generator,
    monomial_product,
    nu,
    nu_basis_element,
    w_element,
)


class ABCMonomial(NamedTuple):
    r: int
    s: int
    t: int

    def __mul__(self, other):
        return ABCMonomial(*(check_exponent(p + q) for p, q in zip(self, other)))


ABC_UNIT = ABCMonomial(0, 0, 0)


class TensorElement(SparseElement):
    __slots__ = ()

    @classmethod
    def unit_key(cls):
        return (ABC_UNIT, UNIT)

    @staticmethod
    def key_product(k1, k2):
        abc = k1[0] * k2[0]
        return [((abc, m), c) for m, c in monomial_product(k1[1], k2[1])]

    @classmethod
    def lift(cls, u):
        """1 (x) u."""
        return cls._trusted({(ABC_UNIT, m): c for m, c in u.terms.items()})

    @classmethod
    def indeterminate(cls, name):
        try:
            exps = {"a": (1, 0, 0), "b": (0, 1, 0), "c": (0, 0, 1)}[name]
        except KeyError:
            raise ValueError(f"unknown indeterminate {name!r}, expected one of a, b, c") from None
        return cls({(ABCMonomial(*exps), UNIT): 1})

    def usl2_part(self, abc):
        """Coefficient of a^r b^s c^t as an element of U(sl2)."""
        abc = ABCMonomial(*abc)
        return USl2Element({m: c for (p, m), c in self._terms.items() if p == abc})

    def abc_support(self):
        return sorted({p for p, _ in self._terms})

    def format_key(self, key):
        p, m = key
        left = " ".join(_power(name, n) for name, n in zip("abc", p) if n)
        right = " ".join(_power(name, n) for name, n in zip("ehf", m) if n)
        if left and right:
            return f"{left} ox {right}"
        return left or right

    def latex_key(self, key):
        p, m = key
        left = "".join(_power(name, n, latex=True) for name, n in zip("abc", p) if n)
        right = "".join(_power(name, n, latex=True) for name, n in zip("ehf", m) if n)
        if left and right:
            return f"{left}\\otimes {right}"
        return left or right

    def to_structured(self):
        return [
            {"abc": list(p), "pbw": list(m), "coeff": format_scalar(c)}
            for (p, m), c in self.items()
        ]


def _power(name, n, latex=False):
    if n == 1:
        return name
    return f"{name}^{{{n}}}" if latex else f"{name}^{n}"


def tensor_multiply(u, v):
    return u * v


a = TensorElement.indeterminate("a")
b = TensorElement.indeterminate("b")
c = TensorElement.indeterminate("c")


def lift(u):
    return TensorElement.lift(u)


def usl2_name(name):
    """1 (x) g for the named element of U(sl2)."""
    if name in ("e", "h", "f"):
        return lift(generator(name))
    if name in ("x", "y", "z"):
        return lift(equitable(name))
    if name in ("nu_x", "nu_z"):
        return lift(nu(name[-1]))
    if name == "Lambda":
        return lift(casimir())
    if name == "w":
        return lift(w_element())
    raise ValueError(f"unknown U(sl2) name {name!r}")


def structural(name):
    y = usl2_name("y")
    if name == "R":
        return 2 * y * usl2_name("nu_x") + 2 * (c + a - b + 1) * usl2_name("nu_x")
    if name == "L":
        return -2 * y * usl2_name("nu_z") - 2 * (a - b - c - 1) * usl2_name("nu_z")
    if name == "theta":
        return y - b
    if name == "vartheta":
        return y + a
    raise ValueError(f"unknown structural element {name!r}, expected one of R, L, theta, vartheta")


def tensor_leaf(name):
    """Leaf resolver for tensor-side expressions."""
    if name in ("a", "b", "c"):
        return TensorElement.indeterminate(name)
    if name in ("R", "L", "theta", "vartheta"):
        return structural(name)
    return usl2_name(name)


def canonical(expr):
    """Canonical form of a tensor-side expression tree."""
    return expr.evaluate(tensor_leaf, TensorElement.one())


def grade_project_tensor(u, n):
    return type(u)._trusted({key: coeff for key, coeff in u.terms.items() if key[1].degree == n})


def tensor_degrees(u):
    return sorted({m.degree for _, m in u.terms})


def homogeneous_components(u):
    return {n: grade_project_tensor(u, n) for n in tensor_degrees(u)}


def lambda_basis_element(r, s, t, i, j, n):
    """a^r b^s c^t (x) Lambda^i y^j nu_x^n, with nu_z^{-n} when n < 0."""
    return a**r * b**s * c**t * lift(nu_basis_element(i, j, n))


def casimir_tensor():
    return usl2_name("Lambda")


def verify_structural_laws():
    report = VerificationReport("structural")
    R, L = structural("R"), structural("L")
    theta, vartheta = structural("theta"), structural("vartheta")
    y, lam = usl2_name("y"), casimir_tensor()

    for name, element, degree in (("R", R, 1), ("L", L, -1), ("theta", theta, 0), ("vartheta", vartheta, 0)):
        report.record(f"nonzero.{name}", f"{name} is nonzero", bool(element), witness="element is zero")
        report.expect_zero(f"degree.{name}", f"{name} is homogeneous of degree {degree}",
                           element - grade_project_tensor(element, degree))

    report.expect_equal("bracket.R_y", "[R,1 ox y] = R", R.commutator(y), R)
    report.expect_equal("bracket.y_L", "[1 ox y,L] = L", y.commutator(L), L)
    report.expect_equal("bracket.R_theta", "[R,theta] = R", R.commutator(theta), R)
    report.expect_equal("bracket.R_vartheta", "[R,vartheta] = R", R.commutator(vartheta), R)
    report.expect_equal("bracket.theta_L", "[theta,L] = L", theta.commutator(L), L)
    report.expect_equal("bracket.vartheta_L", "[vartheta,L] = L", vartheta.commutator(L), L)

    report.expect_equal("shift.theta_R", "theta R = R (theta - 1)", theta * R, R * (theta - 1))
    report.expect_equal("shift.vartheta_R", "vartheta R = R (vartheta - 1)", vartheta * R, R * (vartheta - 1))
    report.expect_equal("shift.theta_L", "theta L = L (theta + 1)", theta * L, L * (theta + 1))
    report.expect_equal("shift.vartheta_L", "vartheta L = L (vartheta + 1)", vartheta * L, L * (vartheta + 1))

    rl = (y + (c + a - b + 1)) * (y + (a - b - c)) * (y * (y + 1) - lam)
    lr = (y + (c + a - b)) * (y + (a - b - c - 1)) * (y * (y - 1) - lam)
    report.expect_equal("closed.RL", "RL = (y+c+a-b+1)(y+a-b-c)(y(y+1)-Lambda)", R * L, rl)
    report.expect_equal("closed.LR", "LR = (y+c+a-b)(y+a-b-c-1)(y(y-1)-Lambda)", L * R, lr)

    family = {"theta": theta, "vartheta": vartheta, "RL": R * L, "LR": L * R, "[R,L]": R.commutator(L)}
    for name in ("RL", "LR", "[R,L]"):
        value = family[name]
        report.expect_zero(f"degree.{name}", f"{name} is homogeneous of degree 0", value - grade_project_tensor(value, 0))
    for (n1, u), (n2, v) in combinations(family.items(), 2):
        report.expect_zero(f"commute.{n1}.{n2}", f"[{n1},{n2}] = 0", u.commutator(v))

    gens = {"y": y, "nu_x": usl2_name("nu_x"), "nu_z": usl2_name("nu_z"), "a": a, "b": b, "c": c}
    for name, g in gens.items():
        report.expect_zero(f"central.Lambda.{name}", f"[1 ox Lambda,{name}] = 0", lam.commutator(g))
    return report


def verify_basis_faithfulness(max_exponent=1):
    """a^r b^s c^t (x) Lambda^i y^j nu^n expand to independent vectors."""
    report = VerificationReport("tensor_basis")
    exps = range(max_exponent + 1)
    for n in range(-max_exponent, max_exponent + 1):
        family = [lambda_basis_element(r, s, t, i, j, n) for r, s, t, i, j in product(exps, repeat=5)]
        homogeneous = all(grade_project_tensor(v, n) == v for v in family)
        rank = exact_rank([v.terms for v in family])
        report.record(f"basis.{n}", f"a^r b^s c^t ox Lambda^i y^j nu^{n} are independent in degree {n}",
                      homogeneous and rank == len(family),
                      witness=f"homogeneous={homogeneous}, rank {rank} of {len(family)}")
    return report


def random_tensor(rng, max_terms=3, max_exponent=2):
    """Random nonzero element with small exponents and small integer coefficients."""
    terms = {}
    while not terms:
        for _ in range(int(rng.integers(1, max_terms + 1))):
            p = ABCMonomial(*(int(v) for v in rng.integers(0, max_exponent + 1, size=3)))
            m = PBWMonomial(*(int(v) for v in rng.integers(0, max_exponent + 1, size=3)))
            coeff = Fraction(int(rng.integers(-5, 6)), int(rng.integers(1, 4)))
            if coeff:
                terms[(p, m)] = terms.get((p, m), 0) + coeff
        terms = {k: v for k, v in terms.items() if v}
    return TensorElement(terms)
