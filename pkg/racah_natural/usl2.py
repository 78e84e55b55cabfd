"""U(sl2) in the PBW basis e^i h^j f^k.

Products are normalized by rewriting out-of-order adjacent letters with

    f e -> e f - h,     h e -> e h + 2 e,     f h -> h f + 2 f.

A letter is pushed into an ordered monomial from the left. ``h`` only has to
cross the e-block and ``f`` first crosses the e-block, then the h-block, so each
recursive call below lowers the pair (length of the e-block still to cross,
length of the h-block still to cross) lexicographically. That is the
well-founded measure; every branch bottoms out at an already ordered word.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple

from .linalg import exact_rank
from .report import VerificationReport
from .sparse import ONE, SparseElement, accumulate, check_exponent, format_scalar


class PBWMonomial(NamedTuple):
    i: int
    j: int
    k: int

    @property
    def degree(self):
        return self.k - self.i


UNIT = PBWMonomial(0, 0, 0)


def _shift_e(m, by=1):
    return PBWMonomial(check_exponent(m.i + by), m.j, m.k)


@lru_cache(maxsize=None)
def _letter_times(letter, mono):
    """letter * e^i h^j f^k as a tuple of (PBWMonomial, Fraction)."""
    i, j, k = mono
    out = {}
    if letter == "e":
        return ((_shift_e(mono), ONE),)
    if letter == "h":
        if i == 0:
            return ((PBWMonomial(0, check_exponent(j + 1), k), ONE),)
        # h e = e h + 2 e
        rest = PBWMonomial(i - 1, j, k)
        for m, c in _letter_times("h", rest):
            accumulate(out, _shift_e(m), c)
        accumulate(out, mono, Fraction(2))
        return tuple(out.items())
    if letter == "f":
        if i > 0:
            # f e = e f - h
            rest = PBWMonomial(i - 1, j, k)
            for m, c in _letter_times("f", rest):
                accumulate(out, _shift_e(m), c)
            for m, c in _letter_times("h", rest):
                accumulate(out, m, -c)
            return tuple(out.items())
        if j > 0:
            # f h = h f + 2 f
            rest = PBWMonomial(0, j - 1, k)
            for m, c in _letter_times("f", rest):
                for m2, c2 in _letter_times("h", m):
                    accumulate(out, m2, c * c2)
                accumulate(out, m, 2 * c)
            return tuple(out.items())
        return ((PBWMonomial(0, 0, check_exponent(k + 1)), ONE),)
    raise ValueError(f"unknown U(sl2) letter {letter!r}")


@lru_cache(maxsize=None)
def monomial_product(m1, m2):
    """(e^i h^j f^k) * m2 in PBW form."""
    current = {m2: ONE}
    for letter in "f" * m1.k + "h" * m1.j:
        nxt = {}
        for m, c in current.items():
            for m_out, c_out in _letter_times(letter, m):
                accumulate(nxt, m_out, c * c_out)
        current = nxt
    if m1.i:
        current = {_shift_e(m, m1.i): c for m, c in current.items()}
    return tuple(current.items())


class USl2Element(SparseElement):
    __slots__ = ()

    @classmethod
    def unit_key(cls):
        return UNIT

    @staticmethod
    def key_product(k1, k2):
        return monomial_product(k1, k2)

    @classmethod
    def pbw(cls, i, j, k, coeff=1):
        return cls({PBWMonomial(check_exponent(i), check_exponent(j), check_exponent(k)): coeff})

    def format_key(self, key):
        return " ".join(_power_text(name, n) for name, n in zip("ehf", key) if n)

    def latex_key(self, key):
        return "".join(_power_latex(name, n) for name, n in zip("ehf", key) if n)

    def to_structured(self):
        return [{"pbw": list(m), "coeff": format_scalar(c)} for m, c in self.items()]


def _power_text(name, n):
    return name if n == 1 else f"{name}^{n}"


def _power_latex(name, n):
    return name if n == 1 else f"{name}^{{{n}}}"


def pbw_multiply(u, v):
    return u * v


def commutator(u, v):
    return u * v - v * u


# generators and distinguished elements

E = USl2Element.pbw(1, 0, 0)
H = USl2Element.pbw(0, 1, 0)
F = USl2Element.pbw(0, 0, 1)

_HALF = Fraction(1, 2)


def generator(name):
    try:
        return {"e": E, "h": H, "f": F}[name]
    except KeyError:
        raise ValueError(f"unknown standard generator {name!r}, expected one of e, h, f") from None


def equitable(name):
    if name == "x":
        return -F - H * _HALF
    if name == "y":
        return H * _HALF
    if name == "z":
        return E - H * _HALF
    raise ValueError(f"unknown equitable generator {name!r}, expected one of x, y, z")


def nu(name):
    if name == "x":
        return F * _HALF
    if name == "z":
        return E * _HALF
    raise ValueError(f"unknown nu element {name!r}, expected x or z")


def casimir():
    """Normalized Casimir ef + h(h-2)/4."""
    return E * F + H * (H - 2) * Fraction(1, 4)


def w_element():
    x, y, z = (equitable(n) for n in "xyz")
    return z * y * x + z * x


def w_expressions():
    """The six expressions that all normalize to w."""
    x, y, z = (equitable(n) for n in "xyz")
    return {
        "zyx+zx": z * y * x + z * x,
        "zxy-zy": z * x * y - z * y,
        "yzx-yx": y * z * x - y * x,
        "xzy+xy": x * z * y + x * y,
        "yxz+yz": y * x * z + y * z,
        "xyz-xz": x * y * z - x * z,
    }


# grading


class GradedDecomposition:
    """Homogeneous components of an element: degree n -> component in U_n."""

    def __init__(self, components):
        self.components = {n: c for n, c in sorted(components.items()) if c}

    @property
    def degrees(self):
        return list(self.components)

    def __getitem__(self, n):
        return self.components.get(n) or _zero_like(self.components)

    def total(self):
        values = list(self.components.values())
        if not values:
            return USl2Element.zero()
        out = values[0]
        for v in values[1:]:
            out = out + v
        return out


def _zero_like(components):
    for value in components.values():
        return type(value).zero()
    return USl2Element.zero()


def grade_project(u, n):
    return type(u)({m: c for m, c in u.terms.items() if m.k - m.i == n})


def graded_decomposition(u):
    buckets = {}
    for m, c in u.terms.items():
        buckets.setdefault(m.k - m.i, {})[m] = c
    return GradedDecomposition({n: type(u)(terms) for n, terms in buckets.items()})


def ef_power_identity(i):
    """(e^i f^i, prod_{j=1}^{i} (Lambda - (h-2j+2)(h-2j)/4))."""
    check_exponent(i)
    lhs = E**i * F**i
    lam = casimir()
    rhs = USl2Element.one()
    for j in range(1, i + 1):
        rhs = rhs * (lam - (H - (2 * j - 2)) * (H - 2 * j) * Fraction(1, 4))
    return lhs, rhs


# verification


def verify_commutator_lemmas():
    x, y, z = (equitable(n) for n in "xyz")
    w = w_element()
    br = commutator
    report = VerificationReport("commutators")

    report.expect_equal("equitable.xy", "xy - yx = x + y", br(x, y), x + y)
    report.expect_equal("equitable.yz", "yz - zy = y + z", br(y, z), y + z)
    report.expect_equal("equitable.zx", "zx - xz = z + x", br(z, x), z + x)

    single = [
        ("x,xy", "[x,xy] = x^2 + xy", br(x, x * y), x * x + x * y),
        ("x,yz", "[x,yz] = xz - yx", br(x, y * z), x * z - y * x),
        ("x,zx", "[x,zx] = -x^2 - zx", br(x, z * x), -x * x - z * x),
        ("y,yz", "[y,yz] = y^2 + yz", br(y, y * z), y * y + y * z),
        ("y,zx", "[y,zx] = yx - zy", br(y, z * x), y * x - z * y),
        ("y,xy", "[y,xy] = -y^2 - xy", br(y, x * y), -y * y - x * y),
        ("z,zx", "[z,zx] = z^2 + zx", br(z, z * x), z * z + z * x),
        ("z,xy", "[z,xy] = zy - xz", br(z, x * y), z * y - x * z),
        ("z,yz", "[z,yz] = -z^2 - yz", br(z, y * z), -z * z - y * z),
    ]
    for sid, text, lhs, rhs in single:
        report.expect_equal(f"bracket.{sid}", text, lhs, rhs)

    pairs = [
        ("xy,yz", "[xy,yz] = 2xyz + y^2 - xz", br(x * y, y * z), 2 * x * y * z + y * y - x * z),
        ("yz,zx", "[yz,zx] = 2yzx + z^2 - yx", br(y * z, z * x), 2 * y * z * x + z * z - y * x),
        ("zx,xy", "[zx,xy] = 2zxy + x^2 - zy", br(z * x, x * y), 2 * z * x * y + x * x - z * y),
    ]
    for sid, text, lhs, rhs in pairs:
        report.expect_equal(f"bracket.{sid}", text, lhs, rhs)

    forms = w_expressions()
    reference = forms["zyx+zx"]
    for label, value in forms.items():
        if label != "zyx+zx":
            report.expect_equal(f"w.{label}", f"zyx + zx = {label}", reference, value)

    wx = [
        ("w,x", "[w,x] = xyx - xzx", br(w, x), x * y * x - x * z * x),
        ("w,y", "[w,y] = yzy - yxy", br(w, y), y * z * y - y * x * y),
        ("w,z", "[w,z] = zxz - zyz", br(w, z), z * x * z - z * y * z),
        ("w,xy", "[w,xy] = yzxy - xyzx + xyx - yxy", br(w, x * y),
         y * z * x * y - x * y * z * x + x * y * x - y * x * y),
        ("w,yz", "[w,yz] = zxyz - yzxy + yzy - zyz", br(w, y * z),
         z * x * y * z - y * z * x * y + y * z * y - z * y * z),
        ("w,zx", "[w,zx] = xyzx - zxyz + zxz - xzx", br(w, z * x),
         x * y * z * x - z * x * y * z + z * x * z - x * z * x),
    ]
    for sid, text, lhs, rhs in wx:
        report.expect_equal(f"bracket.{sid}", text, lhs, rhs)
    return report


def chevalley_basis_element(i, j, n):
    """Lambda^i h^j f^n for n >= 0, Lambda^i h^j e^{-n} for n < 0."""
    tail = F**n if n >= 0 else E ** (-n)
    return casimir() ** i * H**j * tail


def nu_basis_element(i, j, n):
    """Lambda^i y^j nu_x^n for n >= 0, Lambda^i y^j nu_z^{-n} for n < 0."""
    tail = nu("x") ** n if n >= 0 else nu("z") ** (-n)
    return casimir() ** i * equitable("y") ** j * tail


def verify_pbw_laws(max_exponent=3, max_power=6):
    report = VerificationReport("pbw")
    x, y, z = (equitable(n) for n in "xyz")
    lam = casimir()

    exps = list(product(range(max_exponent + 1), repeat=3))
    words = {
        "equitable": ("x^i y^j z^k", [x**i * y**j * z**k for i, j, k in exps]),
        "reversed": ("f^k h^j e^i", [F**k * H**j * E**i for i, j, k in exps]),
    }
    for label, (shape, family) in words.items():
        rank = exact_rank([v.terms for v in family])
        report.record(f"basis.{label}", f"{shape} expand to independent vectors", rank == len(family),
                      witness=f"rank {rank} of {len(family)}")

    for label, build in (("chevalley", chevalley_basis_element), ("nu", nu_basis_element)):
        for n in range(-max_exponent, max_exponent + 1):
            family = [build(i, j, n) for i, j in product(range(max_exponent + 1), repeat=2)]
            homogeneous = all(grade_project(v, n) == v for v in family)
            rank = exact_rank([v.terms for v in family])
            report.record(f"basis.{label}.{n}", f"{label} family spans independent vectors of U_{n}",
                          homogeneous and rank == len(family),
                          witness=f"homogeneous={homogeneous}, rank {rank} of {len(family)}")

    for i in range(max_power + 1):
        lhs, rhs = ef_power_identity(i)
        report.expect_equal(f"ef_power.{i}", f"e^{i} f^{i} = prod_j (Lambda - (h-2j+2)(h-2j)/4)", lhs, rhs)

    report.expect_equal("roundtrip.e", "e = y + z", y + z, E)
    report.expect_equal("roundtrip.f", "f = -x - y", -x - y, F)
    report.expect_equal("roundtrip.h", "h = 2y", 2 * y, H)

    report.expect_equal("casimir.equitable", "Lambda = -(xy+yz+zx+yx+zy+xz)/2", lam,
                        (x * y + y * z + z * x + y * x + z * y + x * z) * Fraction(-1, 2))
    for name, g in (("e", E), ("f", F), ("h", H)):
        report.expect_zero(f"casimir.central.{name}", f"[Lambda,{name}] = 0", commutator(lam, g))

    nx, nz = nu("x"), nu("z")
    report.expect_equal("nu.x_y", "[nu_x,y] = nu_x", commutator(nx, y), nx)
    report.expect_equal("nu.y_z", "[y,nu_z] = nu_z", commutator(y, nz), nz)
    report.expect_equal("nu.z_x", "[nu_z,nu_x] = y/2", commutator(nz, nx), y * _HALF)
    report.expect_equal("nu.casimir_xz", "Lambda = 4 nu_x nu_z + y(y+1)", lam, 4 * nx * nz + y * (y + 1))
    report.expect_equal("nu.casimir_zx", "Lambda = 4 nu_z nu_x + y(y-1)", lam, 4 * nz * nx + y * (y - 1))
    report.expect_zero("grading.casimir", "Lambda is homogeneous of degree 0", lam - grade_project(lam, 0))

    degrees = range(-2, 3)
    for m, n in product(degrees, repeat=2):
        u = chevalley_basis_element(1, 1, m) + chevalley_basis_element(0, 2, m)
        v = chevalley_basis_element(1, 0, n) - chevalley_basis_element(0, 1, n)
        uv = u * v
        report.expect_zero(f"grading.product.{m}.{n}", f"U_{m} * U_{n} lies in U_{m + n}", uv - grade_project(uv, m + n))
    return report
