"""The homomorphism from the Racah algebra into F[a,b,c] (x) U(sl2).

Generators go to the images below; every other expression is evaluated through
them. Omega images are never taken from their closed forms: they are computed
from the defining expressions, and the closed forms are what gets checked.
"""

from collections.abc import Mapping
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import NamedTuple

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from .expr import Leaf
from .racah import (
    CASIMIRS,
    GENERATORS,
    NAMES,
    RacahElement,
    casimir_element,
    check_centrality,
    normalize,
    random_element,
    random_expression,
)
from .report import VerificationReport
from .tensor import (
    ABCMonomial,
    TensorElement,
    a,
    b,
    c,
    grade_project_tensor,
    structural,
    tensor_degrees,
    usl2_name,
)
from .usl2 import commutator, equitable, w_element

_HALF = Fraction(1, 2)


def _abc_squares():
    return a * (a + 1), b * (b + 1), c * (c + 1)


def _base_images():
    x, y, z = (usl2_name(n) for n in "xyz")
    lam = usl2_name("Lambda")
    P, Q, S = _abc_squares()
    return {
        "A": P + (b - c - a) * x + (a + b - c + 1) * y - x * y,
        "B": Q + (c - a - b) * y + (b + c - a + 1) * z - y * z,
        "C": S + (a - b - c) * z + (c + a - b + 1) * x - z * x,
        "D": (
            usl2_name("w")
            + (c + b * (c + a - b)) * x
            + (a + c * (a + b - c)) * y
            + (b + a * (b + c - a)) * z
            + (b - c) * x * y
            + (c - a) * y * z
            + (a - b) * z * x
        ),
        "alpha": (lam - P) * (Q - S),
        "beta": (lam - Q) * (S - P),
        "gamma": (lam - S) * (P - Q),
        "delta": lam + P + Q + S,
    }


class GeneratorImageTable(Mapping):
    """Images of A, B, C, D, the central letters and the three Casimir elements."""

    def __init__(self):
        base = _base_images()
        images = dict(base)
        for which in "ABC":
            images[f"Omega{which}"] = casimir_element(which).evaluate(base.__getitem__, TensorElement.one())
        self._images = images

    def __getitem__(self, name):
        try:
            return self._images[name]
        except KeyError:
            raise ValueError(f"unknown Racah generator {name!r}, expected one of {', '.join(NAMES)}") from None

    def __iter__(self):
        return iter(self._images)

    def __len__(self):
        return len(self._images)


@lru_cache(maxsize=None)
def image_table():
    return GeneratorImageTable()


def generator_image(name):
    return image_table()[name]


@lru_cache(maxsize=4096)
def _embed_expr(expr):
    return expr.evaluate(generator_image, TensorElement.one())


def embed(expr):
    """Image of a Racah expression, or of a normal form."""
    if isinstance(expr, RacahElement):
        return embed_nf(expr)
    return _embed_expr(expr)


# normal forms

_NF_LETTERS = ("A", "D", "B", "OmegaA", "alpha", "delta", "beta")


@lru_cache(maxsize=None)
def _image_power(name, n):
    if n == 0:
        return TensorElement.one()
    if n == 1:
        return generator_image(name)
    return _image_power(name, n - 1) * generator_image(name)


@lru_cache(maxsize=None)
def basis_image(m):
    """Image of A^i D^j B^k OmegaA^l alpha^r delta^s beta^t."""
    out = TensorElement.one()
    for name, n in zip(_NF_LETTERS, m):
        if n:
            out = out * _image_power(name, n)
    return out


def embed_nf(nf):
    out = TensorElement.zero()
    for m, coeff in nf.terms.items():
        out = out + basis_image(m) * coeff
    return out


def casimir_closed_form(which):
    """The closed form predicted for the image of Omega_which."""
    lam = usl2_name("Lambda")
    P, Q, S = _abc_squares()
    first, second, third = {"A": (P, Q, S), "B": (Q, S, P), "C": (S, P, Q)}[_check_which(which)]
    return (lam + first - second - third) * (first * lam - second * third) - (lam + first) * (second + third)


def _check_which(which):
    if which not in ("A", "B", "C"):
        raise ValueError(f"unknown Casimir element {which!r}, expected A, B or C")
    return which


# homomorphism


def _coefficient_table():
    """(abc exponents, coefficient in [A,B], coefficient in 2D) for the images."""
    x, y, z = (equitable(n) for n in "xyz")
    xy, yz, zx = x * y, y * z, z * x
    br = commutator
    return [
        ((2, 0, 0), br(x, y) - br(y, z) - br(z, x), -2 * z),
        ((0, 2, 0), br(y, z) - br(z, x) - br(x, y), -2 * x),
        ((0, 0, 2), br(z, x) - br(x, y) - br(y, z), -2 * y),
        ((1, 1, 0), 2 * br(z, x), 2 * z + 2 * x),
        ((0, 1, 1), 2 * br(x, y), 2 * x + 2 * y),
        ((1, 0, 1), 2 * br(y, z), 2 * y + 2 * z),
        ((1, 0, 0), br(x - y, yz) - br(y + z, xy) + br(z, x), 2 * zx - 2 * yz + 2 * y),
        ((0, 1, 0), br(z - y, xy) - br(x + y, yz) - br(z, x) + 2 * br(y, z), 2 * xy - 2 * zx + 2 * z),
        ((0, 0, 1), br(y + z, xy) + br(x + y, yz) + br(z, x), 2 * yz - 2 * xy + 2 * x),
        ((0, 0, 0), br(y, z) - br(y, yz) + br(z, xy) + br(xy, yz), 2 * w_element()),
    ]


def verify_homomorphism():
    report = VerificationReport("homomorphism")
    A, B, C, D = (generator_image(n) for n in GENERATORS)
    al, be, ga, de = (generator_image(n) for n in ("alpha", "beta", "gamma", "delta"))

    report.expect_equal("relation.AB", "[A,B] = 2D", A.commutator(B), 2 * D)
    report.expect_equal("relation.BC", "[B,C] = 2D", B.commutator(C), 2 * D)
    report.expect_equal("relation.CA", "[C,A] = 2D", C.commutator(A), 2 * D)

    report.expect_equal("central.alpha", "alpha = [A,D] + AC - BA", A.commutator(D) + A * C - B * A, al)
    report.expect_equal("central.beta", "beta = [B,D] + BA - CB", B.commutator(D) + B * A - C * B, be)
    report.expect_equal("central.gamma", "gamma = [C,D] + CB - AC", C.commutator(D) + C * B - A * C, ga)
    report.expect_equal("central.delta", "delta = A + B + C", A + B + C, de)
    report.expect_zero("central.sum", "alpha + beta + gamma = 0", al + be + ga)

    commutator_ab, twice_d = A.commutator(B), 2 * D
    rows = _coefficient_table()
    for exps, lhs, rhs in rows:
        label = "".join(f"{n}^{e}" if e > 1 else n for n, e in zip("abc", exps) if e) or "1"
        report.expect_equal(f"table.{label}.lhs", f"coefficient of {label} in [A,B]",
                            commutator_ab.usl2_part(exps), lhs)
        report.expect_equal(f"table.{label}.rhs", f"coefficient of {label} in 2D", twice_d.usl2_part(exps), rhs)
        report.expect_equal(f"table.{label}", f"coefficients of {label} agree", lhs, rhs)
    listed = {ABCMonomial(*exps) for exps, _, _ in rows}
    support = set(commutator_ab.abc_support()) | set(twice_d.abc_support())
    report.record("table.support", "no other monomial in a, b, c occurs", support <= listed,
                  witness=f"extra monomials {sorted(support - listed)}")
    return report


# homogeneous components


class Structure(NamedTuple):
    R: TensorElement
    L: TensorElement
    theta: TensorElement
    vartheta: TensorElement
    K: TensorElement


@lru_cache(maxsize=None)
def structure():
    R, L, theta, vartheta = (structural(n) for n in ("R", "L", "theta", "vartheta"))
    return Structure(R, L, theta, vartheta, R.commutator(L))


def generator_components(name):
    """Displayed homogeneous components of the images of A, B, C, D."""
    R, L, theta, vartheta, K = structure()
    zero = TensorElement.zero()
    if name == "A":
        return {-1: zero, 0: vartheta * (vartheta + 1), 1: R}
    if name == "B":
        return {-1: L, 0: theta * (theta - 1), 1: zero}
    if name == "C":
        return {-1: -L, 0: generator_image("delta") - vartheta * (vartheta + 1) - theta * (theta - 1), 1: -R}
    if name == "D":
        return {-1: vartheta * L, 0: K * _HALF, 1: theta * R}
    raise ValueError(f"unknown Racah generator {name!r}, expected one of A, B, C, D")


def _falling(u, start, stop):
    out = TensorElement.one()
    for j in range(start, stop):
        out = out * (u - j)
    return out


def power_extremes(name, i):
    """(lowest degree, component, highest degree, component) of the i-th power of an image."""
    R, L, theta, vartheta, _ = structure()
    if name == "A":
        return 0, (vartheta * (vartheta + 1)) ** i, i, R**i
    if name == "B":
        return -i, L**i, 0, (theta * (theta - 1)) ** i
    if name == "C":
        return -i, (-L) ** i, i, (-R) ** i
    if name == "D":
        return -i, _falling(vartheta, 0, i) * L**i, i, R**i * _falling(theta, 1, i + 1)
    raise ValueError(f"unknown Racah generator {name!r}, expected one of A, B, C, D")


def word_extremes(i, j, k):
    """Extreme components of the image of A^i D^j B^k."""
    R, L, theta, vartheta, _ = structure()
    top = R ** (i + j) * (theta * (theta - 1)) ** k * _falling(theta, 1, j + 1)
    bottom = (vartheta * (vartheta + 1)) ** i * _falling(vartheta, 0, j) * L ** (j + k)
    return -(j + k), bottom, i + j, top


def _check_extremes(report, sid, citation, u, lo, bottom, hi, top):
    degrees = tensor_degrees(u)
    report.record(f"{sid}.range", f"{citation} lives in degrees {lo}..{hi}",
                  all(lo <= n <= hi for n in degrees), witness=f"degrees {degrees}")
    report.expect_equal(f"{sid}.top", f"degree {hi} component of {citation}", grade_project_tensor(u, hi), top)
    report.expect_equal(f"{sid}.bottom", f"degree {lo} component of {citation}", grade_project_tensor(u, lo), bottom)


def _word_check(i, j, k):
    report = VerificationReport("word")
    u = _image_power("A", i) * _image_power("D", j) * _image_power("B", k)
    _check_extremes(report, f"word.{i}{j}{k}", f"A^{i} D^{j} B^{k}", u, *word_extremes(i, j, k))
    return report


def verify_homogeneous_tables(max_power=4, max_total=4, n_jobs=1, progress=False):
    report = VerificationReport("homogeneous")
    for name in GENERATORS:
        image = generator_image(name)
        table = generator_components(name)
        for n, expected in table.items():
            report.expect_equal(f"component.{name}.{n}", f"degree {n} component of {name}",
                                grade_project_tensor(image, n), expected)
        extra = [n for n in tensor_degrees(image) if n not in table]
        report.record(f"component.{name}.rest", f"other components of {name} vanish", not extra,
                      witness=f"nonzero degrees {extra}")

    for name in ("alpha", "beta", "gamma", "delta"):
        image = generator_image(name)
        report.expect_zero(f"degree0.{name}", f"{name} is homogeneous of degree 0",
                           image - grade_project_tensor(image, 0))

    for name, i in product(GENERATORS, range(max_power + 1)):
        _check_extremes(report, f"power.{name}.{i}", f"{name}^{i}", _image_power(name, i), *power_extremes(name, i))

    triples = [(i, j, k) for i, j, k in product(range(max_total + 1), repeat=3) if i + j + k <= max_total]
    parts = Parallel(n_jobs=n_jobs)(
        delayed(_word_check)(i, j, k) for i, j, k in tqdm(triples, desc="words", disable=not progress)
    )
    for part in parts:
        report.extend(part)
    return report


# Casimir images


def casimir_tables():
    """Product name -> (image of the product, displayed nonzero components)."""
    R, L, theta, vartheta, K = structure()
    A, B, C, D = (generator_image(n) for n in GENERATORS)
    be, ga, de = (generator_image(n) for n in ("beta", "gamma", "delta"))
    t1, t2 = theta * (theta - 1), vartheta * (vartheta + 1)
    v1 = vartheta + 1

    tables = {
        "D^2": (D * D, {
            2: theta * (theta + 1) * R**2,
            1: theta * R * K * _HALF + theta * K * R * _HALF,
            0: K * K * Fraction(1, 4) + theta * v1 * R * L + vartheta * (theta - 1) * L * R,
            -1: vartheta * L * K * _HALF + vartheta * K * L * _HALF,
            -2: vartheta * (vartheta - 1) * L**2,
        }),
        "BAC": (B * A * C, {
            2: -t1 * R**2,
            1: t1 * (de - 2 * v1**2 - theta * (theta + 1)) * R - L * R**2,
            0: t1 * t2 * (de - t2 - t1) - t1 * R * L + (de - 2 * vartheta**2 - t1) * L * R,
            -1: (vartheta * (vartheta - 1) * (de - vartheta * (vartheta - 1) - (theta - 1) * (theta - 2)) - t1 * t2) * L
            - L * R * L,
            -2: -vartheta * (vartheta - 1) * L**2,
        }),
        "CAB": (C * A * B, {
            2: -(theta + 1) * (theta + 2) * R**2,
            1: theta * (theta + 1) * (de - 2 * v1**2 - t1) * R - R**2 * L,
            0: t1 * t2 * (de - t2 - t1) + (de - 2 * v1**2 - t1) * R * L - t1 * L * R,
            -1: (t2 * (de - t2 - t1) - vartheta * (vartheta - 1) * (theta - 1) * (theta - 2)) * L - L * R * L,
            -2: -vartheta * (vartheta - 1) * L**2,
        }),
        "A^2": (A * A, {2: R**2, 1: 2 * v1**2 * R, 0: vartheta**2 * v1**2}),
        "B gamma": (B * ga, {0: t1 * ga, -1: ga * L}),
        "C beta": (C * be, {1: -be * R, 0: be * (de - t2 - t1), -1: -be * L}),
        "A delta": (A * de, {1: de * R, 0: t2 * de}),
    }
    return tables


def verify_casimir_images():
    report = VerificationReport("casimir_images")
    tables = casimir_tables()
    for name, (value, components) in tables.items():
        sid = name.replace(" ", "_")
        for n, expected in components.items():
            report.expect_equal(f"table.{sid}.{n}", f"degree {n} component of {name}",
                                grade_project_tensor(value, n), expected)
        extra = [n for n in tensor_degrees(value) if n not in components]
        report.record(f"table.{sid}.rest", f"other components of {name} vanish", not extra,
                      witness=f"nonzero degrees {extra}")

    assembled = TensorElement.zero()
    signs = {"D^2": 1, "BAC": _HALF, "CAB": _HALF, "A^2": 1, "B gamma": 1, "C beta": -1, "A delta": -1}
    for name, (_, components) in tables.items():
        for part in components.values():
            assembled = assembled + part * signs[name]
    report.expect_equal("assembled.OmegaA", "OmegaA reassembled from the tables", assembled, casimir_closed_form("A"))

    for which in "ABC":
        report.expect_equal(f"closed_form.Omega{which}", f"image of Omega{which} has the closed form",
                            generator_image(f"Omega{which}"), casimir_closed_form(which))
    P, Q, S = _abc_squares()
    al, be, de = (generator_image(n) for n in ("alpha", "beta", "delta"))
    report.expect_equal("difference.B", "OmegaB - OmegaA = (alpha + beta)(delta + 1)",
                        generator_image("OmegaB") - generator_image("OmegaA"), (al + be) * (de + 1))
    report.expect_equal("difference.C", "OmegaC - OmegaA = beta (delta + 1)",
                        generator_image("OmegaC") - generator_image("OmegaA"), be * (de + 1))
    return report


def verify_image_centrality():
    report = VerificationReport("image_centrality")
    gens = {name: generator_image(name) for name in GENERATORS}
    for name in ("alpha", "beta", "gamma", "delta") + CASIMIRS:
        image = generator_image(name)
        for g, value in gens.items():
            report.expect_zero(f"{name}.{g}", f"[{name},{g}] = 0 on images", image.commutator(value))
    return report


def verify_centrality(n_jobs=1, progress=False):
    """Centrality of the central letters and Casimir trees, in normal form and on images."""
    report = VerificationReport("centrality")
    targets = [(name, Leaf(name)) for name in ("alpha", "beta", "gamma", "delta") + CASIMIRS]
    targets += [(f"tree{which}", casimir_element(which)) for which in "ABC"]
    parts = Parallel(n_jobs=n_jobs)(
        delayed(check_centrality)(expr, label) for label, expr in tqdm(targets, desc="centrality", disable=not progress)
    )
    for part in parts:
        report.extend(part)
    report.extend(verify_image_centrality(), prefix="image")
    return report


# random oracles


def _oracle_case(n, expr, other):
    nf = normalize(expr)
    image = embed(expr)
    checks = [
        ("embed", "embed(normalize(u)) = embed(u)", embed_nf(nf) == image),
        ("j", "normal form has j in {0, 1}", nf.max_j() <= 1),
        ("idempotent", "normalize(normalize(u)) = normalize(u)", normalize(nf.to_expr()) == nf),
        ("product", "embed(u v) = embed(u) embed(v)", embed(expr * other) == image * embed(other)),
    ]
    return [(f"case.{n}.{sid}", citation, ok, None if ok else str(expr)) for sid, citation, ok in checks]


def verify_normal_form_oracle(n=1000, max_depth=6, max_weight=6, seed=0, n_jobs=1, progress=False):
    """Random expressions agree with their normal forms after embedding."""
    rng = np.random.default_rng(seed)
    cases = [(random_expression(rng, max_depth, max_weight), random_expression(rng, 2, 2)) for _ in range(n)]
    report = VerificationReport("normal_form")
    report.notes.append(f"{n} random expressions, depth <= {max_depth}, weight <= {max_weight}, seed {seed}")
    results = Parallel(n_jobs=n_jobs)(
        delayed(_oracle_case)(k, expr, other)
        for k, (expr, other) in enumerate(tqdm(cases, desc="oracle", disable=not progress))
    )
    for checks in results:
        for sid, citation, ok, witness in checks:
            report.record(sid, citation, ok, witness=witness)
    return report


def verify_zero_divisors(n_pairs=200, seed=0, max_weight=4):
    """Products of random nonzero normal forms stay nonzero, checked through the embedding."""
    rng = np.random.default_rng(seed)
    report = VerificationReport("zero_divisors")
    report.notes.append(f"{n_pairs} random pairs, weight <= {max_weight}, seed {seed}")
    for n in range(n_pairs):
        u = random_element(rng, max_weight=max_weight)
        v = random_element(rng, max_weight=max_weight)
        uv = u * v
        image = embed_nf(u) * embed_nf(v)
        report.record(f"pair.{n}", "u v is nonzero", bool(uv) and bool(image), witness=f"u = {u}; v = {v}")
        report.expect_equal(f"pair.{n}.embed", "embed(u v) = embed(u) embed(v)", embed_nf(uv), image)
    return report

