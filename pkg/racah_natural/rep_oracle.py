"""Exact matrix evaluation in the finite-dimensional irreducible sl2-modules.

The d-dimensional module has basis v_0..v_{d-1} with

    h v_m = (d - 1 - 2m) v_m,   f v_m = v_{m+1},   e v_m = m (d - m) v_{m-1}.

Entries are Fractions in numpy object arrays, so every comparison is exact.
a, b, c are specialized to the rationals of an EvaluationPoint.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import NamedTuple

import numpy as np
from joblib import Parallel, delayed
from tqdm import tqdm

from .expr import Leaf
from .natural import embed
from .racah import GENERATORS, NAMES, casimir_element
from .report import VerificationReport
from .tensor import random_tensor

_HALF = Fraction(1, 2)


def zeros(d):
    return np.full((d, d), Fraction(0), dtype=object)


def identity(d):
    out = zeros(d)
    for m in range(d):
        out[m, m] = Fraction(1)
    return out


@dataclass(frozen=True, eq=False)
class IrrepMatrices:
    d: int
    E: np.ndarray
    F: np.ndarray
    H: np.ndarray

    @property
    def one(self):
        return identity(self.d)

    def generator(self, name):
        try:
            return {"e": self.E, "f": self.F, "h": self.H}[name]
        except KeyError:
            raise ValueError(f"unknown standard generator {name!r}, expected one of e, h, f") from None


def build_irrep(d):
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"dimension must be a positive integer, got {d}")
    E, F, H = zeros(d), zeros(d), zeros(d)
    for m in range(d):
        H[m, m] = Fraction(d - 1 - 2 * m)
        if m + 1 < d:
            F[m + 1, m] = Fraction(1)
        if m > 0:
            E[m - 1, m] = Fraction(m * (d - m))
    return IrrepMatrices(d, E, F, H)


class EvaluationPoint(NamedTuple):
    a: Fraction
    b: Fraction
    c: Fraction

    def __str__(self):
        return "(" + ", ".join(str(v) for v in self) + ")"


def random_points(n, seed=0, height=10):
    """Points with numerators and denominators of absolute value at most ``height``."""
    rng = np.random.default_rng(seed)
    return [
        EvaluationPoint(*(Fraction(int(rng.integers(-height, height + 1)), int(rng.integers(1, height + 1)))
                          for _ in range(3)))
        for _ in range(n)
    ]


def _power(matrix, n, cache):
    key = (id(matrix), n)
    if key not in cache:
        out = identity(matrix.shape[0])
        for _ in range(n):
            out = out @ matrix
        cache[key] = out
    return cache[key]


def evaluate(u, rep, p):
    """Image of a TensorElement: a, b, c specialized to p, e^i h^j f^k to E^i H^j F^k."""
    out = zeros(rep.d)
    cache = {}
    for (abc, m), coeff in u.terms.items():
        scalar = coeff * p.a**abc.r * p.b**abc.s * p.c**abc.t
        if not scalar:
            continue
        out = out + (_power(rep.E, m.i, cache) @ _power(rep.H, m.j, cache) @ _power(rep.F, m.k, cache)) * scalar
    return out


# direct matrix images, built without the symbolic engine


def tensor_leaf_matrices(rep, p):
    E, F, H = rep.E, rep.F, rep.H
    one = rep.one
    X = -F - H * _HALF
    Y = H * _HALF
    Z = E - H * _HALF
    nu_x, nu_z = F * _HALF, E * _HALF
    leaves = {
        "e": E, "f": F, "h": H, "x": X, "y": Y, "z": Z,
        "nu_x": nu_x, "nu_z": nu_z,
        "Lambda": E @ F + H @ (H - one * 2) * Fraction(1, 4),
        "w": Z @ Y @ X + Z @ X,
        "a": one * p.a, "b": one * p.b, "c": one * p.c,
        "R": (Y + one * (p.c + p.a - p.b + 1)) @ nu_x * 2,
        "L": (Y + one * (p.a - p.b - p.c - 1)) @ nu_z * -2,
        "theta": Y - one * p.b,
        "vartheta": Y + one * p.a,
    }
    return leaves


def racah_leaf_matrices(rep, p):
    t = tensor_leaf_matrices(rep, p)
    X, Y, Z, lam = t["x"], t["y"], t["z"], t["Lambda"]
    one = rep.one
    a, b, c = p
    P, Q, S = a * (a + 1), b * (b + 1), c * (c + 1)
    leaves = {
        "A": one * P + X * (b - c - a) + Y * (a + b - c + 1) - X @ Y,
        "B": one * Q + Y * (c - a - b) + Z * (b + c - a + 1) - Y @ Z,
        "C": one * S + Z * (a - b - c) + X * (c + a - b + 1) - Z @ X,
        "D": (
            t["w"]
            + X * (c + b * (c + a - b))
            + Y * (a + c * (a + b - c))
            + Z * (b + a * (b + c - a))
            + X @ Y * (b - c)
            + Y @ Z * (c - a)
            + Z @ X * (a - b)
        ),
        "alpha": (lam - one * P) * (Q - S),
        "beta": (lam - one * Q) * (S - P),
        "gamma": (lam - one * S) * (P - Q),
        "delta": lam + one * (P + Q + S),
    }
    for which in "ABC":
        leaves[f"Omega{which}"] = casimir_element(which).evaluate(leaves.__getitem__, one, mul=np.matmul)
    return leaves


def casimir_closed_form_matrix(which, rep, p):
    lam = tensor_leaf_matrices(rep, p)["Lambda"]
    one = rep.one
    a, b, c = p
    P, Q, S = a * (a + 1), b * (b + 1), c * (c + 1)
    first, second, third = {"A": (P, Q, S), "B": (Q, S, P), "C": (S, P, Q)}[which]
    return (lam + one * (first - second - third)) @ (lam * first - one * (second * third)) - (
        lam + one * first
    ) * (second + third)


def evaluate_expression(expr, rep, p):
    """Evaluate a Racah or tensor-side expression directly on matrices."""
    leaves = {**tensor_leaf_matrices(rep, p), **racah_leaf_matrices(rep, p)}

    def leaf(name):
        try:
            return leaves[name]
        except KeyError:
            raise ValueError(f"unknown identifier {name!r}") from None

    return expr.evaluate(leaf, rep.one, mul=np.matmul)


def _bracket(u, v):
    return u @ v - v @ u


def check_point(d, p, index=0, seed=0):
    """Every matrix check for one module dimension and one evaluation point."""
    rep = build_irrep(d)
    E, F, H = rep.E, rep.F, rep.H
    one = rep.one
    tag = f"d{d}.p{index}"
    report = VerificationReport(tag)
    report.notes.append(f"{tag}: a, b, c = {p}")

    report.expect_equal("irrep.HE", "[H,E] = 2E", _bracket(H, E), E * 2)
    report.expect_equal("irrep.HF", "[H,F] = -2F", _bracket(H, F), F * -2)
    report.expect_equal("irrep.EF", "[E,F] = H", _bracket(E, F), H)

    t = tensor_leaf_matrices(rep, p)
    report.expect_equal("casimir.scalar", "Lambda acts as (d^2 - 1)/4", t["Lambda"], one * Fraction(d * d - 1, 4))

    m = racah_leaf_matrices(rep, p)
    A, B, C, D = (m[n] for n in GENERATORS)
    report.expect_equal("relation.AB", "[A,B] = 2D", _bracket(A, B), D * 2)
    report.expect_equal("relation.BC", "[B,C] = 2D", _bracket(B, C), D * 2)
    report.expect_equal("relation.CA", "[C,A] = 2D", _bracket(C, A), D * 2)
    report.expect_equal("central.alpha", "alpha = [A,D] + AC - BA", _bracket(A, D) + A @ C - B @ A, m["alpha"])
    report.expect_equal("central.beta", "beta = [B,D] + BA - CB", _bracket(B, D) + B @ A - C @ B, m["beta"])
    report.expect_equal("central.gamma", "gamma = [C,D] + CB - AC", _bracket(C, D) + C @ B - A @ C, m["gamma"])
    report.expect_equal("central.delta", "delta = A + B + C", A + B + C, m["delta"])

    for name in ("alpha", "beta", "gamma", "delta", "OmegaA", "OmegaB", "OmegaC"):
        for g in GENERATORS:
            report.expect_zero(f"commute.{name}.{g}", f"[{name},{g}] = 0", _bracket(m[name], m[g]))
    for which in "ABC":
        report.expect_equal(f"closed_form.Omega{which}", f"Omega{which} has the closed form",
                            m[f"Omega{which}"], casimir_closed_form_matrix(which, rep, p))

    # the symbolic images evaluate to the same matrices
    for name in NAMES:
        report.expect_equal(f"symbolic.{name}", f"evaluated image of {name} agrees", evaluate(embed(Leaf(name)), rep, p),
                            m[name])

    rng = np.random.default_rng([seed, d, index])
    for k in range(2):
        u, v = random_tensor(rng), random_tensor(rng)
        report.expect_equal(f"evaluate.product.{k}", "evaluate(u v) = evaluate(u) evaluate(v)",
                            evaluate(u * v, rep, p), evaluate(u, rep, p) @ evaluate(v, rep, p))
    return report


def oracle_check_relations(d_list, points, n_jobs=1, progress=False, seed=0):
    report = VerificationReport("representations")
    report.notes.append(f"dimensions {list(d_list)}, {len(points)} points, seed {seed}")
    cases = list(product(d_list, enumerate(points)))
    parts = Parallel(n_jobs=n_jobs)(
        delayed(check_point)(d, p, k, seed) for d, (k, p) in tqdm(cases, desc="modules", disable=not progress)
    )
    for part in parts:
        report.extend(part, prefix=part.name)
    return report
