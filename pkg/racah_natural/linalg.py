"""Exact rank of sparse rational matrices.

Rows are dicts column -> Fraction. Each row is scaled to a primitive integer
vector and reduced against the pivots found so far by fraction-free cross
multiplication, b*row - a*pivot, followed by division by the content. Columns
are eliminated in their sorted order, so any totally ordered hashable key
works as a column label.
"""

from fractions import Fraction
from functools import reduce
from math import gcd

from .sparse import format_scalar


def _lcm(p, q):
    return p * q // gcd(p, q)


def primitive_row(row):
    """Scale a rational row to coprime integers with a positive leading entry."""
    row = {k: Fraction(v) for k, v in row.items() if v}
    if not row:
        return {}
    denom = reduce(_lcm, (v.denominator for v in row.values()), 1)
    ints = {k: int(v * denom) for k, v in row.items()}
    return _normalize(ints)


def _normalize(ints):
    content = reduce(gcd, (abs(v) for v in ints.values()), 0)
    lead = ints[min(ints)]
    if lead < 0:
        content = -content
    return {k: v // content for k, v in ints.items()}


class Echelon:
    """Incremental row echelon form; ``add`` reports whether a row was new."""

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = primitive_row(row)
        while row:
            lead = min(row)
            pivot = self.pivots.get(lead)
            if pivot is None:
                return row
            p, q = row[lead], pivot[lead]
            out = {k: q * v for k, v in row.items()}
            for k, v in pivot.items():
                total = out.get(k, 0) - p * v
                if total:
                    out[k] = total
                else:
                    out.pop(k, None)
            row = _normalize(out) if out else {}
        return row

    def add(self, row):
        row = self.reduce(row)
        if not row:
            return False
        self.pivots[min(row)] = row
        return True


def exact_rank(rows):
    echelon = Echelon()
    for row in rows:
        echelon.add(row)
    return echelon.rank


def coefficient_rows(elements):
    """(columns, rows) with columns the sorted union of monomials of the elements."""
    term_maps = [element.terms for element in elements]
    columns = sorted(set().union(*term_maps)) if term_maps else []
    index = {key: n for n, key in enumerate(columns)}
    rows = [{index[key]: coeff for key, coeff in terms.items()} for terms in term_maps]
    return columns, rows


def triplets(rows):
    """Sparse triplet lines ``row col p/q``."""
    lines = []
    for n, row in enumerate(rows):
        for col in sorted(row):
            lines.append(f"{n} {col} {format_scalar(row[col])}")
    return "\n".join(lines)
