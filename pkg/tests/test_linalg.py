from fractions import Fraction

from racah_natural.linalg import Echelon, coefficient_rows, exact_rank, primitive_row, triplets
from racah_natural.usl2 import E, F, H


def test_primitive_row():
    assert primitive_row({0: Fraction(1, 2), 1: Fraction(-1, 3)}) == {0: 3, 1: -2}
    assert primitive_row({0: -2, 1: 4}) == {0: 1, 1: -2}
    assert primitive_row({0: 0}) == {}


def test_exact_rank():
    assert exact_rank([]) == 0
    assert exact_rank([{}, {}]) == 0
    assert exact_rank([{0: 1, 1: 2}, {0: 2, 1: 4}]) == 1
    assert exact_rank([{0: 1}, {1: 1}, {2: 1}, {0: 1, 1: 1, 2: 1}]) == 3
    assert exact_rank([{0: Fraction(1, 3), 2: 1}, {1: 5, 2: -1}, {0: 1, 1: 15}]) == 2


def test_echelon_add_reports_new_rows():
    echelon = Echelon()
    assert echelon.add({0: 1, 1: 1})
    assert echelon.add({1: 1})
    assert not echelon.add({0: 3, 1: 7})
    assert echelon.rank == 2


def test_coefficient_rows_columns_are_sorted():
    columns, rows = coefficient_rows([E + F, H])
    assert columns == sorted(columns)
    assert len(rows) == 2
    assert exact_rank(rows) == 2


def test_triplets():
    assert triplets([{0: Fraction(1, 2)}, {1: -3}]) == "0 0 1/2\n1 1 -3"
