from fractions import Fraction as F

import pytest

from realspin.linalg import Echelon, rank, solve_square


def test_rank_of_dependent_rows():
    rows = [{"a": 1, "b": 2}, {"a": 2, "b": 4}, {"c": F(1, 3)}]
    assert rank(rows) == 2


def test_express_recovers_combination():
    cols = [{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: F(1, 2)}]
    solve = solve_square(cols)
    target = {0: F(3), 1: F(5, 2), 2: F(-1)}
    coeffs = solve(target)
    rebuilt = {}
    for i, c in coeffs.items():
        for k, v in cols[i].items():
            rebuilt[k] = rebuilt.get(k, 0) + c * v
    assert {k: v for k, v in rebuilt.items() if v} == target


def test_solve_square_rejects_singular():
    with pytest.raises(ArithmeticError):
        solve_square([{0: 1}, {0: 2}])


def test_contains():
    ech = Echelon()
    ech.insert({0: 1, 1: -1})
    assert ech.contains({0: F(-2), 1: F(2)})
    assert not ech.contains({0: 1})
