from fractions import Fraction

import pytest

from oracles import leibniz_det
from schubert_rings.linalg import (
    InconsistentSystem,
    RationalMatrix,
    UnderdeterminedSystem,
    rank,
    solve_unique,
)


def test_matrix_arithmetic():
    A = RationalMatrix([[1, 2], [3, 4]])
    assert A.det() == -2
    assert A @ A.inverse() == RationalMatrix.identity(2)
    assert A.trace() == 5
    assert (A ** 2) == A @ A
    assert RationalMatrix.from_json(A.scale(Fraction(1, 2)).to_json()) == A.scale(Fraction(1, 2))
    assert A.scale(Fraction(1, 2)).to_json() == [["1/2", 1], ["3/2", 2]]


def test_det_matches_leibniz():
    rows = [[Fraction(i * j + i - j * j, 3) for j in range(4)] for i in range(4)]
    assert RationalMatrix(rows).det() == leibniz_det(rows)


def test_solve_unique_and_failures():
    entries = {(0, 0): 1, (1, 1): 2, (2, 0): 1, (2, 1): 1}
    assert solve_unique(entries, (3, 2), {0: 1, 1: 4, 2: 3}) == [1, 2]
    with pytest.raises(InconsistentSystem):
        solve_unique(entries, (3, 2), {0: 1, 1: 4, 2: 5})
    with pytest.raises(UnderdeterminedSystem):
        solve_unique({(0, 0): 1, (0, 1): 1}, (1, 2), {0: 1})
    assert rank(entries, (3, 2)) == 2
    assert rank({}, (3, 3)) == 0


def test_rejects_ragged_and_inexact():
    with pytest.raises(ValueError):
        RationalMatrix([[1, 2], [3]])
    with pytest.raises(TypeError):
        RationalMatrix([[0.5]])
