"""Exact rational matrices.

Small dense matrices are stored as tuples of :class:`~fractions.Fraction`.
Row reduction, rank and linear solves are delegated to sympy's
``DomainMatrix`` over ``QQ``, which works in exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from sympy import QQ
from sympy.polys.matrices import DomainMatrix

__all__ = [
    "RationalMatrix",
    "parse_rational",
    "rref",
    "rank",
    "solve_unique",
    "InconsistentSystem",
    "UnderdeterminedSystem",
]


class InconsistentSystem(ValueError):
    pass


class UnderdeterminedSystem(ValueError):
    pass


def parse_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"not an exact rational: {value!r}")


def _to_qq(x: Fraction):
    return QQ(x.numerator, x.denominator)


def _from_qq(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _sparse_domain(entries: Mapping[tuple[int, int], Rational], shape: tuple[int, int]) -> DomainMatrix:
    dok = {ij: _to_qq(parse_rational(v)) for ij, v in entries.items() if v}
    return DomainMatrix.from_dok(dok, shape, QQ).to_sparse()


def rref(entries: Mapping[tuple[int, int], Rational], shape: tuple[int, int]):
    """Reduced row echelon form of a sparse matrix.

    Returns ``(rows, pivots)`` where ``rows`` is a list of sparse rows
    (``dict`` column -> Fraction) for the nonzero rows only.
    """
    reduced, pivots = _sparse_domain(entries, shape).rref()
    rows = [
        {j: _from_qq(v) for j, v in row.items()}
        for _, row in sorted(reduced.to_dod().items())
    ]
    return rows, tuple(pivots)


def rank(entries: Mapping[tuple[int, int], Rational], shape: tuple[int, int]) -> int:
    if not entries:
        return 0
    return _sparse_domain(entries, shape).rank()


def solve_unique(
    entries: Mapping[tuple[int, int], Rational], shape: tuple[int, int], rhs: Mapping[int, Rational]
) -> list[Fraction]:
    """Solve ``A x = b`` exactly, requiring exactly one solution."""
    nrows, ncols = shape
    augmented = dict(entries)
    for i, v in rhs.items():
        if v:
            augmented[(i, ncols)] = v
    rows, pivots = rref(augmented, (nrows, ncols + 1))
    if ncols in pivots:
        raise InconsistentSystem("right-hand side is not in the column space")
    if len(pivots) < ncols:
        raise UnderdeterminedSystem(f"rank {len(pivots)} < {ncols} unknowns")
    solution = [Fraction(0)] * ncols
    for row, col in zip(rows, pivots):
        solution[col] = row.get(ncols, Fraction(0))
    return solution


class RationalMatrix:
    """Immutable dense matrix with exact rational entries."""

    __slots__ = ("rows", "_entries")

    def __init__(self, entries: Iterable[Iterable]):
        data = tuple(tuple(parse_rational(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix must have at least one row and one column")
        width = len(data[0])
        if any(len(row) != width for row in data):
            raise ValueError("ragged matrix")
        self._entries = data

    @property
    def entries(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._entries

    @property
    def nrows(self) -> int:
        return len(self._entries)

    @property
    def ncols(self) -> int:
        return len(self._entries[0])

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._entries[i][j]

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values: Sequence) -> "RationalMatrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = list(zip(*other._entries))
        return RationalMatrix(
            [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols] for row in self._entries]
        )

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self._entries, other._entries)])

    def scale(self, c) -> "RationalMatrix":
        c = parse_rational(c)
        return RationalMatrix([[c * a for a in row] for row in self._entries])

    def __pow__(self, k: int) -> "RationalMatrix":
        if not self.is_square() or k < 0:
            raise ValueError("matrix powers need a square matrix and k >= 0")
        result = RationalMatrix.identity(self.nrows)
        for _ in range(k):
            result = result @ self
        return result

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(list(zip(*self._entries)))

    def trace(self) -> Fraction:
        if not self.is_square():
            raise ValueError("trace of a non-square matrix")
        return sum((self._entries[i][i] for i in range(self.nrows)), Fraction(0))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "RationalMatrix":
        return RationalMatrix([[self._entries[i][j] for j in cols] for i in rows])

    def to_domain(self) -> DomainMatrix:
        return DomainMatrix([[_to_qq(x) for x in row] for row in self._entries], self.shape, QQ)

    def det(self) -> Fraction:
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        return _from_qq(self.to_domain().det())

    def inverse(self) -> "RationalMatrix":
        inv = self.to_domain().inv()
        return RationalMatrix([[_from_qq(x) for x in row] for row in inv.to_list()])

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self):
        return hash(self._entries)

    def __repr__(self):
        return f"RationalMatrix({self.to_json()!r})"

    def to_json(self) -> list[list]:
        return [[x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}" for x in row] for row in self._entries]

    @classmethod
    def from_json(cls, data: Sequence[Sequence]) -> "RationalMatrix":
        return cls(data)
