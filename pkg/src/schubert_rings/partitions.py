"""Partitions, Young diagrams and standard-tableau combinatorics.

A :class:`Partition` is a tuple subclass, so partitions hash and compare like
plain tuples of their parts and can be used directly as dictionary keys.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "CanonicalTableau",
    "conjugate",
    "fits_rectangle",
    "complement",
    "standard_tableau_count",
    "partitions_of",
    "partitions_in_rectangle",
    "canonical_tableau",
    "parse_partition",
    "format_partition",
]

ENUMERATION_LIMIT = 8


class Partition(tuple):
    """Weakly decreasing tuple of positive integers. ``Partition()`` is the empty partition."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        if isinstance(parts, Partition):
            return parts
        parts = [int(p) for p in parts]
        while parts and parts[-1] == 0:
            parts.pop()
        for i, p in enumerate(parts):
            if p <= 0:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i and parts[i - 1] < p:
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        """Boxes ``(row, col)`` of the diagram, zero-based, in reading order."""
        for r, row_len in enumerate(self):
            for c in range(row_len):
                yield r, c

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def fits_rectangle(lam: Sequence[int], n_rows: int, m_cols: int) -> bool:
    lam = Partition(lam)
    if not lam:
        return True
    return len(lam) <= n_rows and lam[0] <= m_cols


def complement(lam: Sequence[int], n_rows: int, m_cols: int) -> Partition:
    """The complement of ``lam`` in the ``n_rows x m_cols`` rectangle, rotated by 180 degrees."""
    lam = Partition(lam)
    if not fits_rectangle(lam, n_rows, m_cols):
        raise ValueError(f"{lam} does not fit the {n_rows}x{m_cols} rectangle")
    padded = list(lam) + [0] * (n_rows - len(lam))
    return Partition(m_cols - part for part in reversed(padded))


def _is_standard(shape: Partition, filling: Sequence[int]) -> bool:
    rows = []
    pos = 0
    for row_len in shape:
        rows.append(filling[pos:pos + row_len])
        pos += row_len
    for r, row in enumerate(rows):
        for c, value in enumerate(row):
            if c and row[c - 1] > value:
                return False
            if r and rows[r - 1][c] > value:
                return False
    return True


@lru_cache(maxsize=None)
def _count_by_enumeration(shape: Partition) -> int:
    p = shape.weight
    return sum(1 for filling in permutations(range(1, p + 1)) if _is_standard(shape, filling))


@lru_cache(maxsize=None)
def _count_by_recursion(shape: Partition) -> int:
    # The largest entry sits in a removable corner; strip it and recurse.
    if not shape:
        return 1
    total = 0
    for i, part in enumerate(shape):
        if i + 1 == len(shape) or shape[i + 1] < part:
            smaller = list(shape)
            smaller[i] -= 1
            total += _count_by_recursion(Partition(smaller))
    return total


def standard_tableau_count(lam: Sequence[int], method: str = "auto") -> int:
    """Number of standard Young tableaux of shape ``lam`` (the dimension of its Specht module).

    ``method`` is ``"enumerate"`` (brute force over all fillings), ``"recursion"``
    (corner-removal recursion), or ``"auto"``, which enumerates up to
    weight 8 and recurses beyond.
    """
    lam = Partition(lam)
    if method == "auto":
        method = "enumerate" if lam.weight <= ENUMERATION_LIMIT else "recursion"
    if method == "enumerate":
        return _count_by_enumeration(lam)
    if method == "recursion":
        return _count_by_recursion(lam)
    raise ValueError(f"unknown method {method!r}")


def partitions_of(k: int, max_part: int | None = None, max_length: int | None = None) -> list[Partition]:
    """All partitions of ``k`` with optional bounds, in decreasing lexicographic order."""
    if k < 0:
        return []
    if max_part is None:
        max_part = k
    if max_length is None:
        max_length = k

    out: list[Partition] = []

    def build(remaining: int, cap: int, prefix: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        if len(prefix) == max_length:
            return
        for part in range(min(cap, remaining), 0, -1):
            prefix.append(part)
            build(remaining - part, part, prefix)
            prefix.pop()

    build(k, max_part, [])
    return out


def partitions_in_rectangle(k: int, n_rows: int, m_cols: int) -> list[Partition]:
    return partitions_of(k, max_part=m_cols, max_length=n_rows)


def gaussian_binomial_coefficients(n_rows: int, m_cols: int) -> list[int]:
    """Coefficients of the q-binomial [n+m choose n]_q, by the q-Pascal recursion."""

    @lru_cache(maxsize=None)
    def coeffs(a: int, b: int) -> tuple[int, ...]:
        if a == 0 or b == 0:
            return (1,)
        # [a+b, a] = [a+b-1, a-1] + q^a [a+b-1, a]
        left = coeffs(a - 1, b)
        right = coeffs(a, b - 1)
        size = a * b + 1
        result = [0] * size
        for i, c in enumerate(left):
            result[i] += c
        for i, c in enumerate(right):
            result[i + a] += c
        return tuple(result)

    result = list(coeffs(n_rows, m_cols))
    assert sum(result) == comb(n_rows + m_cols, n_rows)
    return result


@dataclass(frozen=True)
class CanonicalTableau:
    """The filling of a diagram by 1..p left to right, top to bottom."""

    shape: Partition
    rows: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.shape.weight

    def entry(self, row: int, col: int) -> int:
        return self.rows[row][col]

    @property
    def row_groups(self) -> tuple[tuple[int, ...], ...]:
        return self.rows

    @property
    def column_groups(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(row[c] for row in self.rows if len(row) > c)
            for c in range(self.shape[0])
        )


def canonical_tableau(lam: Sequence[int]) -> CanonicalTableau:
    lam = Partition(lam)
    if not lam:
        raise ValueError("the empty partition has no boxes to number")
    rows = []
    start = 1
    for part in lam:
        rows.append(tuple(range(start, start + part)))
        start += part
    return CanonicalTableau(lam, tuple(rows))


def parse_partition(text: str) -> Partition:
    """Parse ``"3,1"``; the empty string (or ``"0"``) is the empty partition."""
    text = text.strip()
    if text in ("", "0", "()", "-"):
        return Partition()
    try:
        parts = [int(piece) for piece in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}") from exc
    if any(p <= 0 for p in parts):
        raise ValueError(f"malformed partition {text!r}: parts must be positive")
    return Partition(parts)


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)
