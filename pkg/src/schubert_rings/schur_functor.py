"""Weyl's construction of Schur modules, carried out literally.

The symmetric group ``S_p`` acts on the right of ``V^{(x)p}`` by permuting
tensor positions: ``(v_1 (x) ... (x) v_p) . g = v_{g(1)} (x) ... (x) v_{g(p)}``.
With the group product ``(uv)(i) = u(v(i))`` this is a right action. The
Schur module of a partition is the image of right multiplication by its
Young symmetrizer, and the Schur matrix of ``A`` is the matrix of
``A^{(x)p}`` on that image in a basis that depends only on the partition
and the dimension.

Everything here is exact; there is no floating point.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations, product
from math import factorial
from typing import Iterable, Mapping, Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import InvariantViolation, OracleError
from .linalg import RationalMatrix, rank, rref, solve_unique
from .partitions import Partition, canonical_tableau, partitions_of, standard_tableau_count
from .schur_ring import SchurCombination

__all__ = [
    "Permutation",
    "GroupAlgebraElement",
    "young_symmetrizer",
    "row_symmetrizer",
    "column_antisymmetrizer",
    "symmetrizer_norm",
    "schur_module_dimension",
    "schur_matrix",
    "schur_trace",
    "power_sum_expansion",
    "trace_from_power_sums",
    "exterior_matrix",
    "lr_oracle",
]


class Permutation(tuple):
    """A bijection of ``{1..p}`` stored as its tuple of images ``(g(1), ..., g(p))``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _unchecked(cls, images: tuple[int, ...]) -> "Permutation":
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, p: int) -> "Permutation":
        return cls._unchecked(tuple(range(1, p + 1)))

    @classmethod
    def transposition(cls, p: int, i: int, j: int) -> "Permutation":
        images = list(range(1, p + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return tuple.__getitem__(self, i - 1)

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: ``(self * other)(i) = self(other(i))``."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if len(other) != len(self):
            raise ValueError("permutations of different degrees")
        return Permutation._unchecked(tuple(self[j - 1] for j in other))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, j in enumerate(self, start=1):
            inv[j - 1] = i
        return Permutation._unchecked(tuple(inv))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(1, len(self) + 1):
            if start in seen:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(i)
                i = self[i - 1]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def __repr__(self):
        return f"Permutation({tuple(self)!r})"


class GroupAlgebraElement:
    """Integer combination of permutations in ``Z[S_p]``."""

    __slots__ = ("p", "terms")

    def __init__(self, p: int, terms: Mapping[Sequence[int], int] | None = None):
        self.p = p
        clean: dict[Permutation, int] = {}
        for g, c in (terms or {}).items():
            g = g if isinstance(g, Permutation) else Permutation(g)
            if len(g) != p:
                raise ValueError(f"{g} is not in S_{p}")
            if c:
                clean[g] = clean.get(g, 0) + int(c)
                if not clean[g]:
                    del clean[g]
        self.terms = clean

    @classmethod
    def _raw(cls, p: int, terms: dict[Permutation, int]) -> "GroupAlgebraElement":
        obj = cls.__new__(cls)
        obj.p = p
        obj.terms = terms
        return obj

    @classmethod
    def identity(cls, p: int) -> "GroupAlgebraElement":
        return cls._raw(p, {Permutation.identity(p): 1})

    def coefficient(self, g: Sequence[int]) -> int:
        return self.terms.get(Permutation(g), 0)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        out = dict(self.terms)
        for g, c in other.terms.items():
            s = out.get(g, 0) + c
            if s:
                out[g] = s
            else:
                out.pop(g, None)
        return GroupAlgebraElement._raw(self.p, out)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, c: int) -> "GroupAlgebraElement":
        if not c:
            return GroupAlgebraElement._raw(self.p, {})
        return GroupAlgebraElement._raw(self.p, {g: c * v for g, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        out: dict[Permutation, int] = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                gh = g * h
                s = out.get(gh, 0) + a * b
                if s:
                    out[gh] = s
                else:
                    del out[gh]
        return GroupAlgebraElement._raw(self.p, out)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def _check(self, other) -> None:
        if not isinstance(other, GroupAlgebraElement) or other.p != self.p:
            raise ValueError("elements of different group algebras")

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self):
        return hash((self.p, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        items = sorted(self.terms.items())
        return f"GroupAlgebraElement({self.p}, {dict(items)!r})"


def _block_permutations(blocks: Sequence[Sequence[int]], p: int) -> list[Permutation]:
    """All permutations of ``{1..p}`` preserving each block setwise."""
    per_block = [list(permutations(block)) for block in blocks]
    out = []
    for choice in product(*per_block):
        images = list(range(1, p + 1))
        for block, image in zip(blocks, choice):
            for src, dst in zip(block, image):
                images[src - 1] = dst
        out.append(Permutation._unchecked(tuple(images)))
    return out


@lru_cache(maxsize=None)
def _row_and_column_groups(lam: Partition) -> tuple[tuple[Permutation, ...], tuple[Permutation, ...]]:
    tableau = canonical_tableau(lam)
    p = lam.weight
    return (
        tuple(_block_permutations(tableau.row_groups, p)),
        tuple(_block_permutations(tableau.column_groups, p)),
    )


def row_symmetrizer(lam: Sequence[int]) -> GroupAlgebraElement:
    """``b_lam``: the sum of all row-preserving permutations."""
    lam = Partition(lam)
    rows, _ = _row_and_column_groups(lam)
    return GroupAlgebraElement._raw(lam.weight, {v: 1 for v in rows})


def column_antisymmetrizer(lam: Sequence[int]) -> GroupAlgebraElement:
    """``a_lam``: the signed sum of all column-preserving permutations."""
    lam = Partition(lam)
    _, cols = _row_and_column_groups(lam)
    return GroupAlgebraElement._raw(lam.weight, {u: u.sign() for u in cols})


@lru_cache(maxsize=None)
def _young_symmetrizer(lam: Partition) -> GroupAlgebraElement:
    return column_antisymmetrizer(lam) * row_symmetrizer(lam)


def young_symmetrizer(lam: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> GroupAlgebraElement:
    """``c_lam = a_lam b_lam`` for the canonical tableau of ``lam``."""
    lam = Partition(lam)
    if not lam:
        raise ValueError("the Young symmetrizer needs a nonempty partition")
    budgets.check_weight(lam.weight)
    return _young_symmetrizer(lam)


def symmetrizer_norm(lam: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> int:
    """The integer ``n_lam`` with ``c_lam^2 = n_lam c_lam``, found by squaring in the group algebra."""
    c = young_symmetrizer(lam, budgets)
    square = c * c
    # c_lam has coefficient 1 on the identity since R and C meet trivially.
    norm = square.coefficient(Permutation.identity(c.p))
    if c.coefficient(Permutation.identity(c.p)) != 1 or square != c.scale(norm):
        raise InvariantViolation(f"c_{tuple(lam)}^2 is not a multiple of c_{tuple(lam)}")
    return norm


# -- Schur matrices ----------------------------------------------------------


def _tensor_index(word: Sequence[int], d: int) -> int:
    idx = 0
    for letter in word:
        idx = idx * d + letter
    return idx


def _right_action_columns(c: GroupAlgebraElement, d: int) -> dict[tuple[int, int], int]:
    """Sparse matrix of ``x -> x . c`` on ``(Q^d)^{(x)p}`` in the word basis."""
    p = c.p
    entries: dict[tuple[int, int], int] = {}
    for word in product(range(d), repeat=p):
        col = _tensor_index(word, d)
        for g, coeff in c.terms.items():
            # e_word . g = e_{word o g}
            row = _tensor_index([word[g[k] - 1] for k in range(p)], d)
            key = (row, col)
            s = entries.get(key, 0) + coeff
            if s:
                entries[key] = s
            else:
                del entries[key]
    return entries


@dataclass(frozen=True)
class _ModuleBasis:
    p: int
    d: int
    vectors: tuple[tuple[tuple[tuple[int, ...], Fraction], ...], ...]  # sparse (word, coeff) per basis vector
    rows: tuple[tuple[int, ...], ...]  # words whose coordinates determine a module vector
    coordinate_inverse: RationalMatrix | None


@lru_cache(maxsize=64)
def _module_basis(lam: Partition, d: int) -> _ModuleBasis:
    c = _young_symmetrizer(lam)
    p = lam.weight
    size = d ** p
    entries = _right_action_columns(c, d)
    _, pivots = rref(entries, (size, size))
    if not pivots:
        return _ModuleBasis(p, d, (), (), None)

    columns: list[dict[int, int]] = [{} for _ in pivots]
    where = {col: k for k, col in enumerate(pivots)}
    for (row, col), v in entries.items():
        if col in where:
            columns[where[col]][row] = v

    # Rows in which the basis vectors are independent: pivots of the transpose.
    transposed = {(k, row): v for k, column in enumerate(columns) for row, v in column.items()}
    _, row_pivots = rref(transposed, (len(pivots), size))
    block = RationalMatrix([[columns[k].get(r, 0) for k in range(len(pivots))] for r in row_pivots])

    def word(idx: int) -> tuple[int, ...]:
        letters = []
        for _ in range(p):
            idx, r = divmod(idx, d)
            letters.append(r)
        return tuple(reversed(letters))

    vectors = tuple(
        tuple((word(r), Fraction(v)) for r, v in sorted(column.items())) for column in columns
    )
    return _ModuleBasis(p, d, vectors, tuple(word(r) for r in row_pivots), block.inverse())


def schur_module_dimension(lam: Sequence[int], d: int, budgets: Budgets = DEFAULT_BUDGETS) -> int:
    lam = Partition(lam)
    if not lam:
        return 1
    budgets.check_weight(lam.weight)
    budgets.check_tensor(d, lam.weight)
    return len(_module_basis(lam, d).vectors)


def schur_matrix(lam: Sequence[int], A: RationalMatrix, budgets: Budgets = DEFAULT_BUDGETS) -> RationalMatrix | None:
    """The matrix of ``A^{(x)p}`` on the Schur module of ``lam``.

    The basis of the module consists of the pivot columns of the
    right-multiplication matrix of ``c_lam``, so it is fixed once per
    ``(lam, d)`` and the assignment ``A -> schur_matrix(lam, A)`` is
    multiplicative. Returns ``None`` when the module is zero.
    """
    lam = Partition(lam)
    if not A.is_square():
        raise ValueError("Schur matrices are defined for square matrices")
    d = A.nrows
    if not lam:
        return RationalMatrix([[1]])
    budgets.check_weight(lam.weight)
    budgets.check_tensor(d, lam.weight)
    basis = _module_basis(lam, d)
    if not basis.vectors:
        return None

    a = A.entries
    # Coordinates of A^{(x)p} b_k at the selected rows, then solve for the
    # expansion in the basis.
    image_rows = []
    for target in basis.rows:
        row = []
        for vector in basis.vectors:
            total = Fraction(0)
            for source, coeff in vector:
                term = coeff
                for t, s in zip(target, source):
                    term *= a[t][s]
                    if not term:
                        break
                total += term
            row.append(total)
        image_rows.append(row)
    return basis.coordinate_inverse @ RationalMatrix(image_rows)


@lru_cache(maxsize=None)
def _cycle_type_counts(lam: Partition) -> tuple[tuple[Partition, int], ...]:
    rows, cols = _row_and_column_groups(lam)
    counts: Counter[Partition] = Counter()
    for u in cols:
        su = u.sign()
        for v in rows:
            counts[(u * v).cycle_type()] += su
    return tuple(sorted((rho, c) for rho, c in counts.items() if c))


def power_sum_expansion(lam: Sequence[int], budgets: Budgets = DEFAULT_BUDGETS) -> dict[Partition, Fraction]:
    """Coefficients ``k_rho`` with ``Tr s_lam(A) = sum_rho k_rho prod_i Tr(A^{rho_i})``.

    Obtained from the trace of ``A^{(x)p}`` composed with the idempotent
    ``c_lam / n_lam``; a permutation with cycle type ``rho`` contributes
    ``prod_i Tr(A^{rho_i})``.
    """
    lam = Partition(lam)
    if not lam:
        return {Partition(): Fraction(1)}
    budgets.check_weight(lam.weight)
    scale = Fraction(standard_tableau_count(lam), factorial(lam.weight))
    return {rho: scale * c for rho, c in _cycle_type_counts(lam)}


def trace_from_power_sums(lam: Sequence[int], power_sums: Sequence, budgets: Budgets = DEFAULT_BUDGETS) -> Fraction:
    """Evaluate the character of ``lam`` given ``power_sums[j] = Tr(A^j)``."""
    total = Fraction(0)
    for rho, k in power_sum_expansion(lam, budgets).items():
        term = k
        for part in rho:
            term *= power_sums[part]
        total += term
    return total


def schur_trace(lam: Sequence[int], A: RationalMatrix, budgets: Budgets = DEFAULT_BUDGETS) -> Fraction:
    """``Tr s_lam(A)`` from the symmetrizer character sum, without building the Schur matrix."""
    lam = Partition(lam)
    if not A.is_square():
        raise ValueError("trace needs a square matrix")
    powers = [Fraction(A.nrows)]
    current = A
    for _ in range(lam.weight):
        powers.append(current.trace())
        current = current @ A
    return trace_from_power_sums(lam, powers, budgets)


def exterior_matrix(k: int, A: RationalMatrix) -> RationalMatrix:
    """``wedge^k A``: the matrix of k x k minors, subsets in lexicographic order."""
    if not A.is_square():
        raise ValueError("exterior powers need a square matrix")
    n = A.nrows
    if not 1 <= k <= n:
        raise ValueError(f"wedge^{k} of a {n}x{n} matrix is zero; need 1 <= k <= n")
    subsets = list(combinations(range(n), k))
    return RationalMatrix([[A.submatrix(I, J).det() for J in subsets] for I in subsets])


# -- evaluation oracle -------------------------------------------------------

_SMALL_PRIMES = (
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
)


def _power_sums_at(point: Sequence[int], top: int) -> list[int]:
    return [sum(x ** j for x in point) for j in range(top + 1)]


def lr_oracle(
    lam: Sequence[int],
    mu: Sequence[int],
    seed: int = 0,
    budgets: Budgets = DEFAULT_BUDGETS,
    max_points: int | None = None,
):
    """Decompose ``V^lam (x) V^mu`` by evaluating characters at diagonal matrices.

    Unknown multiplicities ``c_nu`` over all ``nu`` of weight
    ``|lam| + |mu|`` are determined from the identities
    ``sum_nu c_nu Tr s_nu(D) = Tr s_lam(D) Tr s_mu(D)`` at seeded prime
    diagonal matrices ``D`` of size ``|lam| + |mu|``; one further point is
    held out to confirm the solution.
    """
    lam, mu = Partition(lam), Partition(mu)
    n = lam.weight + mu.weight
    if n == 0:
        return SchurCombination.basis(())
    budgets.check_weight(n)
    candidates = partitions_of(n)
    if max_points is None:
        max_points = 4 * len(candidates) + 8
    rng = random.Random(seed)

    def sample() -> list[int]:
        return rng.sample(_SMALL_PRIMES, n)

    matrix: dict[tuple[int, int], Fraction] = {}
    rhs: dict[int, Fraction] = {}
    used = 0
    while True:
        if used >= max_points:
            raise OracleError(
                f"evaluation system for {tuple(lam)} x {tuple(mu)} still singular after {used} points; reseed"
            )
        sums = _power_sums_at(sample(), n)
        for j, nu in enumerate(candidates):
            matrix[(used, j)] = trace_from_power_sums(nu, sums, budgets)
        rhs[used] = trace_from_power_sums(lam, sums, budgets) * trace_from_power_sums(mu, sums, budgets)
        used += 1
        if used >= len(candidates) and rank(matrix, (used, len(candidates))) == len(candidates):
            break

    solution = solve_unique(matrix, (used, len(candidates)), rhs)

    held_out = _power_sums_at(sample(), n)
    lhs = sum(c * trace_from_power_sums(nu, held_out, budgets) for nu, c in zip(candidates, solution))
    expected = trace_from_power_sums(lam, held_out, budgets) * trace_from_power_sums(mu, held_out, budgets)
    if lhs != expected:
        raise OracleError("held-out evaluation point disagrees with the solved decomposition")
    if any(c.denominator != 1 or c < 0 for c in solution):
        raise OracleError(f"decomposition is not a nonnegative integer vector: {solution}")
    return SchurCombination({nu: int(c) for nu, c in zip(candidates, solution)})
