"""Invariant forms on G(m, n) as elements of a finite exterior algebra.

The algebra has ``2mn`` anticommuting generators ``e_{i,a}`` and ``f_{i,a}``
(``1 <= i <= m``, ``1 <= a <= n``) standing for the one-forms of type
(1,0) and (0,1). Monomials are bit sets under the fixed generator order

    e_11 < e_12 < ... < e_mn < f_11 < ... < f_mn

so ``e_{i,a}`` is bit ``(i-1)*n + (a-1)`` and ``f_{i,a}`` is that bit plus ``mn``.

The curvature matrix is ``G_ab = sum_i e_{i,a} f_{i,b}``. The constant
``(i/2pi)^{|lam|}`` that normalizes a Schubert form of weight ``|lam|`` is
dropped; every identity checked here is homogeneous, so nothing is lost and
all coefficients stay rational.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from math import factorial
from numbers import Rational
from typing import Mapping, Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import InvariantViolation
from .laurent import normalize_coefficient
from .linalg import InconsistentSystem, UnderdeterminedSystem, rank, solve_unique
from .partitions import Partition, partitions_in_rectangle
from .schur_functor import Permutation, power_sum_expansion
from .schur_ring import SchurCombination, giambelli

__all__ = [
    "GrassmannElement",
    "CurvatureMatrix",
    "curvature_matrix",
    "chern_form",
    "schubert_form",
    "schubert_form_via_characters",
    "wedge_decompose",
    "is_zero_form",
    "top_coefficient",
    "schubert_form_rank",
]


@lru_cache(maxsize=None)
def _inversion_table(bits: int) -> tuple[bytes, ...]:
    """``table[a][b]``: parity of #{(x in a, y in b) : x > y} for subsets of ``bits`` generators."""
    size = 1 << bits
    # above[a][y] = parity of the number of elements of a greater than y
    above = [[bin(a >> (y + 1)).count("1") & 1 for y in range(bits)] for a in range(size)]
    table = []
    for a in range(size):
        row = bytearray(size)
        par = above[a]
        for b in range(1, size):
            low = (b & -b).bit_length() - 1
            row[b] = row[b & (b - 1)] ^ par[low]
        table.append(bytes(row))
    return tuple(table)


class GrassmannElement:
    """Sparse rational combination of exterior monomials in the ``2mn`` generators."""

    __slots__ = ("m", "n", "terms")

    def __init__(self, m: int, n: int, terms: Mapping[int, Rational] | None = None):
        self.m = m
        self.n = n
        limit = 1 << (2 * m * n)
        clean: dict[int, int | Fraction] = {}
        for mask, c in (terms or {}).items():
            if not 0 <= mask < limit:
                raise ValueError(f"monomial {mask:#x} uses generators outside the algebra")
            c = normalize_coefficient(c)
            if c:
                clean[mask] = clean.get(mask, 0) + c
                if not clean[mask]:
                    del clean[mask]
        self.terms = clean

    @classmethod
    def _raw(cls, m: int, n: int, terms: dict) -> "GrassmannElement":
        obj = cls.__new__(cls)
        obj.m, obj.n, obj.terms = m, n, terms
        return obj

    @classmethod
    def scalar(cls, m: int, n: int, value: Rational = 1) -> "GrassmannElement":
        value = normalize_coefficient(value)
        return cls._raw(m, n, {0: value} if value else {})

    @classmethod
    def e(cls, m: int, n: int, i: int, a: int) -> "GrassmannElement":
        return cls._raw(m, n, {1 << ((i - 1) * n + (a - 1)): 1})

    @classmethod
    def f(cls, m: int, n: int, i: int, a: int) -> "GrassmannElement":
        return cls._raw(m, n, {1 << (m * n + (i - 1) * n + (a - 1)): 1})

    @property
    def generator_count(self) -> int:
        return 2 * self.m * self.n

    def _check(self, other: "GrassmannElement") -> None:
        if not isinstance(other, GrassmannElement) or (self.m, self.n) != (other.m, other.n):
            raise ValueError("elements of different exterior algebras")

    def __add__(self, other: "GrassmannElement") -> "GrassmannElement":
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return GrassmannElement._raw(self.m, self.n, out)

    def __neg__(self) -> "GrassmannElement":
        return GrassmannElement._raw(self.m, self.n, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "GrassmannElement") -> "GrassmannElement":
        return self + (-other)

    def scale(self, c: Rational) -> "GrassmannElement":
        c = normalize_coefficient(c)
        if not c:
            return GrassmannElement._raw(self.m, self.n, {})
        return GrassmannElement._raw(
            self.m, self.n, {k: normalize_coefficient(v * c) for k, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        self._check(other)
        if not self.terms or not other.terms:
            return GrassmannElement._raw(self.m, self.n, {})
        top = self.generator_count
        if self.min_degree() + other.min_degree() > top:
            return GrassmannElement._raw(self.m, self.n, {})

        half = self.m * self.n
        low_mask = (1 << half) - 1
        table = _inversion_table(half)
        right = [
            (b, b & low_mask, b >> half, bin(b & low_mask).count("1") & 1, cb)
            for b, cb in other.terms.items()
        ]
        out: dict[int, int | Fraction] = {}
        get = out.get
        for a, ca in self.terms.items():
            ea, fa = a & low_mask, a >> half
            row_e, row_f = table[ea], table[fa]
            fa_odd = bin(fa).count("1") & 1
            for b, eb, fb, eb_odd, cb in right:
                if a & b:
                    continue
                # inversions: e-part vs e-part, f-part vs f-part, and every f of a against every e of b
                v = ca * cb
                if row_e[eb] ^ row_f[fb] ^ (fa_odd & eb_odd):
                    v = -v
                key = a | b
                out[key] = get(key, 0) + v
        return GrassmannElement._raw(
            self.m, self.n, {k: normalize_coefficient(v) for k, v in out.items() if v}
        )

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = GrassmannElement.scalar(self.m, self.n, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self) -> set[int]:
        return {bin(k).count("1") for k in self.terms}

    def min_degree(self) -> int:
        return min(bin(k).count("1") for k in self.terms)

    def form_types(self) -> set[tuple[int, int]]:
        """The ``(e-count, f-count)`` pairs occurring in the support."""
        half = self.m * self.n
        low = (1 << half) - 1
        return {(bin(k & low).count("1"), bin(k >> half).count("1")) for k in self.terms}

    def homogeneous_component(self, degree: int) -> "GrassmannElement":
        return GrassmannElement._raw(
            self.m, self.n, {k: c for k, c in self.terms.items() if bin(k).count("1") == degree}
        )

    def monomial_name(self, mask: int) -> str:
        half = self.m * self.n
        names = []
        for bit in range(2 * half):
            if mask >> bit & 1:
                letter = "e" if bit < half else "f"
                i, a = divmod(bit % half, self.n)
                names.append(f"{letter}{i + 1}{a + 1}")
        return "*".join(names) or "1"

    def to_json(self) -> dict[str, int | str]:
        return {
            self.monomial_name(k): (c if isinstance(c, int) else f"{c.numerator}/{c.denominator}")
            for k, c in sorted(self.terms.items())
        }

    def __repr__(self):
        return f"GrassmannElement(m={self.m}, n={self.n}, {self.to_json()!r})"


class CurvatureMatrix:
    """The ``n x n`` matrix of degree-two forms ``G_ab``."""

    __slots__ = ("m", "n", "entries")

    def __init__(self, m: int, n: int, entries: Sequence[Sequence[GrassmannElement]]):
        self.m, self.n = m, n
        self.entries = tuple(tuple(row) for row in entries)

    def __getitem__(self, ab: tuple[int, int]) -> GrassmannElement:
        a, b = ab
        return self.entries[a][b]

    def trace(self) -> GrassmannElement:
        total = GrassmannElement.scalar(self.m, self.n, 0)
        for a in range(self.n):
            total = total + self.entries[a][a]
        return total

    def __matmul__(self, other: "CurvatureMatrix") -> "CurvatureMatrix":
        n = self.n
        rows = []
        for a in range(n):
            row = []
            for b in range(n):
                total = GrassmannElement.scalar(self.m, self.n, 0)
                for c in range(n):
                    total = total + self.entries[a][c] * other.entries[c][b]
                row.append(total)
            rows.append(row)
        return CurvatureMatrix(self.m, self.n, rows)


@lru_cache(maxsize=None)
def _curvature(m: int, n: int) -> CurvatureMatrix:
    rows = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            entry = GrassmannElement.scalar(m, n, 0)
            for i in range(1, m + 1):
                entry = entry + GrassmannElement.e(m, n, i, a) * GrassmannElement.f(m, n, i, b)
            row.append(entry)
        rows.append(row)
    return CurvatureMatrix(m, n, rows)


def curvature_matrix(m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> CurvatureMatrix:
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    budgets.check_exterior(m, n)
    return _curvature(m, n)


def _commutative_det(block: Sequence[Sequence[GrassmannElement]], m: int, n: int) -> GrassmannElement:
    """Determinant of a matrix with pairwise commuting entries, by memoized Laplace expansion."""
    size = len(block)
    memo: dict[int, GrassmannElement] = {}

    def minor(used: int) -> GrassmannElement:
        if used in memo:
            return memo[used]
        row = bin(used).count("1")
        if row == size:
            return GrassmannElement.scalar(m, n, 1)
        total = GrassmannElement.scalar(m, n, 0)
        position = 0
        for col in range(size):
            if used >> col & 1:
                continue
            entry = block[row][col]
            if entry:
                term = entry * minor(used | 1 << col)
                total = total + term if position % 2 == 0 else total - term
            position += 1
        memo[used] = total
        return total

    return minor(0)


def _chern_form_subsets(k: int, gamma: CurvatureMatrix) -> GrassmannElement:
    total = GrassmannElement.scalar(gamma.m, gamma.n, 0)
    for subset in combinations(range(gamma.n), k):
        block = [[gamma[a, b] for b in subset] for a in subset]
        total = total + _commutative_det(block, gamma.m, gamma.n)
    return total


def _chern_form_permutations(k: int, gamma: CurvatureMatrix) -> GrassmannElement:
    # (1/k!) sum over index tuples alpha and beta with sgn(alpha; beta), which
    # vanishes unless beta is a rearrangement of alpha with distinct entries.
    m, n = gamma.m, gamma.n
    total = GrassmannElement.scalar(m, n, 0)
    for alpha in permutations(range(n), k):
        for pi in permutations(range(k)):
            sign = Permutation(i + 1 for i in pi).sign()
            term = GrassmannElement.scalar(m, n, sign)
            for j in range(k):
                term = term * gamma[alpha[j], alpha[pi[j]]]
            total = total + term
    return total.scale(Fraction(1, factorial(k)))


def chern_form(k: int, gamma: CurvatureMatrix, method: str = "subsets") -> GrassmannElement:
    """``Tr(wedge^k G)``: the sum of principal k x k minors of the curvature matrix.

    ``method="permutations"`` evaluates the signed sum over index tuples
    instead; both give the same element.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return GrassmannElement.scalar(gamma.m, gamma.n, 1)
    if k > gamma.n:
        return GrassmannElement.scalar(gamma.m, gamma.n, 0)
    if method == "subsets":
        return _cached_chern_form(k, gamma.m, gamma.n)
    if method == "permutations":
        return _chern_form_permutations(k, gamma)
    raise ValueError(f"unknown method {method!r}")


@lru_cache(maxsize=None)
def _cached_chern_form(k: int, m: int, n: int) -> GrassmannElement:
    return _chern_form_subsets(k, _curvature(m, n))


@lru_cache(maxsize=None)
def _e_monomial_form(key: Partition, m: int, n: int) -> GrassmannElement:
    # key = (k1 >= k2 >= ...): product of Chern forms, built by peeling off
    # the smallest index so each step multiplies by a small factor.
    if not key:
        return GrassmannElement.scalar(m, n, 1)
    gamma = _curvature(m, n)
    factor = chern_form(key[-1], gamma)
    if not factor:
        return GrassmannElement.scalar(m, n, 0)
    rest = _e_monomial_form(Partition(key[:-1]), m, n)
    return rest * factor


@lru_cache(maxsize=1024)
def _schubert_form(lam: Partition, m: int, n: int) -> GrassmannElement:
    total = GrassmannElement.scalar(m, n, 0)
    for key, c in giambelli(lam).terms.items():
        product = _e_monomial_form(key, m, n)
        if product:
            total = total + product.scale(c)
    return total


def schubert_form(lam: Sequence[int], m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> GrassmannElement:
    """``Omega_lam = Tr s_lam(G)``, computed as the Giambelli determinant in Chern forms."""
    budgets.check_exterior(m, n)
    return _schubert_form(Partition(lam), m, n)


def schubert_form_via_characters(lam: Sequence[int], m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> GrassmannElement:
    """``Omega_lam`` from the symmetrizer character, with ``p_j -> Tr(G^j)``."""
    budgets.check_exterior(m, n)
    lam = Partition(lam)
    gamma = _curvature(m, n)
    traces = [GrassmannElement.scalar(m, n, n)]
    power = gamma
    for _ in range(lam.weight):
        traces.append(power.trace())
        power = power @ gamma
    total = GrassmannElement.scalar(m, n, 0)
    for rho, coefficient in power_sum_expansion(lam, budgets).items():
        term = GrassmannElement.scalar(m, n, coefficient)
        for part in rho:
            term = term * traces[part]
        total = total + term
    return total


def is_zero_form(lam: Sequence[int], m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> bool:
    return not schubert_form(lam, m, n, budgets)


def _coordinate_system(forms: Sequence[GrassmannElement]):
    monomials = sorted({mask for form in forms for mask in form.terms})
    index = {mask: r for r, mask in enumerate(monomials)}
    entries = {(index[mask], j): c for j, form in enumerate(forms) for mask, c in form.terms.items()}
    return entries, index, len(monomials)


def schubert_form_rank(k: int, m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> tuple[int, int]:
    """``(rank, count)`` of the Schubert forms of weight ``k`` fitting the rectangle."""
    basis = partitions_in_rectangle(k, n, m)
    forms = [schubert_form(nu, m, n, budgets) for nu in basis]
    entries, _, nrows = _coordinate_system(forms)
    return rank(entries, (nrows, len(forms))), len(forms)


def wedge_decompose(lam: Sequence[int], mu: Sequence[int], m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> SchurCombination:
    """Write ``Omega_lam ^ Omega_mu`` in terms of the forms ``Omega_nu`` of the right weight.

    The coefficients are found by an exact linear solve in exterior-monomial
    coordinates, which fails loudly if the Schubert forms of that weight are
    dependent or the product is not in their span.
    """
    lam, mu = Partition(lam), Partition(mu)
    product = schubert_form(lam, m, n, budgets) * schubert_form(mu, m, n, budgets)
    candidates = partitions_in_rectangle(lam.weight + mu.weight, n, m)
    if not candidates:
        if product:
            raise InvariantViolation("nonzero form above the top degree")
        return SchurCombination()
    forms = [schubert_form(nu, m, n, budgets) for nu in candidates]
    entries, index, nrows = _coordinate_system(forms + [product])
    rhs = {index[mask]: c for mask, c in product.terms.items()}
    try:
        solution = solve_unique(entries, (nrows, len(forms)), rhs)
    except InconsistentSystem as exc:
        raise InvariantViolation(f"product of forms {tuple(lam)} and {tuple(mu)} is outside the span of Schubert forms") from exc
    except UnderdeterminedSystem as exc:
        raise InvariantViolation(f"Schubert forms of weight {lam.weight + mu.weight} are linearly dependent") from exc
    if any(c.denominator != 1 or c < 0 for c in solution):
        raise InvariantViolation(f"decomposition is not a nonnegative integer vector: {solution}")
    return SchurCombination({nu: int(c) for nu, c in zip(candidates, solution)})


def top_coefficient(x: GrassmannElement, m: int, n: int, budgets: Budgets = DEFAULT_BUDGETS) -> Fraction:
    """Multiple of the rectangle form carried by the top-degree part of ``x``."""
    top_degree = 2 * m * n
    top = x.homogeneous_component(top_degree)
    if not top:
        return Fraction(0)
    reference = schubert_form((m,) * n, m, n, budgets)
    (mask, ref_coefficient), = reference.terms.items()
    ratio = Fraction(top.terms.get(mask, 0)) / Fraction(ref_coefficient)
    if top != reference.scale(ratio):
        raise InvariantViolation("top-degree part is not proportional to the rectangle form")
    return ratio
