"""The lambda-ring of a torus, gamma-operations and Chern classes.

``R(T) = Z[a_1^{+-1}, ..., a_n^{+-1}]`` with ``lambda_t(xi) = 1 + xi t`` for
every monomial character ``xi``. Since every element is an integer
combination of monomial characters, ``lambda_t`` is evaluated as the
product ``prod_xi (1 + xi t)^{a_xi}``; a negative multiplicity contributes
the inverse power series.

The associated graded ring for the gamma-filtration is identified with
``Z[u_1, ..., u_n]`` through ``a_i -> 1 + u_i``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .config import DEFAULT_BUDGETS, Budgets
from .errors import InvariantViolation
from .grassmann_cohomology import CohomologyClass, GrassmannianShape, rho
from .laurent import GradedPolynomial, LaurentPolynomial, TorusElement
from .schur_ring import SchurCombination, expand_in_schur_basis

__all__ = [
    "TruncatedSeries",
    "lambda_series",
    "lambda_op",
    "gamma_series",
    "gamma_op",
    "augmentation",
    "gr_image",
    "gamma_degree",
    "chern_class",
    "chern_to_schubert",
    "standard_character",
    "symplectic_character",
    "character",
]


def character(exponents: Sequence[int]) -> TorusElement:
    """The monomial character ``a_1^{m_1} ... a_n^{m_n}``."""
    return LaurentPolynomial.monomial(exponents)


def standard_character(n: int) -> TorusElement:
    """``a_1 + ... + a_n``: the standard representation of GL_n restricted to T."""
    return LaurentPolynomial(n, {tuple(int(i == j) for j in range(n)): 1 for i in range(n)})


def symplectic_character(n: int) -> TorusElement:
    """``sum_i (a_i + a_i^{-1})``: the standard representation of Sp_2n restricted to T."""
    terms = {}
    for i in range(n):
        for sign in (1, -1):
            terms[tuple(sign if i == j else 0 for j in range(n))] = 1
    return LaurentPolynomial(n, terms)


def augmentation(x: TorusElement):
    """Dimension of a virtual representation: every character has dimension one."""
    return x.augmentation()


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{i <= order} coefficients[i] t^i`` with coefficients in R(T); higher terms are discarded."""

    coefficients: tuple[TorusElement, ...]

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def rank(self) -> int:
        return self.coefficients[0].nvars

    @classmethod
    def one(cls, rank: int, order: int) -> "TruncatedSeries":
        zero = LaurentPolynomial.zero(rank)
        return cls((LaurentPolynomial.constant(rank, 1),) + (zero,) * order)

    def __getitem__(self, i: int) -> TorusElement:
        return self.coefficients[i]

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        D = self.order
        out = [LaurentPolynomial.zero(self.rank) for _ in range(D + 1)]
        for i, a in enumerate(self.coefficients):
            if not a:
                continue
            for j in range(D + 1 - i):
                b = other.coefficients[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return TruncatedSeries(tuple(out))

    def scale(self, x: TorusElement | int) -> "TruncatedSeries":
        return TruncatedSeries(tuple(c * x for c in self.coefficients))

    def compose(self, inner: Sequence[int]) -> "TruncatedSeries":
        """Substitute ``t -> s(t)`` where ``s`` has integer coefficients and no constant term."""
        D = self.order
        if inner[0] != 0:
            raise ValueError("inner series must have zero constant term")
        inner = list(inner[: D + 1]) + [0] * (D + 1 - len(inner))
        power = [1] + [0] * D  # s^0
        out = [LaurentPolynomial.zero(self.rank) for _ in range(D + 1)]
        for i, coefficient in enumerate(self.coefficients):
            if coefficient:
                for j, c in enumerate(power):
                    if c:
                        out[j] = out[j] + coefficient * c
            power = [sum(power[a] * inner[j - a] for a in range(j + 1)) for j in range(D + 1)]
        return TruncatedSeries(tuple(out))

    def _check(self, other: "TruncatedSeries") -> None:
        if self.order != other.order or self.rank != other.rank:
            raise ValueError("series with different truncation order or rank")


def _generalized_binomial(a: int, j: int) -> int:
    num = 1
    for i in range(j):
        num *= a - i
    return num // math.factorial(j)


def lambda_series(x: TorusElement, order: int) -> TruncatedSeries:
    """``lambda_t(x)`` up to ``t^order``."""
    rank = x.nvars
    result = TruncatedSeries.one(rank, order)
    for exp, a in sorted(x.terms.items()):
        if a != int(a):
            raise ValueError("lambda operations need integer multiplicities")
        xi = LaurentPolynomial._raw(rank, {exp: 1})
        # (1 + xi t)^a, with a possibly negative
        factor = []
        power = LaurentPolynomial.constant(rank, 1)
        for j in range(order + 1):
            factor.append(power * _generalized_binomial(int(a), j))
            power = power * xi
        result = result * TruncatedSeries(tuple(factor))
    return result


def lambda_op(k: int, x: TorusElement) -> TorusElement:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return lambda_series(x, k)[k]


def gamma_series(x: TorusElement, order: int) -> TruncatedSeries:
    """``gamma_t(x) = lambda_{t/(1-t)}(x)`` up to ``t^order``."""
    s = [0] + [1] * order  # t/(1-t) = t + t^2 + ...
    return lambda_series(x, order).compose(s)


def gamma_op(k: int, x: TorusElement) -> TorusElement:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return gamma_series(x, k)[k]


@lru_cache(maxsize=None)
def _shifted_power(e: int, order: int) -> tuple[int, ...]:
    # (1 + u)^e truncated at u^order; for e < 0 this is the expanded inverse.
    return tuple(_generalized_binomial(e, j) for j in range(order + 1))


def gr_image(x: TorusElement, max_degree: int) -> GradedPolynomial:
    """Image of ``x`` under ``a_i -> 1 + u_i``, discarding total degree above ``max_degree``."""
    if max_degree < 0:
        raise ValueError("max_degree must be nonnegative")
    rank = x.nvars
    out: dict[tuple[int, ...], int] = {}
    for exp, c in x.terms.items():
        partial = {(): c}
        for e in exp:
            series = _shifted_power(e, max_degree)
            grown = {}
            for mono, v in partial.items():
                used = sum(mono)
                for j in range(max_degree - used + 1):
                    if series[j]:
                        grown[mono + (j,)] = v * series[j]
            partial = grown
        for mono, v in partial.items():
            s = out.get(mono, 0) + v
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
    return GradedPolynomial(rank, out)


def gamma_degree(x: TorusElement, max_degree: int) -> float:
    """Lowest total degree of ``gr_image(x)``; ``inf`` if it vanishes through ``max_degree``."""
    low = gr_image(x, max_degree).lowest_degree()
    return math.inf if low is None else low


def chern_class(k: int, x: TorusElement, budgets: Budgets = DEFAULT_BUDGETS, extra: int | None = None) -> GradedPolynomial:
    """``c_k(x) = gamma^k(x - eps(x))`` as a homogeneous polynomial of degree ``k`` in ``u``."""
    if k < 1:
        raise ValueError("Chern classes are indexed by k >= 1")
    if extra is None:
        extra = budgets.series_extra
    reduced = x - augmentation(x)
    g = gamma_op(k, reduced)
    image = gr_image(g, k + extra)
    low = image.lowest_degree()
    if low is not None and low < k:
        raise InvariantViolation(f"gamma^{k} of an augmentation-zero element has degree {low} < {k}")
    result = image.homogeneous_component(k)
    if gr_image(g, k + extra + 1).homogeneous_component(k) != result:
        raise InvariantViolation("degree-k part changed when the truncation order was raised")
    return GradedPolynomial._raw(result.nvars, result.terms)


def chern_to_schubert(k: int, shape: GrassmannianShape, budgets: Budgets = DEFAULT_BUDGETS) -> CohomologyClass:
    """Send ``c_k`` of the standard representation of GL_n to ``H*(G(m,n))`` through the Schur basis."""
    if k < 1:
        raise ValueError("k must be positive")
    n = shape.n
    if k > n:
        return rho(SchurCombination(), shape)
    c = chern_class(k, standard_character(n), budgets)
    as_character = LaurentPolynomial._raw(n, dict(c.terms))
    return rho(expand_in_schur_basis(as_character, n), shape)
