"""Cohomology of the Grassmannian G(m, n) in the Schubert basis.

Partitions index Schubert classes using the transposed convention: a class
``sigma_lam`` is nonzero exactly when ``lam`` has at most ``n`` parts, each
at most ``m`` (the diagram fits an ``n x m`` rectangle).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .laurent import LaurentPolynomial
from .partitions import (
    Partition,
    complement,
    fits_rectangle,
    format_partition,
    partitions_in_rectangle,
)
from .schur_ring import SchurCombination, expand_in_schur_basis, giambelli, pieri

__all__ = [
    "GrassmannianShape",
    "CohomologyClass",
    "NonFittingClassWarning",
    "truncate",
    "schubert_product",
    "sp_product",
    "rho",
    "betti_number",
    "top_pairing",
    "schubert_class",
]


class NonFittingClassWarning(UserWarning):
    pass


@dataclass(frozen=True)
class GrassmannianShape:
    m: int
    n: int

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError(f"Grassmannian shape needs m, n >= 1, got m={self.m}, n={self.n}")

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def dimension(self) -> int:
        """Complex dimension ``mn``, the weight of the full rectangle."""
        return self.m * self.n

    @property
    def rank(self) -> int:
        return comb(self.m + self.n, self.n)

    @property
    def rectangle(self) -> Partition:
        return Partition((self.m,) * self.n)

    def fits(self, lam: Sequence[int]) -> bool:
        return fits_rectangle(lam, self.n, self.m)

    def complement(self, lam: Sequence[int]) -> Partition:
        return complement(lam, self.n, self.m)

    def basis(self, k: int | None = None) -> list[Partition]:
        if k is not None:
            return partitions_in_rectangle(k, self.n, self.m)
        return [lam for d in range(self.dimension + 1) for lam in partitions_in_rectangle(d, self.n, self.m)]

    def to_json(self) -> dict:
        return {"m": self.m, "n": self.n}


@dataclass(frozen=True, eq=False)
class CohomologyClass:
    """A class in ``H*(G(m,n))``; ``degree_scale`` is 2, or 4 for the quaternionic analogue."""

    shape: GrassmannianShape
    terms: SchurCombination
    degree_scale: int = 2
    warning: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.degree_scale not in (2, 4):
            raise ValueError("degree_scale must be 2 (complex) or 4 (quaternionic)")
        for lam in self.terms.terms:
            if not self.shape.fits(lam):
                raise ValueError(f"{lam} does not fit the {self.shape.n}x{self.shape.m} rectangle")

    def __eq__(self, other):
        if not isinstance(other, CohomologyClass):
            return NotImplemented
        return (self.shape, self.terms, self.degree_scale) == (other.shape, other.terms, other.degree_scale)

    def __hash__(self):
        return hash((self.shape, self.terms, self.degree_scale))

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check_compatible(other)
        return CohomologyClass(self.shape, self.terms + other.terms, self.degree_scale)

    def __mul__(self, other: "CohomologyClass") -> "CohomologyClass":
        self._check_compatible(other)
        return truncate(self.terms * other.terms, self.shape, self.degree_scale)

    def _check_compatible(self, other: "CohomologyClass") -> None:
        if self.shape != other.shape or self.degree_scale != other.degree_scale:
            raise ValueError("classes live in different cohomology rings")

    def coefficient(self, lam: Sequence[int]) -> int:
        return self.terms.coefficient(lam)

    def degree_of(self, lam: Sequence[int]) -> int:
        """Cohomological (real) degree of the basis class indexed by ``lam``."""
        return self.degree_scale * Partition(lam).weight

    def degrees(self) -> set[int]:
        return {self.degree_of(lam) for lam in self.terms.terms}

    def to_json(self) -> dict:
        return {"shape": self.shape.to_json(), "scale": self.degree_scale, "terms": self.terms.to_json()}

    @classmethod
    def from_json(cls, data: Mapping) -> "CohomologyClass":
        shape = GrassmannianShape(int(data["shape"]["m"]), int(data["shape"]["n"]))
        return cls(shape, SchurCombination.from_json(data["terms"]), int(data.get("scale", 2)))

    def __str__(self):
        symbol = "sigma" if self.degree_scale == 2 else "tau"
        if not self.terms:
            return "0"
        return " + ".join(
            (f"{symbol}[{format_partition(k)}]" if c == 1 else f"{c}*{symbol}[{format_partition(k)}]")
            for k, c in self.terms.items()
        )


def truncate(c: SchurCombination, shape: GrassmannianShape, degree_scale: int = 2) -> CohomologyClass:
    """Set every class whose diagram does not fit the rectangle to zero."""
    kept = {lam: coeff for lam, coeff in c.terms.items() if shape.fits(lam)}
    return CohomologyClass(shape, SchurCombination._raw(kept), degree_scale)


def schubert_class(lam: Sequence[int], shape: GrassmannianShape, degree_scale: int = 2) -> CohomologyClass:
    return truncate(SchurCombination.basis(lam), shape, degree_scale)


def _product(lam, mu, shape: GrassmannianShape, degree_scale: int) -> CohomologyClass:
    lam, mu = Partition(lam), Partition(mu)
    bad = [format_partition(p) or "()" for p in (lam, mu) if not shape.fits(p)]
    if bad:
        message = f"partition(s) {', '.join(bad)} do not fit the {shape.n}x{shape.m} rectangle; product is zero"
        warnings.warn(message, NonFittingClassWarning, stacklevel=3)
        return CohomologyClass(shape, SchurCombination(), degree_scale, warning=message)
    total = SchurCombination()
    for key, sign in giambelli(mu, max_index=shape.n).terms.items():
        total = total + _special_in_ring(lam, tuple(key), shape.m, shape.n).scale(sign)
    return CohomologyClass(shape, total, degree_scale)


@lru_cache(maxsize=None)
def _special_in_ring(lam: Partition, ks: tuple[int, ...], m: int, n: int) -> SchurCombination:
    # Pieri steps inside the truncated ring: shapes leaving the rectangle die at every step.
    if not ks:
        return SchurCombination.basis(lam)
    total = SchurCombination()
    for nu in pieri(lam, ks[0]):
        if fits_rectangle(nu, n, m):
            total = total + _special_in_ring(nu, ks[1:], m, n)
    return total


def schubert_product(lam: Sequence[int], mu: Sequence[int], shape: GrassmannianShape) -> CohomologyClass:
    """Cup product ``sigma_lam . sigma_mu`` in ``H*(G(m,n))``.

    Computed inside the truncated ring: ``sigma_mu`` is expanded by
    Giambelli in the special classes ``sigma^k`` (``k <= n``), which then act
    on ``sigma_lam`` by Pieri steps that discard non-fitting shapes at once.
    """
    return _product(lam, mu, shape, 2)


def sp_product(lam: Sequence[int], mu: Sequence[int], shape: GrassmannianShape) -> CohomologyClass:
    """Product of ``tau_lam . tau_mu`` in the quaternionic Grassmannian (degrees doubled)."""
    return _product(lam, mu, shape, 4)


def rho(c: SchurCombination | LaurentPolynomial, shape: GrassmannianShape) -> CohomologyClass:
    """Send ``V^lam`` to ``sigma_lam``, extended linearly over Z.

    A character given as a symmetric polynomial is first written in the
    Schur basis; its variable count must be the quotient rank ``n``.
    """
    if isinstance(c, LaurentPolynomial):
        if c.nvars != shape.n:
            raise ValueError(f"characters of GL_{shape.n} need {shape.n} variables, got {c.nvars}")
        c = expand_in_schur_basis(c, shape.n)
    return truncate(c, shape)


def betti_number(shape: GrassmannianShape, k: int) -> int:
    """Rank of ``H^{2k}(G(m,n))``."""
    if k < 0:
        return 0
    return len(partitions_in_rectangle(k, shape.n, shape.m))


def top_pairing(c: CohomologyClass) -> int:
    """Coefficient of the point class (the full rectangle): the degree of ``c``."""
    return c.terms.coefficient(c.shape.rectangle)

