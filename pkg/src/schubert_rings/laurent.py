"""Sparse multivariate Laurent polynomials with exact coefficients.

A polynomial in ``n`` variables is a mapping from exponent tuples (length
``n``, entries in Z) to nonzero integer or :class:`~fractions.Fraction`
coefficients. Zero coefficients are never stored, so the zero polynomial
has empty ``terms``.

  x1^2 x2^-1 + 3  ->  {(2, -1): 1, (0, 0): 3}
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from numbers import Rational
from typing import Callable, Iterable, Mapping, Sequence

Exponent = tuple[int, ...]
Coefficient = int | Fraction

__all__ = [
    "LaurentPolynomial",
    "VirtualCharacter",
    "TorusElement",
    "GradedPolynomial",
    "normalize_coefficient",
]


def normalize_coefficient(c: Rational) -> Coefficient:
    """Demote integral fractions to ``int`` so integer arithmetic stays fast."""
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


class LaurentPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Rational] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        self.nvars = nvars
        clean: dict[Exponent, Coefficient] = {}
        if terms:
            for exp, c in terms.items():
                exp = tuple(int(e) for e in exp)
                if len(exp) != nvars:
                    raise ValueError(f"exponent {exp} does not have length {nvars}")
                c = normalize_coefficient(c)
                if c:
                    clean[exp] = clean.get(exp, 0) + c
                    if not clean[exp]:
                        del clean[exp]
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: dict[Exponent, Coefficient]):
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, nvars: int):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, value: Rational):
        value = normalize_coefficient(value)
        return cls._raw(nvars, {(0,) * nvars: value} if value else {})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: Rational = 1):
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: coefficient})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1):
        """The monomial ``x_{index}^power`` (zero-based index)."""
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range for {nvars} variables")
        exp = [0] * nvars
        exp[index] = power
        return cls._raw(nvars, {tuple(exp): 1})

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, Rational):
            return type(self).constant(self.nvars, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return type(self)._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Rational):
            other = normalize_coefficient(other)
            if not other:
                return type(self).zero(self.nvars)
            return type(self)._raw(self.nvars, {e: normalize_coefficient(c * other) for e, c in self.terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, Coefficient] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return type(self)._raw(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial inverses")
        result = type(self).constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Rational):
            other = type(self).constant(self.nvars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {self.terms!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            mono = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}" for i, e in enumerate(exp) if e
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    # -- queries --------------------------------------------------------
    def coefficient(self, exponent: Sequence[int]) -> Coefficient:
        return self.terms.get(tuple(exponent), 0)

    def augmentation(self) -> Coefficient:
        """Sum of all coefficients (value at the all-ones point)."""
        return normalize_coefficient(sum(self.terms.values(), 0))

    def is_polynomial(self) -> bool:
        return all(e >= 0 for exp in self.terms for e in exp)

    def total_degrees(self) -> set[int]:
        return {sum(exp) for exp in self.terms}

    def homogeneous_component(self, degree: int):
        return type(self)._raw(self.nvars, {e: c for e, c in self.terms.items() if sum(e) == degree})

    def lowest_degree(self) -> int | None:
        return min(self.total_degrees()) if self.terms else None

    def permute_variables(self, perm: Sequence[int]):
        """Substitute ``x_i -> x_{perm[i]}`` (zero-based)."""
        out = {}
        for exp, c in self.terms.items():
            new = [0] * self.nvars
            for i, e in enumerate(exp):
                new[perm[i]] = e
            out[tuple(new)] = c
        return type(self)._raw(self.nvars, out)

    def is_symmetric(self) -> bool:
        # Each exponent orbit must carry a constant coefficient; checking
        # orbits is cheaper than applying all n! permutations.
        for exp, c in self.terms.items():
            for other in set(permutations(exp)):
                if self.terms.get(other, 0) != c:
                    return False
        return True

    def evaluate(self, point: Sequence[Rational]) -> Coefficient:
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        point = [Fraction(x) for x in point]
        total = Fraction(0)
        for exp, c in self.terms.items():
            value = Fraction(c)
            for x, e in zip(point, exp):
                if e:
                    value *= x ** e
            total += value
        return normalize_coefficient(total)

    def map_coefficients(self, fn: Callable[[Coefficient], Rational]):
        return type(self)(self.nvars, {e: fn(c) for e, c in self.terms.items()})

    # -- serialization --------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rank": self.nvars,
            "terms": {
                ",".join(str(e) for e in exp): _coefficient_to_json(c)
                for exp, c in sorted(self.terms.items(), reverse=True)
            },
        }

    @classmethod
    def from_json(cls, data: Mapping):
        nvars = int(data["rank"])
        terms = {}
        for key, value in data["terms"].items():
            exp = tuple(int(piece) for piece in key.split(",")) if key else ()
            terms[exp] = Fraction(value) if isinstance(value, str) else value
        return cls(nvars, terms)


def _coefficient_to_json(c: Coefficient):
    return c if isinstance(c, int) else f"{c.numerator}/{c.denominator}"


VirtualCharacter = LaurentPolynomial
TorusElement = LaurentPolynomial


class GradedPolynomial(LaurentPolynomial):
    """Polynomial with nonnegative exponents, in the variables ``u_1..u_n``."""

    __slots__ = ()

    def __init__(self, nvars: int, terms=None):
        super().__init__(nvars, terms)
        if not self.is_polynomial():
            raise ValueError("graded polynomials have nonnegative exponents")

    def truncate(self, max_degree: int) -> "GradedPolynomial":
        return GradedPolynomial._raw(
            self.nvars, {e: c for e, c in self.terms.items() if sum(e) <= max_degree}
        )

    def __str__(self):
        return super().__str__().replace("x", "u")


def elementary_symmetric(nvars: int, k: int, cls: type[LaurentPolynomial] = LaurentPolynomial):
    """``e_k(x_1..x_n)``; zero when ``k > n`` and one when ``k == 0``."""
    from itertools import combinations

    if k < 0 or k > nvars:
        return cls.zero(nvars)
    terms = {}
    for subset in combinations(range(nvars), k):
        exp = [0] * nvars
        for i in subset:
            exp[i] = 1
        terms[tuple(exp)] = 1
    return cls._raw(nvars, terms)


def power_sum_values(point: Iterable[Rational], max_power: int) -> list[Fraction]:
    """``[p_0, p_1, ..., p_max]`` evaluated at ``point``."""
    point = [Fraction(x) for x in point]
    return [sum((x ** j for x in point), Fraction(0)) for j in range(max_power + 1)]
