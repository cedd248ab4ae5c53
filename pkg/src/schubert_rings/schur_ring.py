"""The ring of symmetric functions in the Schur basis.

Products are computed the classical way: the second factor is expanded by
the Giambelli determinant into products of elementary classes ``e_k``, and
each ``e_k`` is applied to the first factor with the Pieri rule. No
tableau-based Littlewood-Richardson rule is used anywhere in this module;
``schur_functor.lr_oracle`` provides an independent check.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .laurent import LaurentPolynomial, elementary_symmetric
from .partitions import Partition, format_partition, parse_partition, partitions_of

__all__ = [
    "SchurCombination",
    "EPolynomial",
    "pieri",
    "giambelli",
    "apply_special_classes",
    "schur_multiply",
    "lr_coefficient",
    "schur_to_monomials",
    "expand_in_schur_basis",
]


class _SparseIntCombination:
    """Shared machinery: a sparse map ``Partition -> nonzero int``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Sequence[int], int] | None = None):
        clean: dict[Partition, int] = {}
        if terms:
            for key, c in terms.items():
                key = Partition(key)
                c = int(c)
                if c:
                    clean[key] = clean.get(key, 0) + c
                    if not clean[key]:
                        del clean[key]
        self.terms = clean

    @classmethod
    def _raw(cls, terms: dict[Partition, int]):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def basis(cls, lam: Sequence[int]):
        return cls._raw({Partition(lam): 1})

    def __add__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return type(self)._raw(out)

    def __neg__(self):
        return type(self)._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, type(self)):
            return NotImplemented
        return self + (-other)

    def scale(self, factor: int):
        if not factor:
            return type(self)._raw({})
        return type(self)._raw({k: c * factor for k, c in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.terms
        if not isinstance(other, type(self)):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self.terms, reverse=True))

    def items(self) -> list[tuple[Partition, int]]:
        return sorted(self.terms.items(), reverse=True)

    def coefficient(self, key: Sequence[int]) -> int:
        return self.terms.get(Partition(key), 0)


class SchurCombination(_SparseIntCombination):
    """Integer combination of Schur functions ``s_lambda`` (equally, of Schubert classes)."""

    __slots__ = ()

    def degrees(self) -> set[int]:
        return {k.weight for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    @property
    def degree(self) -> int | None:
        """Common weight of all keys; ``None`` for zero or mixed-weight combinations."""
        degrees = self.degrees()
        return degrees.pop() if len(degrees) == 1 else None

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, SchurCombination):
            return NotImplemented
        total = SchurCombination()
        for lam, a in self.terms.items():
            for mu, b in other.terms.items():
                total = total + schur_multiply(lam, mu).scale(a * b)
        return total

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def to_json(self) -> dict[str, int]:
        return {format_partition(k): c for k, c in self.items()}

    @classmethod
    def from_json(cls, data: Mapping[str, int]) -> "SchurCombination":
        return cls({parse_partition(k): int(v) for k, v in data.items()})

    def __repr__(self):
        return f"SchurCombination({self.to_json()!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(
            (f"s[{format_partition(k)}]" if c == 1 else f"{c}*s[{format_partition(k)}]")
            for k, c in self.items()
        ).replace("+ -", "- ")


class EPolynomial(_SparseIntCombination):
    """Polynomial in the elementary classes ``e_1, e_2, ...``.

    A key ``(k1, k2, ..., kr)`` (sorted decreasingly, so itself a partition)
    stands for the monomial ``e_k1 e_k2 ... e_kr``; the empty key is 1.
    """

    __slots__ = ()

    def times_e(self, k: int, max_index: int | None = None) -> "EPolynomial":
        if k == 0:
            return self
        if k < 0 or (max_index is not None and k > max_index):
            return EPolynomial._raw({})
        out = {}
        for key, c in self.terms.items():
            out[Partition(sorted(key + (k,), reverse=True))] = c
        return EPolynomial._raw(out)

    def to_json(self) -> dict[str, int]:
        """Keys are the e-indices of each monomial, e.g. ``"2,1"`` for ``e2*e1``."""
        return {format_partition(k): c for k, c in self.items()}

    def __repr__(self):
        return f"EPolynomial({self.to_json()!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for key, c in self.items():
            mono = "*".join(f"e{k}" for k in key) or "1"
            pieces.append(mono if c == 1 else f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


@lru_cache(maxsize=None)
def _pieri_shapes(lam: Partition, k: int) -> tuple[Partition, ...]:
    rows = len(lam) + k
    padded = list(lam) + [0] * k
    found = []
    # Add one box to each chosen row; no row receives two boxes.
    for chosen in combinations(range(rows), k):
        mu = padded[:]
        for r in chosen:
            mu[r] += 1
        if all(mu[i] >= mu[i + 1] for i in range(rows - 1)):
            found.append(Partition(mu))
    return tuple(sorted(found, reverse=True))


def pieri(lam: Sequence[int], k: int) -> SchurCombination:
    """``s_lam * e_k``: add ``k`` boxes to ``lam``, no two in the same row."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    lam = Partition(lam)
    if k == 0:
        return SchurCombination.basis(lam)
    return SchurCombination._raw({mu: 1 for mu in _pieri_shapes(lam, k)})


@lru_cache(maxsize=None)
def _giambelli(lam: Partition, max_index: int | None) -> EPolynomial:
    conj = lam.conjugate()
    size = len(conj)

    memo: dict[int, EPolynomial] = {}

    def minor(used: int) -> EPolynomial:
        # Laplace expansion along the first unused row; ``used`` marks the
        # columns already consumed by earlier rows.
        if used in memo:
            return memo[used]
        row = bin(used).count("1")
        if row == size:
            return EPolynomial._raw({Partition(): 1})
        total = EPolynomial._raw({})
        position = 0
        for col in range(size):
            if used >> col & 1:
                continue
            index = conj[row] + col - row
            if index >= 0 and (max_index is None or index <= max_index):
                sub = minor(used | (1 << col)).times_e(index)
                total = total + (sub if position % 2 == 0 else -sub)
            position += 1
        memo[used] = total
        return total

    return minor(0)


def giambelli(lam: Sequence[int], max_index: int | None = None) -> EPolynomial:
    """Expand ``s_lam = det(e_{lam'_i + j - i})`` into e-monomials.

    ``max_index`` sets ``e_k = 0`` for ``k > max_index`` (the relation that
    holds in ``n`` variables, or on an ``n``-dimensional space).
    """
    return _giambelli(Partition(lam), max_index)


@lru_cache(maxsize=None)
def _apply_special(lam: Partition, ks: tuple[int, ...]) -> SchurCombination:
    if not ks:
        return SchurCombination.basis(lam)
    total = SchurCombination._raw({})
    for mu in _pieri_shapes(lam, ks[0]) if ks[0] else (lam,):
        total = total + _apply_special(mu, ks[1:])
    return total


def apply_special_classes(lam: Sequence[int], ks: Iterable[int]) -> SchurCombination:
    """``s_lam * e_k1 * e_k2 * ...`` by successive Pieri steps, in the given order."""
    return _apply_special(Partition(lam), tuple(ks))


@lru_cache(maxsize=4096)
def _schur_multiply(lam: Partition, mu: Partition) -> SchurCombination:
    total = SchurCombination._raw({})
    for key, sign in giambelli(mu).terms.items():
        total = total + _apply_special(lam, tuple(key)).scale(sign)
    return total


def schur_multiply(lam: Sequence[int], mu: Sequence[int]) -> SchurCombination:
    """``s_lam * s_mu`` in the Schur basis: the constants ``c^nu_{lam,mu}``."""
    return _schur_multiply(Partition(lam), Partition(mu))


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if nu.weight != lam.weight + mu.weight:
        return 0
    return schur_multiply(lam, mu).coefficient(nu)


@lru_cache(maxsize=None)
def _e_monomial_in_variables(key: Partition, nvars: int) -> LaurentPolynomial:
    if not key:
        return LaurentPolynomial.constant(nvars, 1)
    return _e_monomial_in_variables(Partition(key[1:]), nvars) * elementary_symmetric(nvars, key[0])


def schur_to_monomials(lam: Sequence[int], nvars: int) -> LaurentPolynomial:
    """The Schur polynomial ``s_lam(x_1..x_n)`` as a sparse polynomial."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    total = LaurentPolynomial.zero(nvars)
    for key, c in giambelli(lam, max_index=nvars).terms.items():
        total = total + _e_monomial_in_variables(key, nvars) * c
    return total


def _leading_exponent(f: LaurentPolynomial) -> tuple[int, ...]:
    return max(tuple(sorted(exp, reverse=True)) for exp in f.terms)


def expand_in_schur_basis(f: LaurentPolynomial, nvars: int | None = None) -> SchurCombination:
    """Write a symmetric polynomial as an integer combination of Schur polynomials."""
    if nvars is None:
        nvars = f.nvars
    if f.nvars != nvars:
        raise ValueError(f"polynomial has {f.nvars} variables, expected {nvars}")
    if not f.is_polynomial():
        raise ValueError("negative exponents: not a polynomial character")
    if not f.is_symmetric():
        raise ValueError("input is not symmetric under permutations of the variables")

    budget = 1 + sum(len(partitions_of(d, max_length=nvars)) for d in f.total_degrees())
    result: dict[Partition, int] = {}
    remainder = f
    for _ in range(budget):
        if not remainder:
            return SchurCombination(result)
        lead = _leading_exponent(remainder)
        c = remainder.terms[lead]
        if c != int(c):
            raise ValueError("non-integral coefficient; not an integer combination of Schur polynomials")
        lam = Partition(lead)
        result[lam] = result.get(lam, 0) + int(c)
        remainder = remainder - schur_to_monomials(lam, nvars) * c
    raise ValueError("Schur expansion did not terminate; malformed input")
