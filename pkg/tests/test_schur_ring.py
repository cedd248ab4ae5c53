import pytest
from hypothesis import given, strategies as st

from oracles import lr_tableaux_count, semistandard_schur
from schubert_rings.laurent import LaurentPolynomial
from schubert_rings.partitions import Partition, partitions_of
from schubert_rings.schur_ring import (
    EPolynomial,
    SchurCombination,
    apply_special_classes,
    expand_in_schur_basis,
    giambelli,
    lr_coefficient,
    pieri,
    schur_multiply,
    schur_to_monomials,
)

small = st.integers(0, 4).flatmap(lambda k: st.sampled_from(partitions_of(k)))


def S(d):
    return SchurCombination(d)


def test_pieri_examples():
    assert pieri((1,), 1) == S({(2,): 1, (1, 1): 1})
    assert pieri((), 3) == S({(1, 1, 1): 1})
    # every vertical 2-strip on (2,1), including the one in rows 3 and 4
    assert pieri((2, 1), 2) == S({(3, 2): 1, (3, 1, 1): 1, (2, 2, 1): 1, (2, 1, 1, 1): 1})


@given(small, st.integers(1, 4))
def test_pieri_adds_vertical_strips(lam, k):
    for mu in pieri(lam, k):
        assert mu.weight == lam.weight + k
        padded = list(lam) + [0] * (len(mu) - len(lam))
        assert all(0 <= a - b <= 1 for a, b in zip(mu, padded))


def test_giambelli_examples():
    assert giambelli((1, 1, 1)) == EPolynomial({(3,): 1})
    assert giambelli((2, 1)) == EPolynomial({(2, 1): 1, (3,): -1})
    assert giambelli(()) == EPolynomial({(): 1})
    assert giambelli((2, 1), max_index=2) == EPolynomial({(2, 1): 1})


def test_schur_multiply_examples():
    assert schur_multiply((1,), (1,)) == S({(2,): 1, (1, 1): 1})
    assert schur_multiply((3, 1), ()) == S({(3, 1): 1})
    assert schur_multiply((2, 1), (2, 1)).coefficient((3, 2, 1)) == 2


def test_lr_coefficient_examples():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((3, 2), (), (3, 2)) == 1
    assert lr_coefficient((1,), (1,), (3,)) == 0


def test_multiplication_matches_lr_tableaux():
    parts = [p for k in range(5) for p in partitions_of(k)]
    for lam in parts:
        for mu in parts:
            product = schur_multiply(lam, mu)
            for nu in partitions_of(lam.weight + mu.weight):
                assert product.coefficient(nu) == lr_tableaux_count(lam, mu, nu), (lam, mu, nu)


@given(small, small)
def test_multiplication_commutes(lam, mu):
    assert schur_multiply(lam, mu) == schur_multiply(mu, lam)


@given(small, small, small)
def test_multiplication_associates(a, b, c):
    A, B, C = S({a: 1}), S({b: 1}), S({c: 1})
    assert (A * B) * C == A * (B * C)


@given(small, small)
def test_conjugation_symmetry(lam, mu):
    conj = {nu.conjugate(): c for nu, c in schur_multiply(lam, mu).terms.items()}
    assert schur_multiply(lam.conjugate(), mu.conjugate()) == S(conj)


def test_special_class_order_does_not_matter():
    for lam in partitions_of(3):
        assert apply_special_classes(lam, (1, 2, 2)) == apply_special_classes(lam, (2, 1, 2))
        assert apply_special_classes(lam, (3, 1)) == apply_special_classes(lam, (1, 3))


def test_schur_to_monomials_examples():
    assert schur_to_monomials((1, 1), 2) == LaurentPolynomial(2, {(1, 1): 1})
    assert schur_to_monomials((2,), 2) == LaurentPolynomial(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
    assert schur_to_monomials((1, 1, 1), 2) == 0


def test_schur_to_monomials_matches_tableaux():
    for n in range(1, 4):
        for k in range(5):
            for lam in partitions_of(k):
                assert schur_to_monomials(lam, n).terms == semistandard_schur(lam, n)


def test_expand_in_schur_basis_examples():
    x = LaurentPolynomial.variable(2, 0) + LaurentPolynomial.variable(2, 1)
    assert expand_in_schur_basis(x, 2) == S({(1,): 1})
    assert expand_in_schur_basis(x * x, 2) == S({(2,): 1, (1, 1): 1})
    assert expand_in_schur_basis(LaurentPolynomial(2, {(1, 1): 1}), 2) == S({(1, 1): 1})


def test_expand_in_schur_basis_round_trip():
    for n in range(1, 4):
        for k in range(5):
            for lam in partitions_of(k):
                if len(lam) <= n:
                    assert expand_in_schur_basis(schur_to_monomials(lam, n), n) == S({lam: 1})


def test_expand_rejects_non_symmetric():
    with pytest.raises(ValueError):
        expand_in_schur_basis(LaurentPolynomial.variable(2, 0), 2)


def test_combination_json_round_trip():
    c = S({(2,): 1, (1, 1): -3, (): 2})
    assert SchurCombination.from_json(c.to_json()) == c
    assert c.to_json() == {"2": 1, "1,1": -3, "": 2}
    assert S({(2,): 0}) == 0
    assert S({(2,): 1, (1,): 1}).degree is None
    assert S({(2,): 1, (1, 1): 1}).degree == 2
    assert isinstance(next(iter(S({(2,): 1}))), Partition)
