from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import naive_wedge
from schubert_rings.config import Budgets
from schubert_rings.curvature_forms import (
    GrassmannElement,
    chern_form,
    curvature_matrix,
    is_zero_form,
    schubert_form,
    schubert_form_rank,
    schubert_form_via_characters,
    top_coefficient,
    wedge_decompose,
)
from schubert_rings.errors import BudgetExceeded
from schubert_rings.grassmann_cohomology import GrassmannianShape, truncate
from schubert_rings.partitions import fits_rectangle, partitions_of
from schubert_rings.schur_ring import SchurCombination, schur_multiply

SHAPES = [(m, n) for m in (1, 2, 3) for n in (1, 2, 3)]

elements_22 = st.dictionaries(
    st.integers(0, (1 << 8) - 1), st.integers(-3, 3).map(Fraction), max_size=5
)


def e(m, n, i, a):
    return GrassmannElement.e(m, n, i, a)


def f(m, n, i, a):
    return GrassmannElement.f(m, n, i, a)


def test_anticommutation():
    x, y = e(2, 2, 1, 1), f(2, 2, 2, 1)
    assert x * y == -(y * x)
    assert x * x == 0
    assert (x * y) * (x * y) == 0


@given(elements_22, elements_22)
def test_product_matches_bubble_sort_signs(a, b):
    A, B = GrassmannElement(2, 2, a), GrassmannElement(2, 2, b)
    assert (A * B).terms == naive_wedge(A.terms, B.terms)


@given(elements_22, elements_22, elements_22)
def test_product_associates(a, b, c):
    A, B, C = (GrassmannElement(2, 2, t) for t in (a, b, c))
    assert (A * B) * C == A * (B * C)


def test_curvature_examples():
    assert curvature_matrix(1, 1)[0, 0] == e(1, 1, 1, 1) * f(1, 1, 1, 1)
    assert curvature_matrix(2, 1)[0, 0] == e(2, 1, 1, 1) * f(2, 1, 1, 1) + e(2, 1, 2, 1) * f(2, 1, 2, 1)
    G = curvature_matrix(2, 3)
    for a in range(3):
        for b in range(3):
            assert G[a, b].form_types() == {(1, 1)}


def test_curvature_budget():
    with pytest.raises(BudgetExceeded):
        curvature_matrix(2, 2, Budgets(exterior_mn=3))


def test_chern_form_examples():
    G = curvature_matrix(2, 3)
    assert chern_form(1, G) == G.trace()
    assert chern_form(4, G) == 0
    assert chern_form(0, G) == 1
    G11 = curvature_matrix(1, 1)
    c1 = chern_form(1, G11)
    assert c1 == e(1, 1, 1, 1) * f(1, 1, 1, 1)
    assert c1 * c1 == 0


@pytest.mark.parametrize("m, n", SHAPES)
def test_chern_form_two_formulations_agree(m, n):
    G = curvature_matrix(m, n)
    for k in range(n + 2):
        assert chern_form(k, G, "subsets") == chern_form(k, G, "permutations")


def test_schubert_form_examples():
    for k in (1, 2, 3):
        assert schubert_form((1,) * k, 2, 3) == chern_form(k, curvature_matrix(2, 3))
    assert schubert_form((3,), 2, 2) == 0
    assert schubert_form((), 2, 2) == 1


@pytest.mark.parametrize("m, n", SHAPES)
def test_type_purity(m, n):
    for k in range(m * n + 1):
        for lam in partitions_of(k):
            if fits_rectangle(lam, n, m):
                assert schubert_form(lam, m, n).form_types() == {(k, k)}


@pytest.mark.parametrize("m, n", SHAPES)
def test_vanishing_exactly_outside_rectangle(m, n):
    for k in range(m * n + 3):
        for lam in partitions_of(k):
            assert is_zero_form(lam, m, n) == (not fits_rectangle(lam, n, m))


def test_vanishing_examples():
    assert is_zero_form((3,), 2, 2)
    assert not is_zero_form((2, 2), 2, 2)
    assert is_zero_form((1, 1, 1), 2, 2)


@pytest.mark.parametrize("m, n", SHAPES)
def test_linear_independence(m, n):
    for k in range(m * n + 1):
        rank, count = schubert_form_rank(k, m, n)
        assert rank == count


def test_wedge_examples():
    S = SchurCombination
    assert wedge_decompose((1,), (1,), 2, 2) == S({(2,): 1, (1, 1): 1})
    assert wedge_decompose((2, 1), (1,), 2, 2) == S({(2, 2): 1})
    assert wedge_decompose((1,), (1,), 1, 1) == S()


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2)])
def test_wedge_product_identity(m, n):
    shape = GrassmannianShape(m, n)
    fitting = shape.basis()
    for lam in fitting:
        for mu in fitting:
            if lam.weight + mu.weight <= m * n:
                expected = truncate(schur_multiply(lam, mu), shape).terms
                assert wedge_decompose(lam, mu, m, n) == expected


def test_top_coefficient_examples():
    assert top_coefficient(schubert_form((2, 2), 2, 2), 2, 2) == 1
    assert top_coefficient(schubert_form((2, 1), 2, 2) * schubert_form((1,), 2, 2), 2, 2) == 1
    assert top_coefficient(schubert_form((2,), 2, 2) * schubert_form((2,), 2, 2), 2, 2) == 1
    assert top_coefficient(schubert_form((1, 1), 2, 2) * schubert_form((2,), 2, 2), 2, 2) == 0
    assert top_coefficient(schubert_form((1,), 2, 2), 2, 2) == 0


@pytest.mark.parametrize("m, n", [(2, 2), (2, 3), (3, 2)])
def test_top_coefficient_is_duality_pairing(m, n):
    shape = GrassmannianShape(m, n)
    for lam in shape.basis():
        for mu in shape.basis(m * n - lam.weight):
            x = schubert_form(lam, m, n) * schubert_form(mu, m, n)
            assert top_coefficient(x, m, n) == (1 if mu == shape.complement(lam) else 0)


def test_character_route_reproduces_forms():
    for k in range(4):
        for lam in partitions_of(k):
            assert schubert_form_via_characters(lam, 2, 2) == schubert_form(lam, 2, 2)
