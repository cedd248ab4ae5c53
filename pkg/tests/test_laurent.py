from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from schubert_rings.laurent import GradedPolynomial, LaurentPolynomial, elementary_symmetric

exps = st.tuples(st.integers(-2, 2), st.integers(-2, 2))
elements = st.dictionaries(exps, st.integers(-3, 3), max_size=4).map(lambda d: LaurentPolynomial(2, d))


@given(elements, elements, elements)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0


@given(elements, st.tuples(st.sampled_from([1, 2, -1]), st.sampled_from([1, 3, Fraction(1, 2)])))
def test_evaluation_is_a_homomorphism(a, point):
    b = a * a + 1
    assert b.evaluate(point) == a.evaluate(point) ** 2 + 1


def test_zero_coefficients_dropped_and_json_round_trip():
    x = LaurentPolynomial(2, {(1, 0): 1, (0, -1): 0})
    assert x.terms == {(1, 0): 1}
    assert LaurentPolynomial.from_json(x.to_json()) == x
    assert x.to_json() == {"rank": 2, "terms": {"1,0": 1}}


def test_symmetry_check():
    assert elementary_symmetric(3, 2).is_symmetric()
    assert not LaurentPolynomial.variable(2, 0).is_symmetric()


def test_graded_polynomial_rejects_negative_exponents():
    with pytest.raises(ValueError):
        GradedPolynomial(1, {(-1,): 1})
    assert GradedPolynomial(1, {(1,): 1, (3,): 2}).truncate(2) == GradedPolynomial(1, {(1,): 1})
