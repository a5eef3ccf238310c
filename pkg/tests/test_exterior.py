from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dgakit.cdga import catalog
from dgakit.exterior import (AlgebraError, GradedAlgebra, basis_of_degree, linear_combine, multiply,
                             normalize_word)

from conftest import poly, word
from oracles import bubble_sign, wedge_words

SIX = GradedAlgebra((f"x{i}", 1) for i in range(1, 7))


def mono(*idx):
    return tuple(1 if i in idx else 0 for i in range(1, 7))


def test_normalize_word_examples():
    assert normalize_word(SIX, ["x6", "x2", "x5"]) == (1, mono(2, 5, 6))
    assert normalize_word(SIX, ["x1", "x1"]) is None
    assert normalize_word(SIX, ["x2", "x1"]) == (-1, mono(1, 2))


def test_normalize_word_unknown_generator():
    with pytest.raises(AlgebraError):
        normalize_word(SIX, ["x7"])


def test_normalize_word_even_generators_commute():
    alg = GradedAlgebra([("a", 1), ("u", 2), ("b", 1)])
    assert normalize_word(alg, ["u", "b", "u", "a"]) == (-1, (1, 2, 1))


@given(st.permutations(range(1, 7)), st.integers(0, 6))
def test_normalize_word_matches_bubble_sort(perm, k):
    perm = list(perm)[:k]
    sign, sorted_idx = bubble_sign(perm)
    assert normalize_word(SIX, [f"x{i}" for i in perm]) == (sign, mono(*sorted_idx))


def test_multiply_examples(g6, omega_tilde):
    assert word(g6, "6") * word(g6, "45") == word(g6, "456")
    assert word(g6, "6") * omega_tilde == poly(g6, {"256": 1, "346": -1})
    assert g6.algebra.one() * omega_tilde == omega_tilde


def test_omega_cubed_against_oracle(omega_tilde):
    expected = wedge_words(*[{"16": 2, "25": 1, "34": -1}] * 3)
    assert expected == {"123456": -12}
    assert omega_tilde ** 3 == word(catalog("g6_15_m1"), "123456", -12)


def test_multiply_mixed_algebras():
    with pytest.raises(AlgebraError):
        multiply(SIX.gen("x1"), GradedAlgebra([("y", 1)]).gen("y"))


def test_linear_combine():
    g6 = catalog("g6_15_m1")
    a = poly(g6, {"16": 1, "25": 1})
    b = poly(g6, {"16": 1, "34": -1})
    assert linear_combine([(1, a), (1, b)]) == poly(g6, {"16": 2, "25": 1, "34": -1})
    assert linear_combine([(1, a), (-1, a)]).is_zero()
    assert linear_combine([(Fraction(1, 2), word(g6, "16", 2))]) == word(g6, "16")
    with pytest.raises(AlgebraError):
        linear_combine([(1, a), (1, GradedAlgebra([("y", 1)]).gen("y"))])


def test_basis_of_degree_examples():
    assert len(basis_of_degree(SIX, 2, 6)) == 15
    assert basis_of_degree(SIX, 6, 6) == [(1,) * 6]
    uv = GradedAlgebra([("u", 2), ("v", 3)])
    assert basis_of_degree(uv, 4, 4) == [(2, 0)]
    with pytest.raises(ValueError):
        basis_of_degree(SIX, 3, 2)


def test_basis_canonical_order():
    assert basis_of_degree(SIX, 2)[:3] == [mono(1, 2), mono(1, 3), mono(1, 4)]
    assert basis_of_degree(SIX, 2)[-1] == mono(5, 6)


@pytest.mark.parametrize("n", range(0, 8))
def test_binomial_dimensions(n):
    alg = GradedAlgebra((f"y{i}", 1) for i in range(n))
    assert [len(alg.basis(k)) for k in range(n + 1)] == [comb(n, k) for k in range(n + 1)]


def test_element_string_form():
    g6 = catalog("g6_15_m1")
    assert str(poly(g6, {"34": -1, "16": 2, "25": 1})) == "2*x1*x6 + x2*x5 - x3*x4"
    assert str(word(g6, "1", Fraction(-1, 2))) == "-1/2*x1"
    assert str(g6.algebra.zero()) == "0"


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        SIX.gen("x1") * 0.5


# -- randomized algebraic laws --

MIXED = GradedAlgebra([("a", 1), ("u", 2), ("b", 1), ("v", 3), ("w", 2)])


@st.composite
def homogeneous(draw, alg=MIXED, max_deg=5):
    k = draw(st.integers(0, max_deg))
    basis = alg.basis(k)
    if not basis:
        return alg.zero()
    out = alg.zero()
    for _ in range(draw(st.integers(0, 3))):
        m = draw(st.sampled_from(basis))
        c = draw(st.fractions(min_value=-3, max_value=3, max_denominator=4))
        out = out + alg.monomial(m, c)
    return out


def _deg(x):
    return x.degree or 0


@settings(max_examples=150)
@given(homogeneous(), homogeneous())
def test_graded_commutativity(a, b):
    assert a * b == b * a * (-1) ** (_deg(a) * _deg(b))


@settings(max_examples=100)
@given(homogeneous(), homogeneous(), homogeneous())
def test_associativity_distributivity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
