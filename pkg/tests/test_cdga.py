import pytest
from hypothesis import given, settings, strategies as st

from dgakit.cdga import (JacobiError, StructureConstants, ValidationError, catalog, chevalley_eilenberg,
                         structure_constants_of, validate)
from dgakit.exterior import AlgebraError, GradedAlgebra

from conftest import CATALOG, CAPS, poly, word
import printed_tables as T


def test_generator_table(g6):
    for i, d in T.GENERATOR_TABLE.items():
        assert g6.differential[f"x{i}"] == poly(g6, d)


def test_catalog_entries(g6):
    assert g6.differential["x5"] == poly(g6, {"36": -1, "56": 1})
    ab = catalog("abelian(3)")
    assert ab == catalog("abelian3")
    assert all(not v for v in ab.differential.values())
    s2 = catalog("s2_model")
    u = s2.gen("u")
    assert s2.d(u * u).is_zero()
    assert s2.d(s2.gen("v")) == u * u
    assert catalog("circle").algebra.generators == (("t", 1),)
    with pytest.raises(KeyError):
        catalog("nope")


def test_extend_differential_examples(g6):
    assert g6.d(word(g6, "16")) == word(g6, "236", -1)
    assert g6.d(word(g6, "24")) == word(g6, "246", 2)
    assert g6.d(word(g6, "45")) == poly(g6, {"256": 1, "346": -1})
    assert g6.d(g6.algebra.one()).is_zero()
    with pytest.raises(AlgebraError):
        g6.d(GradedAlgebra([("y", 1)]).gen("y"))


@pytest.mark.parametrize("table", [T.TWO_FORMS, T.THREE_FORMS, T.FOUR_FORMS, T.FIVE_FORMS],
                         ids=["2-forms", "3-forms", "4-forms", "5-forms"])
def test_printed_tables_outside_the_misprints(g6, table):
    for w, img in table.items():
        if w not in T.MISPRINTED:
            assert g6.d(word(g6, w)) == poly(g6, img), w


def test_closed_three_forms(g6):
    for w in T.CLOSED_THREE_FORMS:
        assert g6.d(word(g6, w)).is_zero()


# Hand expansions by the Leibniz rule; these differ from the printed table.
HAND_CHECKED = {
    "145": {"1256": -1, "1346": 1, "2345": -1},
    "156": {"2356": -1},
    "245": {"2346": 1, "2456": -1},
    "1235": {"12356": -1},
    "1345": {"12356": -1, "13456": -1},
}


@pytest.mark.parametrize("w", sorted(HAND_CHECKED))
def test_hand_checked_entries(g6, w):
    assert g6.d(word(g6, w)) == poly(g6, HAND_CHECKED[w])


def test_validate_rejects_wrong_degree():
    alg = GradedAlgebra([("x", 1)])
    with pytest.raises(ValidationError) as e:
        validate(alg, {"x": alg.gen("x")})
    assert e.value.diagnostics[0].generator == "x"


def test_validate_rejects_nonzero_square():
    # |a| = 1, |b| = 2, da = b, db = a*b: d(d(a)) = a*b
    alg = GradedAlgebra([("a", 1), ("b", 2)])
    a, b = alg.gen("a"), alg.gen("b")
    with pytest.raises(ValidationError) as e:
        validate(alg, {"a": b, "b": a * b})
    diag = e.value.diagnostics
    # d(d(b)) = d(a*b) = b^2 is nonzero as well
    assert [d.generator for d in diag] == ["a", "b"]
    assert diag[0].residue == str(a * b)
    assert diag[1].residue == str(b * b)


def test_validate_zero_differential():
    assert validate([("p", 1), ("q", 2)], {}).validated


def test_chevalley_eilenberg_examples():
    assert all(not v for v in chevalley_eilenberg(StructureConstants(3, {})).differential.values())
    h = chevalley_eilenberg(StructureConstants(3, {(0, 1): {2: 1}}))
    assert h.differential["x3"] == -(h.gen("x1") * h.gen("x2"))


def test_chevalley_eilenberg_reproduces_g6(g6):
    sc = structure_constants_of(g6)
    # [e2, e3] = e1 read off d x1 = -x23
    assert sc.get(1, 2, 0) == 1
    assert chevalley_eilenberg(sc) == g6


def test_jacobi_failure_reported():
    # [e1,e2]=e3, [e2,e3]=e1, [e1,e3]=e1 breaks Jacobi
    sc = StructureConstants(3, {(0, 1): {2: 1}, (1, 2): {0: 1}, (0, 2): {0: 1}})
    with pytest.raises(JacobiError) as e:
        chevalley_eilenberg(sc)
    assert e.value.triples == [(0, 1, 2)]


@st.composite
def element_of(draw, cdga, max_deg):
    alg = cdga.algebra
    k = draw(st.integers(0, max_deg))
    basis = alg.basis(k)
    out = alg.zero()
    if basis:
        for _ in range(draw(st.integers(0, 3))):
            out = out + alg.monomial(draw(st.sampled_from(basis)), draw(st.integers(-3, 3)))
    return out


@pytest.mark.parametrize("name", CATALOG)
def test_leibniz_and_square_zero(name):
    cdga = catalog(name)
    top = cdga.top_degree if cdga.top_degree is not None else CAPS[name] // 2

    @settings(max_examples=60, deadline=None)
    @given(element_of(cdga, top), element_of(cdga, top))
    def check(a, b):
        sign = (-1) ** (a.degree or 0)
        assert cdga.d(a * b) == cdga.d(a) * b + a * cdga.d(b) * sign
        assert cdga.d(cdga.d(a)).is_zero()

    check()
