import pytest
from hypothesis import given, settings, strategies as st

from dgakit.cdga import ValidationError, catalog
from dgakit.dsl import DslError, load_algebra, parse_algebra, parse_element, to_source

from conftest import CATALOG, poly

G6_SOURCE = """
# the six-dimensional nilpotent example
algebra g6_15_m1 {
  generators: x1:1, x2:1, x3:1, x4:1, x5:1, x6:1
  d x1 = -x2*x3
  d x2 = -x2*x6
  d x3 = x3*x6
  d x4 = -x2*x6 - x4*x6
  d x5 = -x3*x6 + x5*x6
  d x6 = 0
}
"""


def diagnostics(text):
    with pytest.raises(DslError) as info:
        parse_algebra(text)
    return info.value.diagnostics


def test_g6_source_matches_catalog(g6):
    C = load_algebra(G6_SOURCE)
    assert C.algebra == g6.algebra
    assert C.differential == g6.differential
    assert C.name == "g6_15_m1"


def test_degree_mismatch():
    (diag,) = diagnostics("generators: x:1  d x = x")
    assert "degree" in diag.message
    assert (diag.line, diag.column) == (1, 24)
    assert diag.severity == "error"


def test_unknown_generator_column():
    (diag,) = diagnostics("generators: x:1\nd y = x*x")
    assert "unknown generator 'y'" in diag.message
    assert (diag.line, diag.column) == (2, 3)


def test_unknown_generator_inside_expression():
    (diag,) = diagnostics("generators: x:1, y:1\nd x = y*z")
    assert "'z'" in diag.message
    assert (diag.line, diag.column) == (2, 9)


def test_multiple_diagnostics_in_one_run():
    diags = diagnostics("generators: x:1, x:1\nd x = q\nd x = x*x*x")
    assert len(diags) >= 2
    assert any("duplicate" in d.message for d in diags)
    assert any("unknown generator 'q'" in d.message for d in diags)


def test_syntax_error_recovery():
    diags = diagnostics("generators: x:1, y:1\nd x = y*\nd y = )")
    assert [(d.line, d.column) for d in diags] == [(3, 1), (3, 7)]


def test_reserved_name():
    assert "reserved" in diagnostics("generators: d:1")[0].message


def test_nonzero_square_is_a_validation_error():
    doc = parse_algebra("generators: a:1, b:2\nd a = b\nd b = a*b")
    with pytest.raises(ValidationError):
        doc.to_cdga()


def test_brackets_build_chevalley_eilenberg():
    C = load_algebra("algebra heis { generators: x:1, y:1, z:1\n [x, y] = z }")
    x, y, z = C.gen("x"), C.gen("y"), C.gen("z")
    assert C.d(z) == -(x * y)
    assert not C.d(x) and not C.d(y)


def test_brackets_and_differentials_exclusive():
    diags = diagnostics("generators: x:1, y:1, z:1\nd z = x*y\n[x, y] = z")
    assert any("either" in d.message for d in diags)


def test_parse_element_omega_tilde(g6, omega_tilde):
    assert parse_element("2*x1*x6 + x2*x5 - x3*x4", g6) == omega_tilde
    assert parse_element("2*x1*x6+x2*x5-x3*x4", g6) == poly(g6, {"16": 2, "25": 1, "34": -1})


def test_parse_element_square_is_zero(g6):
    assert parse_element("x1*x1", g6) == g6.algebra.zero()


def test_parse_element_unknown(g6):
    with pytest.raises(DslError) as info:
        parse_element("x7", g6)
    d = info.value.diagnostics[0]
    assert (d.line, d.column) == (1, 1)


def test_parse_element_rationals_and_parentheses(g6):
    el = parse_element("1/2*(x1 + x2)*x3 - -3*x4*x5", g6)
    a = g6.algebra
    assert el == (a.gen("x1") + a.gen("x2")) * a.gen("x3") * a.scalar("1/2") + a.gen("x4") * a.gen("x5") * 3


def test_parse_element_powers():
    s2 = catalog("s2_model")
    u = s2.gen("u")
    assert parse_element("u^3 - 2*u*u*u", s2) == u * u * u * -1
    with pytest.raises(DslError) as info:
        parse_element("u^3 - u", s2)
    assert "degree mismatch" in info.value.diagnostics[0].message


@pytest.mark.parametrize("name", CATALOG + ["abelian8"])
def test_round_trip(name):
    C = catalog(name)
    back = load_algebra(to_source(C))
    assert back.algebra == C.algebra
    assert back.differential == C.differential


@pytest.mark.parametrize("name", CATALOG)
def test_element_str_reparses(name):
    C = catalog(name)
    for k in range(4):
        for m in C.algebra.basis(k):
            el = C.d(C.algebra.monomial(m))
            assert parse_element(str(el), C) == el


junk = st.text(alphabet="xyd12:=*+-/()[],{} \n#^a", max_size=40)


@settings(max_examples=300, deadline=None)
@given(junk)
def test_diagnostics_point_into_input(text):
    try:
        parse_algebra("generators: x1:1, x2:1\n" + text)
    except DslError as exc:
        lines = ("generators: x1:1, x2:1\n" + text).split("\n")
        for d in exc.diagnostics:
            assert 1 <= d.line <= len(lines)
            assert 1 <= d.column <= len(lines[d.line - 1]) + 1
    except ValidationError:
        pass
