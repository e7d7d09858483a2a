import pytest
from hypothesis import given, strategies as st

from profinite.errors import ParseError
from profinite.fo.syntax import (
    And, Eq, Exists, Forall, Implies, Not, Or, Rel, conj, desugar, disj, free_vars, parse, to_text,
)

VARS = st.sampled_from(["x", "y", "z"])
atoms = st.one_of(
    st.builds(lambda a, b: Rel("E", (a, b)), VARS, VARS),
    st.builds(lambda a: Rel("P", (a,)), VARS),
    st.builds(Eq, VARS, VARS),
)
formulas = st.recursive(
    atoms,
    lambda sub: st.one_of(
        st.builds(Not, sub),
        st.builds(lambda a, b: conj(a, b), sub, sub),
        st.builds(lambda a, b: disj(a, b), sub, sub),
        st.builds(Implies, sub, sub),
        st.builds(Exists, VARS, sub),
        st.builds(Forall, VARS, sub),
    ),
    max_leaves=12,
)


@given(formulas)
def test_print_parse_round_trip(f):
    assert parse(to_text(f)) == desugar(f)


@given(formulas)
def test_printing_is_stable(f):
    text = to_text(f)
    assert to_text(parse(text)) == text


def test_parse_examples():
    assert parse("exists x. E(x,x)") == Exists("x", Rel("E", ("x", "x")))
    assert parse("forall x. P(x) & !x=x | E(x,x)") == Forall("x", Or((
        And((Rel("P", ("x",)), Not(Eq("x", "x")))), Rel("E", ("x", "x")))))
    assert parse("(exists x. P(x)) & P(y)") == And((Exists("x", Rel("P", ("x",))), Rel("P", ("y",))))


def test_quantifier_scope_extends_right():
    f = parse("exists x. P(x) & Q(x)")
    assert isinstance(f, Exists) and isinstance(f.body, And)


def test_implication_prints_as_disjunction():
    text = to_text(Implies(Rel("P", ("x",)), Rel("Q", ("x",))))
    assert text == "!P(x) | Q(x)"


def test_free_vars():
    assert free_vars(parse("exists x. E(x,y)")) == {"y"}
    assert free_vars(parse("forall y. exists x. E(x,y)")) == set()


@pytest.mark.parametrize("text", [
    "", "exists . P(x)", "P(x", "P(x) &", "x", "x == y", "forall forall. P(x)", "P(x) $ Q(x)",
    "P()", "exists x P(x)",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse(text)
