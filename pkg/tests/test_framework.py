import pytest
from hypothesis import given, settings, strategies as st

from profinite.errors import InvalidLanguage, ObjectDomainError, UnknownRecogniser
from profinite.framework import (
    Language, TableFramework, check_axiom_a, check_axiom_b, complement_language, contains,
    empty_language, equal_up_to, format_label, full_language, intersect_languages,
    union_languages,
)
from profinite.words import singleton_dfa, words_up_to

AB = ("a", "b")
SHORT = list(words_up_to(AB, 6))


def test_contains_examples(words, even, has_a):
    assert contains(words, even, "ab")
    assert not contains(words, even, "a")
    assert not contains(words, has_a, "bbb")


def test_contains_errors(words, even):
    with pytest.raises(UnknownRecogniser):
        contains(words, Language(7, {"even"}), "a")
    with pytest.raises(ObjectDomainError):
        contains(words, even, "abc")
    with pytest.raises(InvalidLanguage):
        contains(words, Language(0, {"yes"}), "a")


def test_intersection_examples(words, even, has_a):
    before = len(words.recognisers)
    both = intersect_languages(words, even, has_a)
    assert len(words.recognisers) == before + 1
    assert both.recogniser_index == before
    assert contains(words, both, "ab")
    assert not contains(words, both, "a")
    assert not contains(words, both, "bb")


def test_intersection_with_full_language_is_identity(words, even):
    same = intersect_languages(words, even, full_language(words, 0))
    assert equal_up_to(words, same, even, 100)


def test_even_and_odd_is_empty(words, even):
    odd = complement_language(words, even)
    nothing = intersect_languages(words, even, odd)
    assert len(SHORT) == 127
    # 126 nonempty words plus ε
    assert not any(contains(words, nothing, w) for w in SHORT)


def test_complement_examples(words, even):
    assert complement_language(words, even) == Language(0, {"odd"})
    assert complement_language(words, complement_language(words, even)) == even
    full = complement_language(words, empty_language(words, 0))
    assert full.accepted == {"even", "odd"}
    assert all(contains(words, full, w) for w in words_up_to(AB, 2))


def test_union_examples(words, even, has_a):
    assert all(contains(words, union_languages(words, even, complement_language(words, even)), w)
               for w in SHORT)
    assert equal_up_to(words, union_languages(words, empty_language(words, 1), even), even, 100)
    either = union_languages(words, even, has_a)
    assert not contains(words, either, "b")
    assert contains(words, either, "bb")


@settings(max_examples=40, deadline=None)
@given(st.sets(st.sampled_from(["even", "odd"])), st.sets(st.sampled_from(["no", "yes"])))
def test_boolean_operations_match_set_semantics(v0, v1):
    from profinite.words import WordFramework, contains_symbol_dfa, even_length_dfa
    fw = WordFramework(AB, [even_length_dfa(AB), contains_symbol_dfa(AB, "a")])
    l0, l1 = Language(0, v0), Language(1, v1)
    meet, meet_swapped = intersect_languages(fw, l0, l1), intersect_languages(fw, l1, l0)
    join = union_languages(fw, l0, l1)
    neg = complement_language(fw, l0)
    for w in words_up_to(AB, 4):
        a, b = contains(fw, l0, w), contains(fw, l1, w)
        assert contains(fw, meet, w) == contains(fw, meet_swapped, w) == (a and b)
        assert contains(fw, join, w) == (a or b)
        assert contains(fw, neg, w) == (not a)
    assert neg.accepted <= set(fw.recogniser(0).value_set)


def test_intersection_is_associative_extensionally(words, even, has_a):
    odd_len = Language(0, {"odd"})
    left = intersect_languages(words, intersect_languages(words, even, has_a), odd_len)
    right = intersect_languages(words, even, intersect_languages(words, has_a, odd_len))
    assert left.recogniser_index != right.recogniser_index
    assert equal_up_to(words, left, right, 100)


def test_language_json():
    lang = Language(1, {("even", "yes"), ("odd", "no")})
    assert lang.to_json() == {"recogniser": 1, "accepted": ["(even,yes)", "(odd,no)"]}
    assert format_label(True) == "true"


def test_axiom_a_words_uses_singletons(words):
    report = check_axiom_a(words, 10)
    assert report.passed and not report.exact and report.bound == 10
    for w, index in report.witnesses.items():
        assert words.recogniser(index).source == singleton_dfa(w, AB)


def test_axiom_a_fails_for_constant_recogniser():
    fw = TableFramework(["x", "y", "z"], [{"x": 0, "y": 0, "z": 0}])
    report = check_axiom_a(fw, 3)
    assert not report.passed
    assert report.counterexample == ("x", "y")


def test_axiom_a_table_framework_with_separator():
    fw = TableFramework(["x", "y"], [{"x": 0, "y": 1}])
    assert check_axiom_a(fw, 2).witnesses == {"x": 0, "y": 0}


def test_axiom_b_words(words):
    assert check_axiom_b(words, 50, 200).passed


def test_axiom_b_idempotence(words, even):
    same = intersect_languages(words, even, even)
    assert equal_up_to(words, same, even, 200)


def test_axiom_b_tables():
    fw = TableFramework(range(6), [{k: k % 2 for k in range(6)}, {k: k % 3 for k in range(6)}])
    assert check_axiom_b(fw, 30, 6, seed=3).passed


def test_value_set_invariant():
    with pytest.raises(ValueError):
        TableFramework(["x"], [{}])
