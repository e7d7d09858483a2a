import itertools
import random

import pytest

from profinite.errors import ArityError, FreeVariableError, ObjectDomainError
from profinite.fo import (
    BOTTOM, GRAPH, TOP, FOFramework, FiniteStructure, Signature, canonical,
    characteristic_sentence, conjunction_recogniser, evaluate_sentence,
    linear_order_without_maximum, parse, random_sentence, realized_truth_tuples,
    structure_enumerator, structures_up_to,
)
from profinite.fo.structures import is_canonical, structures_of_size
from profinite.fo.syntax import depth, Not

LOOP = FiniteStructure.make(1, {"E": [(0, 0)]})
POINT = FiniteStructure.make(1)
EMPTY = FiniteStructure.make(0)
HAS_LOOP = parse("exists x. E(x,x)")


def all_labelled(sig, size):
    """Every structure on {0..size-1}, without identifying isomorphic copies."""
    slots = [(name, t) for name, a in sig.relations
             for t in itertools.product(range(size), repeat=a)]
    for bits in itertools.product((0, 1), repeat=len(slots)):
        rels = {}
        for (name, t), b in zip(slots, bits):
            if b:
                rels.setdefault(name, []).append(t)
        yield FiniteStructure.make(size, rels)


def isomorphic(m1, m2):
    if m1.size != m2.size:
        return False
    return any(m1.permuted(p) == m2 for p in itertools.permutations(range(m1.size)))


def count_classes(structures):
    reps = []
    for m in structures:
        if not any(isomorphic(m, r) for r in reps):
            reps.append(m)
    return len(reps)


def test_evaluate_examples():
    assert evaluate_sentence(HAS_LOOP, LOOP) is TOP
    assert evaluate_sentence(HAS_LOOP, EMPTY) is BOTTOM
    assert evaluate_sentence(parse("forall x. E(x,x)"), EMPTY) is TOP


def test_evaluate_errors():
    with pytest.raises(FreeVariableError):
        evaluate_sentence(parse("E(x,x)"), LOOP)
    with pytest.raises(FreeVariableError):
        evaluate_sentence(parse("exists x. E(x,y)"), LOOP, GRAPH)
    with pytest.raises(ArityError):
        evaluate_sentence(parse("exists x. E(x)"), LOOP)
    with pytest.raises(ArityError):
        evaluate_sentence(parse("exists x. F(x)"), LOOP, GRAPH)


def test_no_finite_linear_order_without_maximum():
    s = linear_order_without_maximum()
    assert not any(evaluate_sentence(s, m) for m in structures_up_to(GRAPH, 4))
    assert realized_truth_tuples([s], 4, GRAPH) == {(BOTTOM,)}


def test_bare_sentence_only_holds_vacuously():
    bare = linear_order_without_maximum(nonempty=False)
    assert [m for m in structures_up_to(GRAPH, 4) if evaluate_sentence(bare, m)] == [EMPTY]


def test_linear_orders_exist_without_the_no_max_clause():
    from profinite.fo import strict_linear_order
    counts = [sum(evaluate_sentence(strict_linear_order(), m) for m in structures_of_size(GRAPH, n))
              for n in range(5)]
    assert counts == [1, 1, 1, 1, 1]


def test_conjunction_examples():
    s1, s2 = HAS_LOOP, parse("forall x. exists y. E(x,y)")
    assert conjunction_recogniser(s1, {TOP}, s2, {TOP}) == (s1 & s2, {TOP})
    assert conjunction_recogniser(s1, {BOTTOM}, s2, {TOP}) == (Not(s1) & s2, {TOP})


def test_conjunction_random_pairs_exhaustively():
    rng = random.Random(7)
    structures = list(structures_up_to(GRAPH, 3))
    subsets = [frozenset(), frozenset({TOP}), frozenset({BOTTOM}), frozenset({TOP, BOTTOM})]
    for _ in range(20):
        s1, s2 = random_sentence(GRAPH, 3, rng), random_sentence(GRAPH, 3, rng)
        assert depth(s1) <= 3 and depth(s2) <= 3
        v1, v2 = rng.choice(subsets), rng.choice(subsets)
        s, v = conjunction_recogniser(s1, v1, s2, v2)
        for m in structures:
            lhs = evaluate_sentence(s1, m) in v1 and evaluate_sentence(s2, m) in v2
            assert lhs == (evaluate_sentence(s, m) in v)


def test_characteristic_examples():
    c0 = characteristic_sentence(EMPTY, GRAPH)
    assert [m.size for m in structures_up_to(GRAPH, 2) if evaluate_sentence(c0, m)] == [0]
    c1 = characteristic_sentence(LOOP, GRAPH)
    assert str(c1) == "exists x0. E(x0,x0) & (forall y. y=x0)"
    assert evaluate_sentence(c1, LOOP) and not evaluate_sentence(c1, POINT)


def test_characteristic_separates_small_graphs():
    small = list(structures_up_to(GRAPH, 2))
    assert len(small) == 1 + 2 + 10
    for m in small:
        c = characteristic_sentence(m, GRAPH)
        assert [o for o in small if evaluate_sentence(c, o)] == [m]


def test_characteristic_fails_on_larger_neighbours():
    for m in structures_up_to(GRAPH, 2):
        c = characteristic_sentence(m, GRAPH)
        assert evaluate_sentence(c, m)
        assert not any(evaluate_sentence(c, o) for o in structures_up_to(GRAPH, m.size + 1) if o != m)


def test_characteristic_holds_on_permuted_copies():
    rng = random.Random(3)
    sizes3 = list(structures_of_size(GRAPH, 3))
    for m in rng.sample(sizes3, 10):
        c = characteristic_sentence(m, GRAPH)
        for p in itertools.permutations(range(3)):
            assert evaluate_sentence(c, m.permuted(p))


def test_enumerator_start():
    it = structure_enumerator(GRAPH)
    assert next(it) == EMPTY
    assert [m for m in structures_of_size(GRAPH, 1)] == [POINT, LOOP]


@pytest.mark.parametrize("size", [0, 1, 2, 3])
def test_class_counts_match_brute_force(size):
    expected = count_classes(all_labelled(GRAPH, size))
    assert len(list(structures_of_size(GRAPH, size))) == expected


def test_known_class_counts():
    # unlabelled binary relations, OEIS A000595
    assert [len(list(structures_of_size(GRAPH, n))) for n in range(5)] == [1, 2, 10, 104, 3044]


def test_two_relation_signature():
    sig = Signature((("P", 1), ("E", 2)))
    assert len(list(structures_of_size(sig, 2))) == count_classes(all_labelled(sig, 2))
    assert all(is_canonical(m, sig) for m in structures_up_to(sig, 2))


def test_canonical_idempotent_and_iso_invariant():
    rng = random.Random(11)
    for _ in range(30):
        size = rng.randint(0, 3)
        m = FiniteStructure.make(size, {"E": [t for t in itertools.product(range(size), repeat=2)
                                              if rng.random() < 0.4]})
        c = canonical(m, GRAPH)
        assert canonical(c, GRAPH) == c
        perm = list(range(size))
        rng.shuffle(perm)
        assert canonical(m.permuted(perm), GRAPH) == c


def test_evaluation_respects_isomorphism():
    rng = random.Random(5)
    sentences = [random_sentence(GRAPH, 3, rng) for _ in range(20)]
    for _ in range(30):
        size = rng.randint(0, 3)
        m = FiniteStructure.make(size, {"E": [t for t in itertools.product(range(size), repeat=2)
                                              if rng.random() < 0.5]})
        perm = list(range(size))
        rng.shuffle(perm)
        moved = m.permuted(perm)
        for s in sentences:
            assert evaluate_sentence(s, m) == evaluate_sentence(s, moved)


def test_realized_truth_tuples_examples():
    assert realized_truth_tuples([HAS_LOOP], 1, GRAPH) == {(BOTTOM,), (TOP,)}
    tuples = realized_truth_tuples([HAS_LOOP, Not(HAS_LOOP)], 2, GRAPH)
    assert all(a != b for a, b in tuples)


def test_structure_json_round_trip():
    m = FiniteStructure.make(2, {"E": [(0, 1), (1, 0)]})
    assert m.to_json() == {"size": 2, "relations": {"E": [[0, 1], [1, 0]]}}
    assert FiniteStructure.from_json(m.to_json()) == m
    assert GRAPH.to_json() == {"relations": [{"name": "E", "arity": 2}]}
    assert Signature.from_json(GRAPH.to_json()) == GRAPH


def test_structure_rejects_out_of_range_tuples():
    with pytest.raises(ValueError):
        FiniteStructure.make(1, {"E": [(0, 1)]})


def test_framework_domain_checks():
    fw = FOFramework(GRAPH, [HAS_LOOP])
    with pytest.raises(ObjectDomainError):
        fw.validate_object("ab")
    with pytest.raises(ObjectDomainError):
        fw.validate_object(FiniteStructure.make(1, {"F": [(0,)]}))
    assert fw.object_at(0) == EMPTY and fw.object_at(2) == LOOP
    assert len(fw.objects_within(2)) == 13
