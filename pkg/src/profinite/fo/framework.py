"""Finite structures over a signature as objects, sentences as recognisers."""

from __future__ import annotations

from collections.abc import Sequence

from ..errors import ObjectDomainError
from ..framework import Framework
from .semantics import (
    TRUTH_VALUES, characteristic_sentence, check_sentence, conjunction_recogniser,
    evaluate_sentence,
)
from .structures import (
    FiniteStructure, Signature, canonical, check_structure, structure_enumerator,
    structures_up_to,
)
from .syntax import Formula, parse


class FOFramework(Framework):
    """Objects are isomorphism classes of finite structures, one canonical form each.

    ``objects_within(budget)`` means every canonical structure of size at most
    ``budget``; ``first_objects(n)`` follows the enumeration order.
    """

    default_budget = 3

    def __init__(self, signature: Signature, sentences: Sequence[Formula] = (),
                 names: Sequence[str] = ()):
        super().__init__()
        self.signature = signature
        self._enumerated: list[FiniteStructure] = []
        self._stream = structure_enumerator(signature)
        names = list(names) + [None] * (len(sentences) - len(names))
        for s, name in zip(sentences, names):
            self.register(s, name)

    def _evaluator(self, source: Formula):
        check_sentence(source, self.signature)
        return (lambda m: evaluate_sentence(source, m)), TRUTH_VALUES

    def intersect_sources(self, r1, v1, r2, v2):
        return conjunction_recogniser(r1.source, v1, r2.source, v2)

    def object_at(self, n):
        if n < 0:
            raise IndexError(n)
        while len(self._enumerated) <= n:
            self._enumerated.append(next(self._stream))
        return self._enumerated[n]

    def objects_within(self, budget):
        return list(structures_up_to(self.signature, budget))

    def validate_object(self, obj):
        if not isinstance(obj, FiniteStructure):
            raise ObjectDomainError(f"{obj!r} is not a finite structure")
        check_structure(obj, self.signature)

    def canonical(self, obj):
        self.validate_object(obj)
        return canonical(obj, self.signature)

    def characteristic_source(self, obj):
        return characteristic_sentence(obj, self.signature)


def fo_framework_from_json(data) -> FOFramework:
    """``{"signature": {...}, "sentences": ["exists x. E(x,x)", ...]}``."""
    if not isinstance(data, dict) or "signature" not in data:
        raise ValueError("FO framework file needs a 'signature'")
    sig = Signature.from_json(data["signature"])
    sentences = [parse(text) for text in data.get("sentences", [])]
    return FOFramework(sig, sentences, data.get("names", ()))
