"""Frameworks: a countable family of objects observed through recognisers.

A recogniser maps every object to a value in a finite set.  A language is the
preimage of a value subset under one recogniser.  Concrete frameworks
(words with automata, finite structures with first-order sentences, finite
tables) subclass :class:`Framework` and supply object enumeration, domain
checks and the intersection construction.
"""

from __future__ import annotations

import itertools
import random
from abc import ABC, abstractmethod
from collections.abc import Callable, Hashable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import InvalidLanguage, ObjectDomainError, UnknownRecogniser

Value = Hashable
Point = tuple


def format_label(value: Value) -> str:
    """Render a recogniser value as the string label used in JSON."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, tuple):
        return "(" + ",".join(format_label(v) for v in value) + ")"
    return str(value)


def label_key(value: Value) -> tuple:
    """Total sort key over mixed value labels (numbers, strings, tuples)."""
    if isinstance(value, bool):
        return (0, int(value))
    if isinstance(value, (int, float)):
        return (1, value)
    if isinstance(value, tuple):
        return (3, tuple(label_key(v) for v in value))
    return (2, str(value))


def point_key(point: Point) -> tuple:
    return tuple(label_key(v) for v in point)


@dataclass(frozen=True)
class Recogniser:
    index: int
    value_set: tuple
    evaluate: Callable[[Any], Value] = field(compare=False, repr=False)
    source: Any = field(default=None, compare=False, repr=False)
    name: str | None = None

    def __post_init__(self):
        if not self.value_set:
            raise ValueError(f"recogniser {self.index} has an empty value set")

    def __call__(self, obj) -> Value:
        value = self.evaluate(obj)
        if value not in self.value_set:
            raise ValueError(
                f"recogniser {self.index} returned {value!r} outside its value set"
            )
        return value


@dataclass(frozen=True)
class Language:
    """The set of objects on which recogniser ``recogniser_index`` lands in ``accepted``."""

    recogniser_index: int
    accepted: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "accepted", frozenset(self.accepted))

    def to_json(self) -> dict:
        return {
            "recogniser": self.recogniser_index,
            "accepted": sorted((format_label(v) for v in self.accepted)),
        }


@dataclass
class Report:
    """Outcome of a bounded check.

    ``passed`` only ever means "passed up to ``bound``" unless ``exact`` is set.
    """

    passed: bool
    exact: bool = False
    bound: int | None = None
    witnesses: dict = field(default_factory=dict)
    counterexample: Any = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.passed


class Framework(ABC):
    """Objects plus a growable registry of recognisers φ_0, φ_1, ...

    Subclasses implement :meth:`object_at`, :meth:`validate_object`,
    :meth:`_evaluator` and :meth:`intersect_sources`.  The optional hooks
    :meth:`characteristic_source`, :meth:`exact_projection` and
    :meth:`count_realizers` return ``None`` when the framework has no
    exact procedure.
    """

    def __init__(self) -> None:
        self.recognisers: list[Recogniser] = []
        self._characteristic: dict[Hashable, int] = {}

    # -- registry -------------------------------------------------------
    def register(self, source, name: str | None = None) -> Recogniser:
        evaluate, value_set = self._evaluator(source)
        rec = Recogniser(len(self.recognisers), tuple(value_set), evaluate, source, name)
        self.recognisers.append(rec)
        return rec

    def recogniser(self, index: int) -> Recogniser:
        if not isinstance(index, int) or not 0 <= index < len(self.recognisers):
            raise UnknownRecogniser(f"no recogniser with index {index!r}")
        return self.recognisers[index]

    @abstractmethod
    def _evaluator(self, source) -> tuple[Callable[[Any], Value], Sequence[Value]]:
        """Return (evaluation function, value set) for a recogniser source."""

    @abstractmethod
    def intersect_sources(self, r1: Recogniser, v1: frozenset, r2: Recogniser, v2: frozenset):
        """Return ``(source, accepted)`` recognising ``r1⁻¹(v1) ∩ r2⁻¹(v2)``."""

    # -- objects --------------------------------------------------------
    @abstractmethod
    def object_at(self, n: int):
        """The n-th object of a fixed injective enumeration; IndexError past the end."""

    @abstractmethod
    def validate_object(self, obj) -> None:
        """Raise ObjectDomainError when ``obj`` is not an object of this framework."""

    def canonical(self, obj):
        return obj

    def objects(self) -> Iterator:
        for n in itertools.count():
            try:
                yield self.object_at(n)
            except IndexError:
                return

    def first_objects(self, count: int) -> list:
        return list(itertools.islice(self.objects(), count))

    #: budget used by checks when the caller gives none
    default_budget = 64

    def objects_within(self, budget: int) -> list:
        """Objects inside an enumeration budget; by default the first ``budget``."""
        return self.first_objects(budget)

    # -- optional hooks -------------------------------------------------
    def characteristic_source(self, obj):
        return None

    def characteristic(self, obj) -> Recogniser | None:
        """Registered recogniser separating ``obj`` from every other object, if any."""
        key = self.canonical(obj)
        if key in self._characteristic:
            return self.recognisers[self._characteristic[key]]
        source = self.characteristic_source(key)
        if source is None:
            return None
        rec = self.register(source, name=f"char[{key!r}]")
        self._characteristic[key] = rec.index
        return rec

    def registered_characteristic(self, obj) -> int | None:
        """Index of the characteristic recogniser of ``obj`` if one was registered."""
        return self._characteristic.get(self.canonical(obj))

    def exact_projection(self, indices: Sequence[int]) -> dict | None:
        """Map every realized truncated point to a witness object, or None."""
        return None

    def count_realizers(self, indices: Sequence[int], point: Point, cap: int = 2) -> int | None:
        """Exact number of objects realizing ``point``, saturated at ``cap``; None if unknown."""
        return None


def _check_language(fw: Framework, lang: Language) -> Recogniser:
    rec = fw.recogniser(lang.recogniser_index)
    extra = lang.accepted - set(rec.value_set)
    if extra:
        raise InvalidLanguage(
            f"values {sorted(map(format_label, extra))} not in the value set of recogniser {rec.index}"
        )
    return rec


def contains(fw: Framework, lang: Language, w) -> bool:
    rec = _check_language(fw, lang)
    fw.validate_object(w)
    return rec(w) in lang.accepted


def empty_language(fw: Framework, index: int) -> Language:
    fw.recogniser(index)
    return Language(index, ())


def full_language(fw: Framework, index: int) -> Language:
    return Language(index, fw.recogniser(index).value_set)


def complement_language(fw: Framework, lang: Language) -> Language:
    rec = _check_language(fw, lang)
    return Language(rec.index, (v for v in rec.value_set if v not in lang.accepted))


def intersect_languages(fw: Framework, l1: Language, l2: Language) -> Language:
    """Build the intersection through a new recogniser appended to ``fw``."""
    r1 = _check_language(fw, l1)
    r2 = _check_language(fw, l2)
    source, accepted = fw.intersect_sources(r1, l1.accepted, r2, l2.accepted)
    rec = fw.register(source, name=f"({r1.index}&{r2.index})")
    return Language(rec.index, accepted)


def union_languages(fw: Framework, l1: Language, l2: Language) -> Language:
    meet = intersect_languages(fw, complement_language(fw, l1), complement_language(fw, l2))
    return complement_language(fw, meet)


def equal_up_to(fw: Framework, l1: Language, l2: Language, budget: int) -> bool:
    """Extensional equality of two languages on the objects within ``budget``."""
    return all(contains(fw, l1, w) == contains(fw, l2, w) for w in fw.objects_within(budget))


def check_axiom_a(fw: Framework, bound: int) -> Report:
    """Look for a separating recogniser for each of the first ``bound`` objects.

    Existing recognisers are tried first; otherwise the framework's
    characteristic-recogniser hook is used.  Success is relative to the
    bounded object set.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    objs = fw.first_objects(bound)
    witnesses: dict = {}
    for i, w in enumerate(objs):
        others = objs[:i] + objs[i + 1:]
        found = None
        for rec in list(fw.recognisers):
            value = rec(w)
            if all(rec(o) != value for o in others):
                found = rec
                break
        if found is None:
            hook = fw.characteristic(w)
            if hook is not None:
                value = hook(w)
                if all(hook(o) != value for o in others):
                    found = hook
        if found is None:
            clash = next(
                (o for o in others if all(r(o) == r(w) for r in fw.recognisers)),
                others[0] if others else None,
            )
            return Report(False, bound=bound, witnesses=witnesses, counterexample=(w, clash),
                          note="no recogniser separates this pair")
        witnesses[w] = found.index
    return Report(True, bound=bound, witnesses=witnesses)


def random_language(fw: Framework, rng: random.Random, indices: Sequence[int] | None = None) -> Language:
    pool = list(range(len(fw.recognisers))) if indices is None else list(indices)
    rec = fw.recogniser(rng.choice(pool))
    return Language(rec.index, (v for v in rec.value_set if rng.random() < 0.5))


def check_axiom_b(fw: Framework, trials: int, bound: int, seed: int = 0) -> Report:
    """Random intersections, each checked object by object within ``bound``."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    rng = random.Random(seed)
    # Draw operands from the registry as it stood before the trials, so
    # product recognisers do not compound.
    pool = list(range(len(fw.recognisers)))
    objs = fw.objects_within(bound)
    for t in range(trials):
        l1 = random_language(fw, rng, pool)
        l2 = random_language(fw, rng, pool)
        meet = intersect_languages(fw, l1, l2)
        for w in objs:
            lhs = contains(fw, l1, w) and contains(fw, l2, w)
            if lhs != contains(fw, meet, w):
                return Report(False, bound=bound, counterexample=(l1, l2, w),
                              note=f"trial {t}")
    return Report(True, bound=bound, note=f"{trials} trials over {len(objs)} objects")


class TableFramework(Framework):
    """A finite framework given by explicit value tables.

    ``objects`` lists the objects; each recogniser is a mapping from object to
    value.  The projection onto any coordinates is exact because every object
    can be inspected.
    """

    def __init__(self, objects: Sequence[Hashable], tables: Iterable[Mapping] = ()):
        super().__init__()
        if len(set(objects)) != len(objects):
            raise ValueError("objects must be distinct")
        self._objects = list(objects)
        self._position = {o: i for i, o in enumerate(self._objects)}
        for table in tables:
            self.register(dict(table))

    def _evaluator(self, source):
        missing = [o for o in self._objects if o not in source]
        if missing:
            raise ValueError(f"table is not total: missing {missing[:3]}")
        values = sorted({source[o] for o in self._objects}, key=label_key)
        return source.__getitem__, values

    def intersect_sources(self, r1, v1, r2, v2):
        table = {o: (r1(o), r2(o)) for o in self._objects}
        image = set(table.values())
        return table, frozenset(p for p in itertools.product(v1, v2) if p in image)

    def object_at(self, n):
        if n < 0:
            raise IndexError(n)
        return self._objects[n]

    def validate_object(self, obj):
        if obj not in self._position:
            raise ObjectDomainError(f"{obj!r} is not an object of this framework")

    def objects_within(self, budget):
        return self._objects[:budget]

    def exact_projection(self, indices):
        recs = [self.recogniser(i) for i in indices]
        found: dict = {}
        for o in self._objects:
            found.setdefault(tuple(r(o) for r in recs), o)
        return found

    def count_realizers(self, indices, point, cap=2):
        recs = [self.recogniser(i) for i in indices]
        n = sum(1 for o in self._objects if tuple(r(o) for r in recs) == tuple(point))
        return min(n, cap)
