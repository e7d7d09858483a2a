"""Finite truncations of the profinite space of a framework.

Observing objects through finitely many recognisers gives tuples of values.
The closure of the embedded objects, projected onto those coordinates, is
exactly the set of tuples that some object realizes; compactness adds no new
points at a finite level.  Spaces computed by bounded enumeration are only
subsets of that projection and carry ``exact=False``.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass, field

from .errors import NotFound, PreconditionError, UnknownRecogniser
from .framework import Framework, Language, Point, Report, contains, format_label, point_key

@dataclass(frozen=True)
class ApproximationSpace:
    recogniser_indices: tuple[int, ...]
    points: frozenset
    exact: bool
    budget: int | None = None
    witnesses: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def level(self) -> int:
        return len(self.recogniser_indices)

    def __len__(self) -> int:
        return len(self.points)

    def sorted_points(self) -> list[Point]:
        return sorted(self.points, key=point_key)

    def coordinate(self, recogniser_index: int) -> int:
        try:
            return self.recogniser_indices.index(recogniser_index)
        except ValueError:
            raise UnknownRecogniser(
                f"recogniser {recogniser_index} is not a coordinate of this space "
                f"{list(self.recogniser_indices)}") from None

    def image(self, lang: Language) -> frozenset:
        """Points whose coordinate for ``lang``'s recogniser lies in its accepted set."""
        i = self.coordinate(lang.recogniser_index)
        return frozenset(p for p in self.points if p[i] in lang.accepted)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "recognisers": list(self.recogniser_indices),
            "exact": self.exact,
            "points": [[format_label(v) for v in p] for p in self.sorted_points()],
        }


def space_from_json(data: dict, fw: Framework | None = None) -> ApproximationSpace:
    """Inverse of :meth:`ApproximationSpace.to_json`.

    With a framework, labels are mapped back to recogniser values; without
    one, points keep their string labels.
    """
    indices = tuple(data["recognisers"])
    if data.get("level", len(indices)) != len(indices):
        raise ValueError("level does not match the number of recognisers")
    raw = [tuple(p) for p in data["points"]]
    if fw is not None:
        tables = [{format_label(v): v for v in fw.recogniser(i).value_set} for i in indices]
        try:
            raw = [tuple(t[label] for t, label in zip(tables, p)) for p in raw]
        except KeyError as exc:
            raise ValueError(f"unknown value label {exc.args[0]!r}") from None
    if any(len(p) != len(indices) for p in raw):
        raise ValueError("point length does not match the level")
    return ApproximationSpace(indices, frozenset(raw), bool(data["exact"]))


def _recognisers(fw: Framework, indices: Sequence[int]):
    return [fw.recogniser(i) for i in indices]


def truncate(fw: Framework, indices: Sequence[int], w) -> Point:
    recs = _recognisers(fw, indices)
    fw.validate_object(w)
    return tuple(r(w) for r in recs)


def approximation_space(fw: Framework, indices: Sequence[int],
                        budget: int | None = None) -> ApproximationSpace:
    """Projection onto ``indices``; exact when the framework can compute it."""
    indices = tuple(indices)
    recs = _recognisers(fw, indices)
    if not indices:
        first = next(iter(fw.objects()))
        return ApproximationSpace((), frozenset({()}), True, witnesses={(): first})
    exact = fw.exact_projection(indices)
    if exact is not None:
        return ApproximationSpace(indices, frozenset(exact), True, witnesses=dict(exact))
    if budget is None:
        raise PreconditionError("this framework needs an enumeration budget")
    witnesses: dict = {}
    for w in fw.objects_within(budget):
        witnesses.setdefault(tuple(r(w) for r in recs), w)
    return ApproximationSpace(indices, frozenset(witnesses), False, budget, witnesses)


def realize(fw: Framework, space: ApproximationSpace, p: Point):
    """An object whose truncation is ``p``: the stored first or shortest witness."""
    p = tuple(p)
    if p in space.witnesses:
        return space.witnesses[p]
    if p not in space.points:
        raise PreconditionError(f"{p} is not a point of the space")
    recs = _recognisers(fw, space.recogniser_indices)
    budget = fw.default_budget if space.budget is None else space.budget
    for w in fw.objects_within(budget):
        if tuple(r(w) for r in recs) == p:
            return w
    raise NotFound(f"no object within the budget realizes {p}")


def check_isolated(fw: Framework, w, indices: Sequence[int],
                   budget: int | None = None) -> Report:
    """Whether ``w`` is the only object with its truncated point.

    Requires ``w``'s characteristic recogniser among ``indices``.  Exact when
    the framework can count realizers; otherwise checked over the objects
    within ``budget``.
    """
    indices = tuple(indices)
    char = fw.registered_characteristic(w)
    if char is None or char not in indices:
        raise PreconditionError(f"no characteristic recogniser of {w!r} among {list(indices)}")
    p = truncate(fw, indices, w)
    count = fw.count_realizers(indices, p, cap=2)
    if count is not None:
        return Report(count == 1, exact=True, witnesses={"point": p, "realizers": count})
    if budget is None:
        raise PreconditionError("this framework needs an enumeration budget")
    recs = _recognisers(fw, indices)
    hits = [o for o in fw.objects_within(budget) if tuple(r(o) for r in recs) == p]
    return Report(hits == [fw.canonical(w)], bound=budget,
                  witnesses={"point": p, "realizers": len(hits)},
                  counterexample=None if len(hits) == 1 else hits[:2])


def check_duality(fw: Framework, lang: Language, space: ApproximationSpace,
                  budget: int | None = None) -> Report:
    """The image of a language in the space is a union of cylinders and
    membership through the embedding agrees with membership of objects.

    Checks every point's witness object, plus every object within ``budget``.
    """
    if budget is None:
        budget = fw.default_budget
    i = space.coordinate(lang.recogniser_index)
    image = space.image(lang)
    by_value: dict = {}
    for p in space.sorted_points():
        inside = p in image
        if by_value.setdefault(p[i], inside) != inside:
            return Report(False, space.exact, counterexample=p,
                          note="membership depends on more than one coordinate")
    for p in space.sorted_points():
        w = realize(fw, space, p)
        if contains(fw, lang, w) != (p in image):
            return Report(False, space.exact, counterexample=(p, w),
                          note="realizing object disagrees with the image")
    recs = _recognisers(fw, space.recogniser_indices)
    for w in fw.objects_within(budget):
        p = tuple(r(w) for r in recs)
        if space.exact and p not in space.points:
            return Report(False, True, counterexample=(p, w), note="object outside the space")
        if contains(fw, lang, w) != (p in image):
            return Report(False, space.exact, counterexample=(p, w),
                          note="object disagrees with the image of its point")
    return Report(True, space.exact, bound=budget, witnesses={"image": image})


def permutation_invariance(fw: Framework, indices: Sequence[int], perm: Sequence[int],
                           budget: int | None = None) -> Report:
    """Reordering recognisers permutes the coordinates of every point and nothing else.

    ``perm[k]`` is the position in ``indices`` that becomes coordinate ``k``.
    """
    indices = tuple(indices)
    if sorted(perm) != list(range(len(indices))):
        raise PreconditionError(f"{list(perm)} is not a permutation of {len(indices)} positions")
    base = approximation_space(fw, indices, budget)
    moved = approximation_space(fw, [indices[j] for j in perm], budget)
    expected = frozenset(tuple(p[j] for j in perm) for p in base.points)
    passed = expected == moved.points
    return Report(passed, base.exact and moved.exact, bound=budget,
                  counterexample=None if passed else expected ^ moved.points)
