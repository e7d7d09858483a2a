"""Equations between points of a finite space, and the lattices they define.

A set ``A`` of points satisfies ``u -> v`` when ``u ∈ A`` implies ``v ∈ A``.
For a family ``M`` of subsets closed under finite unions and intersections
(and containing ∅ and the whole space), the subsets satisfying every equation
that all members of ``M`` satisfy are exactly the members of ``M``.  Symmetric
equations play the same role for Boolean subalgebras.

Languages enter this module only through their images in a fixed space;
two languages with the same image are the same member of a family.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import PreconditionError, SpaceTooLarge
from .framework import Language, Point, TableFramework, format_label, point_key
from .space import ApproximationSpace, approximation_space

EXHAUSTIVE_LIMIT = 20

Subset = frozenset


@dataclass(frozen=True)
class Equation:
    u: Point
    v: Point

    def __repr__(self):
        return f"{self.u} -> {self.v}"

    def sort_key(self):
        return point_key(self.u), point_key(self.v)

    def to_json(self) -> dict:
        return {"u": [format_label(x) for x in self.u], "v": [format_label(x) for x in self.v]}


@dataclass(frozen=True)
class EquationSet:
    space: ApproximationSpace
    pairs: frozenset

    def __post_init__(self):
        stray = [e for e in self.pairs if e.u not in self.space.points or e.v not in self.space.points]
        if stray:
            raise PreconditionError(f"equations outside the space: {stray[:3]}")

    def __iter__(self):
        return iter(self.sorted())

    def __len__(self):
        return len(self.pairs)

    def __contains__(self, e):
        return e in self.pairs

    def sorted(self) -> list[Equation]:
        return sorted(self.pairs, key=Equation.sort_key)

    def symmetric_part(self) -> EquationSet:
        return EquationSet(self.space, frozenset(
            e for e in self.pairs if Equation(e.v, e.u) in self.pairs))

    def is_symmetric(self) -> bool:
        return all(Equation(e.v, e.u) in self.pairs for e in self.pairs)

    def to_json(self) -> dict:
        return {"recognisers": list(self.space.recogniser_indices), "exact": self.space.exact,
                "equations": [e.to_json() for e in self.sorted()]}


@dataclass(frozen=True)
class LanguageFamily:
    """A finite family of subsets of a space's points (language images)."""

    space: ApproximationSpace
    members: frozenset

    @classmethod
    def from_languages(cls, space: ApproximationSpace, languages: Iterable[Language]) -> LanguageFamily:
        return cls(space, frozenset(space.image(lang) for lang in languages))

    @classmethod
    def from_subsets(cls, space: ApproximationSpace, subsets: Iterable[Iterable[Point]]) -> LanguageFamily:
        members = frozenset(frozenset(s) for s in subsets)
        for m in members:
            if not m <= space.points:
                raise PreconditionError(f"subset {sorted(m - space.points)} leaves the space")
        return cls(space, members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, subset):
        return frozenset(subset) in self.members

    def sorted(self) -> list[list[Point]]:
        return sorted((sorted(m, key=point_key) for m in self.members),
                      key=lambda m: (len(m), [point_key(p) for p in m]))


def satisfies_equation(space: ApproximationSpace, lang: Language, e: Equation) -> bool:
    i = space.coordinate(lang.recogniser_index)
    return e.u[i] not in lang.accepted or e.v[i] in lang.accepted


def subset_satisfies(a: Subset, e: Equation) -> bool:
    return e.u not in a or e.v in a


def _close(members: set, space: ApproximationSpace, complement: bool) -> frozenset:
    full = frozenset(space.points)
    members = set(members) | {frozenset(), full}
    frontier = set(members)
    while frontier:
        fresh = set()
        for a in frontier:
            candidates = [a | b for b in members] + [a & b for b in members]
            if complement:
                candidates.append(full - a)
            fresh.update(c for c in candidates if c not in members)
        members |= fresh
        frontier = fresh
    return frozenset(members)


def lattice_closure(fam: LanguageFamily) -> LanguageFamily:
    """Close under binary union and intersection, adding ∅ and the full space."""
    return LanguageFamily(fam.space, _close(fam.members, fam.space, complement=False))


def boolean_closure(fam: LanguageFamily) -> LanguageFamily:
    return LanguageFamily(fam.space, _close(fam.members, fam.space, complement=True))


def derive_equations(fam: LanguageFamily) -> EquationSet:
    """Every equation between points satisfied by all members of ``fam``."""
    pts = fam.space.sorted_points()
    pairs = frozenset(
        Equation(u, v) for u in pts for v in pts
        if all(subset_satisfies(m, Equation(u, v)) for m in fam.members)
    )
    return EquationSet(fam.space, pairs)


def _requirement_masks(es: EquationSet, pts: Sequence[Point]) -> list[int]:
    bit = {p: i for i, p in enumerate(pts)}
    req = [0] * len(pts)
    for e in es.pairs:
        req[bit[e.u]] |= 1 << bit[e.v]
    return req


def _mask_satisfies(mask: int, req: Sequence[int]) -> bool:
    return all(not (mask >> i & 1) or (mask & r) == r for i, r in enumerate(req))


def defined_family(es: EquationSet) -> frozenset:
    """All subsets of the space satisfying every equation in ``es`` (exhaustive scan)."""
    pts = es.space.sorted_points()
    if len(pts) > EXHAUSTIVE_LIMIT:
        raise SpaceTooLarge(f"{len(pts)} points exceed the exhaustive limit of {EXHAUSTIVE_LIMIT}")
    req = _requirement_masks(es, pts)
    return frozenset(
        frozenset(p for i, p in enumerate(pts) if mask >> i & 1)
        for mask in range(1 << len(pts)) if _mask_satisfies(mask, req)
    )


def proof_witness(members: Iterable[Subset], a: Subset, points: Iterable[Point]) -> Equation | None:
    """The equation ``x -> y`` that separates ``a`` from a lattice ``members``.

    ``x`` lies in ``a`` but in no member contained in ``a``; ``y`` lies in
    every member containing ``x`` but not in ``a``.  Every member satisfies
    ``x -> y`` while ``a`` violates it.  Returns None when either point is
    missing, which for a lattice means ``a`` is a member.
    """
    members = list(members)
    points = sorted(points, key=point_key)
    below = set().union(*(m for m in members if m <= a))
    xs = [p for p in points if p in a and p not in below]
    if not xs:
        return None
    x = xs[0]
    above = set(points)
    for m in members:
        if x in m:
            above &= m
    ys = [p for p in points if p in above and p not in a]
    return Equation(x, ys[0]) if ys else None


@dataclass
class TheoremReport:
    """Result of checking that a closed family equals the family its equations define."""

    holds: bool
    exact: bool
    symmetric: bool
    family: LanguageFamily
    equations: EquationSet
    defined: frozenset | None
    sampled: bool = False
    counterexample: Subset | None = None
    certificate: Equation | None = None
    notes: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.holds

    def to_json(self) -> dict:
        return {
            "verdict": "PASS" if self.holds else "FAIL",
            "certificate": self.certificate.to_json() if self.certificate else None,
            "exact": self.exact,
            "sampled": self.sampled,
            "family_size": len(self.family),
            "equations": len(self.equations),
            "defined_size": None if self.defined is None else len(self.defined),
        }


def _compare(closed: LanguageFamily, es: EquationSet, symmetric: bool,
             rng: random.Random | None, samples: int) -> TheoremReport:
    space = closed.space
    notes = [] if space.exact else ["space is an under-approximation; result is advisory"]
    pts = space.sorted_points()
    if len(pts) <= EXHAUSTIVE_LIMIT:
        defined = defined_family(es)
        candidates = sorted(defined ^ closed.members, key=lambda s: sorted(map(point_key, s)))
        sampled = False
    else:
        rng = rng or random.Random(0)
        req = _requirement_masks(es, pts)
        defined = None
        candidates = []
        for _ in range(samples):
            mask = rng.getrandbits(len(pts))
            subset = frozenset(p for i, p in enumerate(pts) if mask >> i & 1)
            if _mask_satisfies(mask, req) != (subset in closed.members):
                candidates.append(subset)
                break
        sampled = True
    if not candidates:
        return TheoremReport(True, space.exact, symmetric, closed, es, defined, sampled, notes=notes)
    bad = candidates[0]
    witness = proof_witness(closed.members, bad, pts) if bad not in closed.members else None
    if bad in closed.members:
        notes.append("a member of the family violates a derived equation")
    return TheoremReport(False, space.exact, symmetric, closed, es, defined, sampled,
                         counterexample=bad, certificate=witness, notes=notes)


def verify_lattice_theorem(space: ApproximationSpace, fam: LanguageFamily | Iterable[Language],
                           rng: random.Random | None = None, samples: int = 2000) -> TheoremReport:
    """Close ``fam`` into a lattice ``M``, derive its equations ``E`` and check
    that the subsets defined by ``E`` are exactly ``M``."""
    if not isinstance(fam, LanguageFamily):
        fam = LanguageFamily.from_languages(space, fam)
    closed = lattice_closure(fam)
    return _compare(closed, derive_equations(closed), False, rng, samples)


def verify_boolean_corollary(space: ApproximationSpace, fam: LanguageFamily | Iterable[Language],
                             rng: random.Random | None = None, samples: int = 2000) -> TheoremReport:
    """Same pipeline with Boolean closure and only the symmetric derived equations."""
    if not isinstance(fam, LanguageFamily):
        fam = LanguageFamily.from_languages(space, fam)
    closed = boolean_closure(fam)
    derived = derive_equations(closed)
    report = _compare(closed, derived.symmetric_part(), True, rng, samples)
    if not derived.is_symmetric():
        report.holds = False
        report.notes.append("equations of a Boolean algebra should be symmetric")
    return report


IN_LATTICE = "IN_LATTICE"
NOT_IN_LATTICE = "NOT_IN_LATTICE"


@dataclass
class Verdict:
    in_lattice: bool
    certificate: Equation | None
    exact: bool

    @property
    def verdict(self) -> str:
        return IN_LATTICE if self.in_lattice else NOT_IN_LATTICE

    @property
    def advisory(self) -> bool:
        return not self.exact

    def to_json(self) -> dict:
        return {"verdict": self.verdict,
                "certificate": self.certificate.to_json() if self.certificate else None,
                "exact": self.exact}


def check_definable(space: ApproximationSpace, fam: LanguageFamily | Iterable[Language],
                    candidate: Language) -> Verdict:
    """Decide membership of ``candidate`` in the lattice generated by ``fam`` via equations.

    A violated equation is returned as the separation certificate, taken
    from the construction in :func:`proof_witness` when it applies.
    """
    if not isinstance(fam, LanguageFamily):
        fam = LanguageFamily.from_languages(space, fam)
    closed = lattice_closure(fam)
    es = derive_equations(closed)
    a = space.image(candidate)
    violated = [e for e in es.sorted() if not subset_satisfies(a, e)]
    if not violated:
        return Verdict(True, None, space.exact)
    witness = proof_witness(closed.members, a, space.points)
    if witness is None or witness not in es or subset_satisfies(a, witness):
        witness = violated[0]
    return Verdict(False, witness, space.exact)


# -- randomized trials on small ground sets ------------------------------

def ground_space(n: int) -> tuple[TableFramework, ApproximationSpace]:
    """A framework of ``n`` objects told apart by one recogniser, and its exact space."""
    fw = TableFramework(list(range(n)), [{k: k for k in range(n)}])
    return fw, approximation_space(fw, [0])


def random_generators(rng: random.Random, n: int, max_generators: int = 4) -> list[Language]:
    return [Language(0, (k for k in range(n) if rng.random() < 0.5))
            for _ in range(rng.randint(0, max_generators))]


@dataclass
class TrialSummary:
    trials: int
    seed: int
    lattice_passed: int = 0
    boolean_passed: int = 0
    failures: list = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return self.lattice_passed == self.boolean_passed == self.trials

    def to_json(self) -> dict:
        return {"trials": self.trials, "seed": self.seed,
                "lattice_passed": self.lattice_passed, "boolean_passed": self.boolean_passed,
                "failures": self.failures}


def run_trials(trials: int, seed: int = 0, max_points: int = 5) -> TrialSummary:
    """Random ground sets of 1..``max_points`` points with random generator subsets."""
    rng = random.Random(seed)
    summary = TrialSummary(trials, seed)
    for t in range(trials):
        n = rng.randint(1, max_points)
        _, space = ground_space(n)
        gens = random_generators(rng, n)
        for kind, check in (("lattice", verify_lattice_theorem), ("boolean", verify_boolean_corollary)):
            report = check(space, gens)
            if report.holds:
                if kind == "lattice":
                    summary.lattice_passed += 1
                else:
                    summary.boolean_passed += 1
            else:
                summary.failures.append({"trial": t, "kind": kind, "points": n,
                                         "generators": [sorted(g.accepted) for g in gens]})
    return summary
