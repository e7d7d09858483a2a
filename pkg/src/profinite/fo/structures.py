"""Finite relational structures, canonical labelling and enumeration.

A structure of size n over a signature is encoded as a bit vector with one
position per (relation, tuple) pair, relations in signature order and tuples
in lexicographic order.  Bit vectors compare as integers with the first
position most significant.  The canonical form of a structure is the least
encoding over all permutations of its universe, so two structures are
isomorphic exactly when their canonical forms coincide.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass
from functools import lru_cache

from ..errors import ArityError, ObjectDomainError


@dataclass(frozen=True)
class Signature:
    relations: tuple[tuple[str, int], ...]

    def __post_init__(self):
        rels = tuple((str(n), int(a)) for n, a in self.relations)
        names = [n for n, _ in rels]
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate relation names in {names}")
        if any(a < 1 for _, a in rels):
            raise ValueError("relation arities must be at least 1")
        object.__setattr__(self, "relations", rels)

    def arity(self, name: str) -> int:
        for n, a in self.relations:
            if n == name:
                return a
        raise ArityError(f"relation {name!r} is not in the signature")

    def to_json(self) -> dict:
        return {"relations": [{"name": n, "arity": a} for n, a in self.relations]}

    @classmethod
    def from_json(cls, data: Mapping) -> Signature:
        try:
            return cls(tuple((r["name"], r["arity"]) for r in data["relations"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed signature: {exc}") from None


GRAPH = Signature((("E", 2),))


@dataclass(frozen=True)
class FiniteStructure:
    """Universe ``{0..size-1}`` with one set of tuples per relation name."""

    size: int
    relations: tuple[tuple[str, frozenset], ...]

    def __post_init__(self):
        if self.size < 0:
            raise ValueError("size must be non-negative")
        # Empty relations are dropped so equality does not depend on them.
        rels = tuple(sorted((str(n), frozenset(tuple(t) for t in ts))
                            for n, ts in dict(self.relations).items() if ts))
        for name, tuples in rels:
            for t in tuples:
                if any(not 0 <= x < self.size for x in t):
                    raise ValueError(f"tuple {t} of {name} leaves the universe of size {self.size}")
        object.__setattr__(self, "relations", rels)

    @classmethod
    def make(cls, size: int, relations: Mapping[str, Iterable] | None = None) -> FiniteStructure:
        return cls(size, tuple((relations or {}).items()))

    def interpretation(self, name: str) -> frozenset:
        for n, ts in self.relations:
            if n == name:
                return ts
        return frozenset()

    def permuted(self, perm) -> FiniteStructure:
        """Image under the bijection ``x -> perm[x]``."""
        return FiniteStructure(self.size, tuple(
            (n, frozenset(tuple(perm[x] for x in t) for t in ts)) for n, ts in self.relations))

    def to_json(self) -> dict:
        return {"size": self.size,
                "relations": {n: sorted(list(t) for t in ts) for n, ts in self.relations}}

    @classmethod
    def from_json(cls, data: Mapping) -> FiniteStructure:
        try:
            return cls.make(data["size"], {n: [tuple(t) for t in ts]
                                           for n, ts in data.get("relations", {}).items()})
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed structure: {exc}") from None

    def __repr__(self):
        rels = ", ".join(f"{n}={sorted(ts)}" for n, ts in self.relations if ts)
        return f"Structure({self.size}{', ' + rels if rels else ''})"


def check_structure(m: FiniteStructure, sig: Signature) -> None:
    names = {n for n, _ in sig.relations}
    for name, tuples in m.relations:
        if name not in names:
            if tuples:
                raise ObjectDomainError(f"relation {name!r} is not in the signature")
            continue
        a = sig.arity(name)
        if any(len(t) != a for t in tuples):
            raise ObjectDomainError(f"relation {name!r} has tuples of the wrong arity")


@lru_cache(maxsize=None)
def _positions(sig: Signature, size: int) -> tuple[tuple[str, tuple[int, ...]], ...]:
    return tuple((name, t) for name, a in sig.relations
                 for t in itertools.product(range(size), repeat=a))


def encode(m: FiniteStructure, sig: Signature) -> int:
    pos = _positions(sig, m.size)
    code = 0
    for name, t in pos:
        code = (code << 1) | (t in m.interpretation(name))
    return code


def decode(code: int, size: int, sig: Signature) -> FiniteStructure:
    pos = _positions(sig, size)
    n = len(pos)
    rels: dict[str, set] = {name: set() for name, _ in sig.relations}
    for i, (name, t) in enumerate(pos):
        if code >> (n - 1 - i) & 1:
            rels[name].add(t)
    return FiniteStructure.make(size, rels)


@lru_cache(maxsize=None)
def _perm_maps(sig: Signature, size: int) -> tuple[tuple[int, ...], ...]:
    """For each permutation, the bit position each position is sent to."""
    pos = _positions(sig, size)
    index = {p: i for i, p in enumerate(pos)}
    maps = []
    for perm in itertools.permutations(range(size)):
        maps.append(tuple(index[(name, tuple(perm[x] for x in t))] for name, t in pos))
    return tuple(maps)


def _apply(code: int, mapping: tuple[int, ...]) -> int:
    n = len(mapping)
    out = 0
    for i, j in enumerate(mapping):
        if code >> (n - 1 - i) & 1:
            out |= 1 << (n - 1 - j)
    return out


def _orbit(code: int, sig: Signature, size: int) -> set[int]:
    return {_apply(code, m) for m in _perm_maps(sig, size)}


def canonical(m: FiniteStructure, sig: Signature) -> FiniteStructure:
    """Least encoding over all size! relabellings."""
    check_structure(m, sig)
    best = min(_orbit(encode(m, sig), sig, m.size))
    return decode(best, m.size, sig)


def is_canonical(m: FiniteStructure, sig: Signature) -> bool:
    return canonical(m, sig) == m


def canonical_codes(sig: Signature, size: int) -> list[int]:
    """Canonical encodings of one size in increasing order.

    Scanning codes upwards, the first unseen code of each orbit is that
    orbit's minimum; marking the whole orbit as seen skips its other members.
    """
    return list(_canonical_codes(sig, size))


@lru_cache(maxsize=None)
def _canonical_codes(sig: Signature, size: int) -> tuple[int, ...]:
    n = len(_positions(sig, size))
    seen: set[int] = set()
    out = []
    for code in range(1 << n):
        if code in seen:
            continue
        out.append(code)
        seen |= _orbit(code, sig, size)
    return tuple(out)


def structures_of_size(sig: Signature, size: int) -> Iterator[FiniteStructure]:
    for code in _canonical_codes(sig, size):
        yield decode(code, size, sig)


def structure_enumerator(sig: Signature) -> Iterator[FiniteStructure]:
    """All canonical structures by increasing size, then increasing encoding."""
    for size in itertools.count():
        yield from structures_of_size(sig, size)


def structures_up_to(sig: Signature, max_size: int) -> Iterator[FiniteStructure]:
    for size in range(max_size + 1):
        yield from structures_of_size(sig, size)
