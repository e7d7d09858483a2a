"""Finite words over an alphabet, recognised by complete DFAs.

A DFA's recogniser value on a word is ``value_of`` applied to the state the
word reaches.  Product automata realise intersections, and breadth-first
search on a product gives the exact set of value tuples realised by words.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Hashable, Iterator, Sequence
from dataclasses import dataclass
from itertools import product

from .errors import AlphabetMismatch, ObjectDomainError
from .framework import Framework, format_label


def check_alphabet(symbols: Sequence[str]) -> tuple[str, ...]:
    symbols = tuple(symbols)
    if not symbols:
        raise ValueError("alphabet must be nonempty")
    if len(set(symbols)) != len(symbols):
        raise ValueError(f"duplicate symbols in alphabet {symbols}")
    if not all(isinstance(s, str) and len(s) == 1 for s in symbols):
        raise ValueError("alphabet symbols must be single characters")
    return symbols


@dataclass(frozen=True)
class Dfa:
    """Complete DFA with states ``0..n-1``.

    ``transition[s][k]`` is the successor of state ``s`` on ``alphabet[k]``.
    """

    alphabet: tuple[str, ...]
    transition: tuple[tuple[int, ...], ...]
    initial: int
    value_of: tuple[Hashable, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "transition", tuple(tuple(row) for row in self.transition))
        object.__setattr__(self, "value_of", tuple(self.value_of))
        n = len(self.transition)
        if n == 0:
            raise ValueError("a DFA needs at least one state")
        if len(self.value_of) != n:
            raise ValueError("value_of must give a value for every state")
        if not 0 <= self.initial < n:
            raise ValueError(f"initial state {self.initial} out of range")
        for s, row in enumerate(self.transition):
            if len(row) != len(self.alphabet):
                raise ValueError(f"state {s} is missing transitions")
            if any(not 0 <= t < n for t in row):
                raise ValueError(f"state {s} has a transition out of range")

    @property
    def states(self) -> int:
        return len(self.transition)

    @property
    def value_set(self) -> tuple:
        """Distinct values in state order."""
        return tuple(dict.fromkeys(self.value_of))

    def step(self, state: int, symbol: str) -> int:
        try:
            k = self.alphabet.index(symbol)
        except ValueError:
            raise AlphabetMismatch(f"symbol {symbol!r} not in alphabet {self.alphabet}") from None
        return self.transition[state][k]

    def state_after(self, word: str) -> int:
        state = self.initial
        for symbol in word:
            state = self.step(state, symbol)
        return state


def word_at(alphabet: Sequence[str], n: int) -> str:
    """The n-th word in length-lexicographic order (bijective base-k numeral)."""
    if n < 0:
        raise IndexError(n)
    k = len(alphabet)
    out = []
    while n > 0:
        n -= 1
        n, r = divmod(n, k)
        out.append(alphabet[r])
    return "".join(reversed(out))


def word_enumerator(alphabet: Sequence[str]) -> Iterator[str]:
    length = 0
    while True:
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)
        length += 1


def words_up_to(alphabet: Sequence[str], max_length: int) -> Iterator[str]:
    for length in range(max_length + 1):
        for letters in product(alphabet, repeat=length):
            yield "".join(letters)


def run_dfa(d: Dfa, word: str):
    return d.value_of[d.state_after(word)]


def _same_alphabet(dfas: Sequence[Dfa]) -> tuple[str, ...]:
    alphabet = dfas[0].alphabet
    for d in dfas[1:]:
        if d.alphabet != alphabet:
            raise AlphabetMismatch(f"alphabets differ: {alphabet} vs {d.alphabet}")
    return alphabet


def _explore(dfas: Sequence[Dfa]) -> tuple[list[tuple[int, ...]], dict[tuple[int, ...], str]]:
    """BFS over the reachable product states.

    Returns the states in discovery order and a shortest, then
    lexicographically least, word reaching each.
    """
    alphabet = _same_alphabet(dfas)
    start = tuple(d.initial for d in dfas)
    witness = {start: ""}
    order = [start]
    queue = deque([start])
    while queue:
        state = queue.popleft()
        for k, symbol in enumerate(alphabet):
            nxt = tuple(d.transition[s][k] for d, s in zip(dfas, state))
            if nxt not in witness:
                witness[nxt] = witness[state] + symbol
                order.append(nxt)
                queue.append(nxt)
    return order, witness


def product_dfa(d1: Dfa, d2: Dfa) -> Dfa:
    """Reachable part of the product automaton, valued in pairs."""
    order, _ = _explore([d1, d2])
    number = {state: i for i, state in enumerate(order)}
    transition = [
        [number[(d1.transition[a][k], d2.transition[b][k])] for k in range(len(d1.alphabet))]
        for a, b in order
    ]
    value_of = [(d1.value_of[a], d2.value_of[b]) for a, b in order]
    return Dfa(d1.alphabet, transition, 0, value_of)


def singleton_dfa(word: str, alphabet: Sequence[str]) -> Dfa:
    """Minimal DFA whose ``"accept"`` value is reached by ``word`` and nothing else.

    States ``0..len(word)-1`` are proper prefixes, ``len(word)`` accepts and
    ``len(word)+1`` is the sink.
    """
    alphabet = check_alphabet(alphabet)
    for symbol in word:
        if symbol not in alphabet:
            raise AlphabetMismatch(f"symbol {symbol!r} not in alphabet {alphabet}")
    n = len(word)
    sink = n + 1
    transition = []
    for i in range(n + 2):
        if i < n:
            transition.append([i + 1 if a == word[i] else sink for a in alphabet])
        else:
            transition.append([sink] * len(alphabet))
    value_of = ["reject"] * (n + 2)
    value_of[n] = "accept"
    return Dfa(alphabet, transition, 0, value_of)


def even_length_dfa(alphabet: Sequence[str]) -> Dfa:
    alphabet = check_alphabet(alphabet)
    return Dfa(alphabet, [[1] * len(alphabet), [0] * len(alphabet)], 0, ["even", "odd"])


def contains_symbol_dfa(alphabet: Sequence[str], symbol: str) -> Dfa:
    alphabet = check_alphabet(alphabet)
    if symbol not in alphabet:
        raise AlphabetMismatch(f"symbol {symbol!r} not in alphabet {alphabet}")
    row0 = [1 if a == symbol else 0 for a in alphabet]
    return Dfa(alphabet, [row0, [1] * len(alphabet)], 0, ["no", "yes"])


def full_dfa(alphabet: Sequence[str]) -> Dfa:
    alphabet = check_alphabet(alphabet)
    return Dfa(alphabet, [[0] * len(alphabet)], 0, ["all"])


def random_dfa(alphabet: Sequence[str], states: int, rng: random.Random,
               values: Sequence[Hashable] | None = None) -> Dfa:
    """Uniform transitions; each state gets a value drawn from ``values``."""
    alphabet = check_alphabet(alphabet)
    values = list(values) if values is not None else [f"q{i}" for i in range(states)]
    transition = [[rng.randrange(states) for _ in alphabet] for _ in range(states)]
    value_of = [rng.choice(values) for _ in range(states)]
    return Dfa(alphabet, transition, rng.randrange(states), value_of)


def reachable_value_witnesses(dfas: Sequence[Dfa]) -> dict[tuple, str]:
    """Every realized value tuple mapped to its shortest (then least) witness word."""
    if not dfas:
        raise ValueError("need at least one DFA")
    order, witness = _explore(dfas)
    found: dict[tuple, str] = {}
    for state in order:
        point = tuple(d.value_of[s] for d, s in zip(dfas, state))
        found.setdefault(point, witness[state])
    return found


def reachable_value_tuples(dfas: Sequence[Dfa]) -> set[tuple]:
    return set(reachable_value_witnesses(dfas))


def count_words_reaching(dfas: Sequence[Dfa], point: Sequence, cap: int = 2) -> int:
    """Number of words whose value tuple is ``point``, saturated at ``cap``.

    The count is infinite (returned as ``cap``) exactly when a useful product
    state lies on a cycle.
    """
    alphabet = _same_alphabet(dfas)
    point = tuple(point)
    order, _ = _explore(dfas)

    def succ(state):
        return [tuple(d.transition[s][k] for d, s in zip(dfas, state)) for k in range(len(alphabet))]

    targets = {s for s in order if tuple(d.value_of[q] for d, q in zip(dfas, s)) == point}
    if not targets:
        return 0
    preds: dict = {s: [] for s in order}
    for s in order:
        for t in succ(s):
            preds[t].append(s)
    useful = set(targets)
    stack = list(targets)
    while stack:
        for p in preds[stack.pop()]:
            if p not in useful:
                useful.add(p)
                stack.append(p)

    counts: dict = {}
    on_path: set = set()

    def count(state) -> int:
        if state in counts:
            return counts[state]
        on_path.add(state)
        total = 1 if state in targets else 0
        for t in succ(state):
            if t not in useful:
                continue
            if t in on_path:
                total = cap
            else:
                total += count(t)
            if total >= cap:
                total = cap
                break
        on_path.discard(state)
        counts[state] = total
        return total

    start = order[0]
    return count(start) if start in useful else 0


def dfa_to_json(d: Dfa) -> dict:
    return {
        "alphabet": list(d.alphabet),
        "states": d.states,
        "initial": d.initial,
        "transition": [list(row) for row in d.transition],
        "value_of": [format_label(v) for v in d.value_of],
    }


def dfa_from_json(data: dict) -> Dfa:
    try:
        d = Dfa(tuple(data["alphabet"]), data["transition"], data["initial"], data["value_of"])
        states = data.get("states", d.states)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed DFA: {exc}") from None
    if states != d.states:
        raise ValueError(f"'states' is {states} but {d.states} transition rows were given")
    return d


class WordFramework(Framework):
    """Objects are the words over ``alphabet``; recognisers are DFAs over it."""

    def __init__(self, alphabet: Sequence[str], dfas: Sequence[Dfa] = (), names: Sequence[str] = ()):
        super().__init__()
        self.alphabet = check_alphabet(alphabet)
        names = list(names) + [None] * (len(dfas) - len(names))
        for d, name in zip(dfas, names):
            self.register(d, name)

    def _evaluator(self, source: Dfa):
        if not isinstance(source, Dfa):
            raise TypeError("word recognisers must be DFAs")
        if source.alphabet != self.alphabet:
            raise AlphabetMismatch(f"DFA alphabet {source.alphabet} differs from {self.alphabet}")
        return (lambda w: run_dfa(source, w)), source.value_set

    def intersect_sources(self, r1, v1, r2, v2):
        d = product_dfa(r1.source, r2.source)
        accepted = frozenset(v for v in d.value_set if v[0] in v1 and v[1] in v2)
        return d, accepted

    def object_at(self, n):
        return word_at(self.alphabet, n)

    def objects(self):
        return word_enumerator(self.alphabet)

    def validate_object(self, obj):
        if not isinstance(obj, str):
            raise ObjectDomainError(f"{obj!r} is not a word")
        bad = [c for c in obj if c not in self.alphabet]
        if bad:
            raise ObjectDomainError(f"word {obj!r} uses symbols {bad} outside {self.alphabet}")

    def characteristic_source(self, obj):
        return singleton_dfa(obj, self.alphabet)

    def _dfas(self, indices):
        return [self.recogniser(i).source for i in indices]

    def exact_projection(self, indices):
        if not indices:
            return {(): ""}
        return reachable_value_witnesses(self._dfas(indices))

    def count_realizers(self, indices, point, cap=2):
        if not indices:
            return cap
        return count_words_reaching(self._dfas(indices), point, cap)


def word_framework_from_json(data) -> WordFramework:
    """Accept ``{"dfas": [...]}`` (optionally with ``"alphabet"`` and ``"names"``) or a bare list."""
    if isinstance(data, list):
        data = {"dfas": data}
    if not isinstance(data, dict) or "dfas" not in data:
        raise ValueError("word framework file needs a 'dfas' list")
    dfas = [dfa_from_json(d) for d in data["dfas"]]
    alphabet = data.get("alphabet") or (dfas[0].alphabet if dfas else None)
    if alphabet is None:
        raise ValueError("cannot infer the alphabet of an empty framework")
    return WordFramework(alphabet, dfas, data.get("names", ()))
