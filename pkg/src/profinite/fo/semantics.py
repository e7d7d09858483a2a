"""Truth of first-order sentences in finite structures, and derived sentences."""

from __future__ import annotations

import random
from collections.abc import Sequence
from itertools import product

from ..errors import ArityError, FreeVariableError
from .structures import FiniteStructure, Signature, structures_up_to
from .syntax import (
    And, Eq, Exists, Forall, Formula, Implies, Not, Or, Rel,
    conj, disj, exists, forall, free_vars, relations_used,
)

TOP = True
BOTTOM = False
TRUTH_VALUES = (BOTTOM, TOP)


def check_sentence(s: Formula, sig: Signature) -> None:
    free = free_vars(s)
    if free:
        raise FreeVariableError(f"free variables {sorted(free)} in {s}")
    for name, a in relations_used(s):
        if sig.arity(name) != a:
            raise ArityError(f"{name} used with arity {a}, signature says {sig.arity(name)}")


def evaluate_sentence(s: Formula, m: FiniteStructure, sig: Signature | None = None) -> bool:
    """Tarskian truth of a closed sentence; quantifiers range over ``range(m.size)``."""
    if sig is not None:
        check_sentence(s, sig)
    return _eval(s, m, {})


def _eval(f: Formula, m: FiniteStructure, env: dict) -> bool:
    if isinstance(f, Rel):
        try:
            t = tuple(env[x] for x in f.args)
        except KeyError as exc:
            raise FreeVariableError(f"free variable {exc.args[0]!r}") from None
        interp = m.interpretation(f.name)
        if interp and len(next(iter(interp))) != len(t):
            raise ArityError(f"{f.name} used with arity {len(t)} against tuples of another arity")
        return t in interp
    if isinstance(f, Eq):
        try:
            return env[f.left] == env[f.right]
        except KeyError as exc:
            raise FreeVariableError(f"free variable {exc.args[0]!r}") from None
    if isinstance(f, Not):
        return not _eval(f.arg, m, env)
    if isinstance(f, And):
        return all(_eval(a, m, env) for a in f.args)
    if isinstance(f, Or):
        return any(_eval(a, m, env) for a in f.args)
    if isinstance(f, Implies):
        return (not _eval(f.left, m, env)) or _eval(f.right, m, env)
    if isinstance(f, (Exists, Forall)):
        quantifier = any if isinstance(f, Exists) else all
        return quantifier(_eval(f.body, m, {**env, f.var: x}) for x in range(m.size))
    raise TypeError(f"not a formula: {f!r}")


def tautology(s: Formula) -> Formula:
    return disj(s, Not(s))


def conjunction_recogniser(s1: Formula, v1, s2: Formula, v2) -> tuple[Formula, frozenset]:
    """A sentence and value set for ``{m : s1(m) ∈ v1 and s2(m) ∈ v2}``.

    Each side contributes ``s``, ``¬s`` or nothing, depending on whether its
    value set is ``{⊤}``, ``{⊥}`` or both.
    """
    v1, v2 = frozenset(v1), frozenset(v2)
    if not v1 or not v2:
        return conj(s1, s2), frozenset()
    literals = []
    for s, v in ((s1, v1), (s2, v2)):
        if v == {TOP}:
            literals.append(s)
        elif v == {BOTTOM}:
            literals.append(Not(s))
    if not literals:
        return tautology(s1), frozenset({TOP})
    return conj(*literals), frozenset({TOP})


def characteristic_sentence(m: FiniteStructure, sig: Signature) -> Formula:
    """The diagram sentence true exactly in structures isomorphic to ``m``."""
    if m.size == 0:
        return Not(Exists("y", Eq("y", "y")))
    xs = [f"x{i}" for i in range(m.size)]
    parts: list[Formula] = [Not(Eq(xs[i], xs[j]))
                            for i in range(m.size) for j in range(i + 1, m.size)]
    for name, a in sig.relations:
        interp = m.interpretation(name)
        for t in product(range(m.size), repeat=a):
            atom = Rel(name, tuple(xs[i] for i in t))
            parts.append(atom if t in interp else Not(atom))
    parts.append(Forall("y", disj(*(Eq("y", x) for x in xs))))
    return exists(xs, conj(*parts))


def strict_linear_order(rel: str = "E") -> Formula:
    def lt(a, b):
        return Rel(rel, (a, b))
    irreflexive = Forall("x", Not(lt("x", "x")))
    transitive = forall("xyz", Implies(conj(lt("x", "y"), lt("y", "z")), lt("x", "z")))
    total = forall("xy", disj(lt("x", "y"), Eq("x", "y"), lt("y", "x")))
    return conj(irreflexive, transitive, total)


def linear_order_without_maximum(rel: str = "E", nonempty: bool = True) -> Formula:
    """Satisfied by (ω, <) and by no nonempty finite structure.

    The empty structure satisfies the bare conjunction vacuously, so by
    default the sentence also asserts ``exists x. x=x``, which holds in every
    structure of classical model theory.
    """
    no_max = Forall("x", Exists("y", Rel(rel, ("x", "y"))))
    parts = [strict_linear_order(rel), no_max]
    if nonempty:
        parts.insert(0, Exists("x", Eq("x", "x")))
    return conj(*parts)


def realized_truth_tuples(sentences: Sequence[Formula], size_bound: int,
                          sig: Signature) -> set[tuple[bool, ...]]:
    """Truth-value tuples realized by canonical structures of size ≤ ``size_bound``.

    Only an under-approximation of the realizable tuples: a tuple may need a
    larger structure.
    """
    for s in sentences:
        check_sentence(s, sig)
    return {tuple(_eval(s, m, {}) for s in sentences)
            for m in structures_up_to(sig, size_bound)}


def random_formula(sig: Signature, depth: int, rng: random.Random,
                   scope: Sequence[str] = (), max_vars: int = 3) -> Formula:
    """Random formula of nesting depth ≤ ``depth`` + 1 whose free variables lie in ``scope``."""
    scope = list(scope)
    if not scope:
        var = f"v{len(scope)}"
        body = random_formula(sig, max(depth - 1, 0), rng, [var], max_vars)
        return (Exists if rng.random() < 0.5 else Forall)(var, body)
    if depth <= 0:
        return _random_atom(sig, rng, scope)
    choice = rng.randrange(6 if len(scope) < max_vars else 4)
    if choice == 0:
        return Not(random_formula(sig, depth - 1, rng, scope, max_vars))
    if choice in (1, 2):
        a = random_formula(sig, depth - 1, rng, scope, max_vars)
        b = random_formula(sig, depth - 1, rng, scope, max_vars)
        return conj(a, b) if choice == 1 else disj(a, b)
    if choice == 3:
        return _random_atom(sig, rng, scope)
    var = f"v{len(scope)}"
    body = random_formula(sig, depth - 1, rng, scope + [var], max_vars)
    return (Exists if choice == 4 else Forall)(var, body)


def _random_atom(sig: Signature, rng: random.Random, scope: Sequence[str]) -> Formula:
    if not sig.relations or rng.random() < 0.2:
        return Eq(rng.choice(scope), rng.choice(scope))
    name, a = rng.choice(sig.relations)
    return Rel(name, tuple(rng.choice(scope) for _ in range(a)))


def random_sentence(sig: Signature, depth: int, rng: random.Random) -> Formula:
    return random_formula(sig, depth, rng)
