"""First-order sentences over a relational signature.

Textual form::

    sentence := 'forall' VAR '.' sentence | 'exists' VAR '.' sentence | disj
    disj     := conj ('|' conj)*
    conj     := lit ('&' lit)*
    lit      := '!' lit | '(' sentence ')' | REL '(' VAR (',' VAR)* ')' | VAR '=' VAR

The grammar has no implication token, so ``Implies(a, b)`` prints as
``!(a) | b``-style text and parses back as the equivalent disjunction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from ..errors import ParseError


class Formula:
    __slots__ = ()

    def __and__(self, other):
        return conj(self, other)

    def __or__(self, other):
        return disj(self, other)

    def __invert__(self):
        return Not(self)

    def __str__(self):
        return to_text(self)


@dataclass(frozen=True)
class Rel(Formula):
    name: str
    args: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Not(Formula):
    arg: Formula


@dataclass(frozen=True)
class And(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 2:
            raise ValueError("And needs at least two arguments; use conj()")


@dataclass(frozen=True)
class Or(Formula):
    args: tuple[Formula, ...]

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if len(self.args) < 2:
            raise ValueError("Or needs at least two arguments; use disj()")


@dataclass(frozen=True)
class Implies(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Exists(Formula):
    var: str
    body: Formula


@dataclass(frozen=True)
class Forall(Formula):
    var: str
    body: Formula


Sentence = Formula


def conj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        flat.extend(a.args if isinstance(a, And) else (a,))
    if not flat:
        raise ValueError("empty conjunction")
    return flat[0] if len(flat) == 1 else And(tuple(flat))


def disj(*args: Formula) -> Formula:
    flat: list[Formula] = []
    for a in args:
        flat.extend(a.args if isinstance(a, Or) else (a,))
    if not flat:
        raise ValueError("empty disjunction")
    return flat[0] if len(flat) == 1 else Or(tuple(flat))


def exists(variables, body: Formula) -> Formula:
    for v in reversed(list(variables)):
        body = Exists(v, body)
    return body


def forall(variables, body: Formula) -> Formula:
    for v in reversed(list(variables)):
        body = Forall(v, body)
    return body


def free_vars(f: Formula) -> frozenset[str]:
    if isinstance(f, Rel):
        return frozenset(f.args)
    if isinstance(f, Eq):
        return frozenset((f.left, f.right))
    if isinstance(f, Not):
        return free_vars(f.arg)
    if isinstance(f, (And, Or)):
        return frozenset().union(*(free_vars(a) for a in f.args))
    if isinstance(f, Implies):
        return free_vars(f.left) | free_vars(f.right)
    if isinstance(f, (Exists, Forall)):
        return free_vars(f.body) - {f.var}
    raise TypeError(f"not a formula: {f!r}")


def relations_used(f: Formula) -> set[tuple[str, int]]:
    if isinstance(f, Rel):
        return {(f.name, len(f.args))}
    if isinstance(f, Eq):
        return set()
    if isinstance(f, Not):
        return relations_used(f.arg)
    if isinstance(f, (And, Or)):
        return set().union(*(relations_used(a) for a in f.args))
    if isinstance(f, Implies):
        return relations_used(f.left) | relations_used(f.right)
    return relations_used(f.body)


def depth(f: Formula) -> int:
    if isinstance(f, (Rel, Eq)):
        return 0
    if isinstance(f, Not):
        return 1 + depth(f.arg)
    if isinstance(f, (And, Or)):
        return 1 + max(depth(a) for a in f.args)
    if isinstance(f, Implies):
        return 1 + max(depth(f.left), depth(f.right))
    return 1 + depth(f.body)


def desugar(f: Formula) -> Formula:
    """Replace implications by disjunctions, the form the text grammar can express."""
    if isinstance(f, (Rel, Eq)):
        return f
    if isinstance(f, Not):
        return Not(desugar(f.arg))
    if isinstance(f, And):
        return conj(*(desugar(a) for a in f.args))
    if isinstance(f, Or):
        return disj(*(desugar(a) for a in f.args))
    if isinstance(f, Implies):
        return disj(Not(desugar(f.left)), desugar(f.right))
    return type(f)(f.var, desugar(f.body))


# -- printing -----------------------------------------------------------

def _lit(f: Formula) -> str:
    if isinstance(f, Rel):
        return f"{f.name}({','.join(f.args)})"
    if isinstance(f, Eq):
        return f"{f.left}={f.right}"
    if isinstance(f, Not):
        return "!" + _lit(f.arg)
    return "(" + _text(f) + ")"


def to_text(f: Formula) -> str:
    return _text(desugar(f))


def _text(f: Formula) -> str:
    if isinstance(f, Forall):
        return f"forall {f.var}. {_text(f.body)}"
    if isinstance(f, Exists):
        return f"exists {f.var}. {_text(f.body)}"
    if isinstance(f, Or):
        return " | ".join(_conj_text(a) for a in f.args)
    return _conj_text(f)


def _conj_text(f: Formula) -> str:
    if isinstance(f, And):
        return " & ".join(_lit(a) for a in f.args)
    return _lit(f)


# -- parsing ------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z_][A-Za-z0-9_]*)|(.))")
_KEYWORDS = {"forall", "exists"}


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        tok = m.group(1) or m.group(2)
        if tok is None:
            break
        if m.group(2) is not None and tok not in "().,|&!=":
            raise ParseError(f"unexpected character {tok!r} at offset {m.start(2)}")
        tokens.append(tok)
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self, ahead: int = 0):
        i = self.pos + ahead
        return self.tokens[i] if i < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None:
            raise ParseError(f"unexpected end of input, expected {expected or 'a token'}")
        if expected is not None and tok != expected:
            raise ParseError(f"expected {expected!r}, found {tok!r}")
        self.pos += 1
        return tok

    def ident(self, what: str) -> str:
        tok = self.take()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok) or tok in _KEYWORDS:
            raise ParseError(f"expected {what}, found {tok!r}")
        return tok

    def sentence(self) -> Formula:
        tok = self.peek()
        if tok in _KEYWORDS:
            self.take()
            var = self.ident("a variable")
            self.take(".")
            body = self.sentence()
            return Forall(var, body) if tok == "forall" else Exists(var, body)
        parts = [self.conj()]
        while self.peek() == "|":
            self.take()
            parts.append(self.conj())
        return disj(*parts)

    def conj(self) -> Formula:
        parts = [self.lit()]
        while self.peek() == "&":
            self.take()
            parts.append(self.lit())
        return conj(*parts)

    def lit(self) -> Formula:
        tok = self.peek()
        if tok == "!":
            self.take()
            return Not(self.lit())
        if tok == "(":
            self.take()
            inner = self.sentence()
            self.take(")")
            return inner
        name = self.ident("a relation or variable")
        if self.peek() == "(":
            self.take()
            args = [self.ident("a variable")]
            while self.peek() == ",":
                self.take()
                args.append(self.ident("a variable"))
            self.take(")")
            return Rel(name, tuple(args))
        self.take("=")
        return Eq(name, self.ident("a variable"))


def parse(text: str) -> Formula:
    p = _Parser(text)
    f = p.sentence()
    if p.peek() is not None:
        raise ParseError(f"trailing input starting at {p.peek()!r}")
    return f
