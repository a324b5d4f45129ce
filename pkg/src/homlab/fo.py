"""First-order logic over graphs: parser, evaluator, complement transform.

Syntax (ASCII, binary connectives parenthesized)::

    bot | top | x = y | x != y | E(x,y) | not f | (f and f) | (f or f)
    | exists x. f | forall x. f | exists>=k x. f

Identifiers match [a-z][a-z0-9]*; ``x != y`` is surface syntax for
``not x = y``.  Variables may shadow; evaluation uses the innermost
binding.  The complement transform rewrites E(x,y) to
(not E(x,y) and not x = y) and passes through everything else, so a
formula's truth on a simple graph equals its transform's truth on the
complement graph.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Optional, Sequence

from .errors import FormulaParseError, SizeBoundError
from .graphs import Graph, all_simple_graphs, complement
from itertools import product


class Formula:
    __slots__ = ()


@dataclass(frozen=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Eq(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Edge(Formula):
    left: str
    right: str


@dataclass(frozen=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
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


@dataclass(frozen=True)
class CountExists(Formula):
    count: int
    var: str
    body: Formula


_TOKEN_RE = re.compile(
    r"(?P<ws>\s+)|(?P<int>\d+)|(?P<id>[a-z][a-z0-9]*)|(?P<E>E)|(?P<sym>>=|!=|[(),=.])"
)
_KEYWORDS = {"bot", "top", "not", "and", "or", "exists", "forall"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise FormulaParseError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            kind = m.lastgroup
            value = m.group()
            if kind == "id" and value in _KEYWORDS:
                kind = value
            tokens.append((kind, value, pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str) -> str:
        k, v, p = self.next()
        if k != kind:
            raise FormulaParseError(f"expected {kind!r}, got {v or 'end of input'!r}", p)
        return v

    def expect_sym(self, value: str) -> None:
        k, v, p = self.next()
        if k != "sym" or v != value:
            raise FormulaParseError(f"expected {value!r}, got {v or 'end of input'!r}", p)

    def formula(self) -> Formula:
        kind, value, pos = self.next()
        if kind == "bot":
            return Bottom()
        if kind == "top":
            return Top()
        if kind == "not":
            return Not(self.formula())
        if kind == "forall":
            var = self.expect("id")
            self.expect_sym(".")
            return Forall(var, self.formula())
        if kind == "exists":
            k2, _, _ = self.peek()
            if k2 == "sym" and self.peek()[1] == ">=":
                self.next()
                kk, kv, kp = self.next()
                if kk != "int":
                    raise FormulaParseError(f"expected a count after '>=', got {kv!r}", kp)
                count = int(kv)
                if count < 1:
                    raise FormulaParseError("counting quantifier needs a positive count", kp)
                var = self.expect("id")
                self.expect_sym(".")
                return CountExists(count, var, self.formula())
            var = self.expect("id")
            self.expect_sym(".")
            return Exists(var, self.formula())
        if kind == "sym" and value == "(":
            left = self.formula()
            ck, cv, cp = self.next()
            if ck == "sym" and cv == ")":
                return left  # redundant parentheses
            if ck not in ("and", "or"):
                raise FormulaParseError(f"expected 'and' or 'or', got {cv!r}", cp)
            right = self.formula()
            self.expect_sym(")")
            return And(left, right) if ck == "and" else Or(left, right)
        if kind == "E":
            self.expect_sym("(")
            x = self.expect("id")
            self.expect_sym(",")
            y = self.expect("id")
            self.expect_sym(")")
            return Edge(x, y)
        if kind == "id":
            k, v, p = self.next()
            if k == "sym" and v == "=":
                return Eq(value, self.expect("id"))
            if k == "sym" and v == "!=":
                return Not(Eq(value, self.expect("id")))
            raise FormulaParseError(f"expected '=' or '!=' after {value!r}, got {v!r}", p)
        raise FormulaParseError(f"unexpected token {value or 'end of input'!r}", pos)


def parse_formula(text: str) -> Formula:
    parser = _Parser(text)
    phi = parser.formula()
    k, v, p = parser.peek()
    if k != "eof":
        raise FormulaParseError(f"trailing input {v!r}", p)
    return phi


def format_formula(phi: Formula) -> str:
    match phi:
        case Bottom():
            return "bot"
        case Top():
            return "top"
        case Eq(x, y):
            return f"{x} = {y}"
        case Edge(x, y):
            return f"E({x},{y})"
        case Not(body):
            return f"not {format_formula(body)}"
        case And(l, r):
            return f"({format_formula(l)} and {format_formula(r)})"
        case Or(l, r):
            return f"({format_formula(l)} or {format_formula(r)})"
        case Exists(v, body):
            return f"exists {v}. {format_formula(body)}"
        case Forall(v, body):
            return f"forall {v}. {format_formula(body)}"
        case CountExists(k, v, body):
            return f"exists>={k} {v}. {format_formula(body)}"
    raise TypeError(f"not a formula node: {phi!r}")


def free_variables(phi: Formula) -> frozenset[str]:
    match phi:
        case Bottom() | Top():
            return frozenset()
        case Eq(x, y) | Edge(x, y):
            return frozenset((x, y))
        case Not(body):
            return free_variables(body)
        case And(l, r) | Or(l, r):
            return free_variables(l) | free_variables(r)
        case Exists(v, body) | Forall(v, body) | CountExists(_, v, body):
            return free_variables(body) - {v}
    raise TypeError(f"not a formula node: {phi!r}")


def all_variables(phi: Formula) -> frozenset[str]:
    match phi:
        case Bottom() | Top():
            return frozenset()
        case Eq(x, y) | Edge(x, y):
            return frozenset((x, y))
        case Not(body):
            return all_variables(body)
        case And(l, r) | Or(l, r):
            return all_variables(l) | all_variables(r)
        case Exists(v, body) | Forall(v, body) | CountExists(_, v, body):
            return all_variables(body) | {v}
    raise TypeError(f"not a formula node: {phi!r}")


def quantifier_depth(phi: Formula) -> int:
    match phi:
        case Bottom() | Top() | Eq(_, _) | Edge(_, _):
            return 0
        case Not(body):
            return quantifier_depth(body)
        case And(l, r) | Or(l, r):
            return max(quantifier_depth(l), quantifier_depth(r))
        case Exists(_, body) | Forall(_, body) | CountExists(_, _, body):
            return 1 + quantifier_depth(body)
    raise TypeError(f"not a formula node: {phi!r}")


def is_sentence(phi: Formula) -> bool:
    return not free_variables(phi)


def complement_formula(phi: Formula) -> Formula:
    """Partner formula whose truth on the complement graph mirrors phi's."""
    match phi:
        case Edge(x, y):
            return And(Not(Edge(x, y)), Not(Eq(x, y)))
        case Bottom() | Top() | Eq(_, _):
            return phi
        case Not(body):
            return Not(complement_formula(body))
        case And(l, r):
            return And(complement_formula(l), complement_formula(r))
        case Or(l, r):
            return Or(complement_formula(l), complement_formula(r))
        case Exists(v, body):
            return Exists(v, complement_formula(body))
        case Forall(v, body):
            return Forall(v, complement_formula(body))
        case CountExists(k, v, body):
            return CountExists(k, v, complement_formula(body))
    raise TypeError(f"not a formula node: {phi!r}")


_MISSING = object()


def evaluate(g: Graph, phi: Formula, assignment: Optional[Mapping[str, int]] = None) -> bool:
    """Tarskian truth of phi in g under the given assignment of free variables."""
    env = dict(assignment or {})
    missing = free_variables(phi) - env.keys()
    if missing:
        raise ValueError(f"assignment does not cover free variable(s) {sorted(missing)}")
    for var, val in env.items():
        if not 0 <= val < g.n:
            raise ValueError(f"assignment maps {var} to {val}, outside 0..{g.n - 1}")
    return _eval(g, phi, env)


def _eval(g: Graph, phi: Formula, env: dict[str, int]) -> bool:
    match phi:
        case Bottom():
            return False
        case Top():
            return True
        case Eq(x, y):
            return env[x] == env[y]
        case Edge(x, y):
            return g.has_edge(env[x], env[y])
        case Not(body):
            return not _eval(g, body, env)
        case And(l, r):
            return _eval(g, l, env) and _eval(g, r, env)
        case Or(l, r):
            return _eval(g, l, env) or _eval(g, r, env)
        case Exists(v, body):
            old = env.get(v, _MISSING)
            try:
                for val in range(g.n):
                    env[v] = val
                    if _eval(g, body, env):
                        return True
                return False
            finally:
                _restore(env, v, old)
        case Forall(v, body):
            old = env.get(v, _MISSING)
            try:
                for val in range(g.n):
                    env[v] = val
                    if not _eval(g, body, env):
                        return False
                return True
            finally:
                _restore(env, v, old)
        case CountExists(k, v, body):
            old = env.get(v, _MISSING)
            try:
                found = 0
                for val in range(g.n):
                    env[v] = val
                    if _eval(g, body, env):
                        found += 1
                        if found >= k:
                            return True
                return False
            finally:
                _restore(env, v, old)
    raise TypeError(f"not a formula node: {phi!r}")


def _restore(env: dict, var: str, old) -> None:
    if old is _MISSING:
        env.pop(var, None)
    else:
        env[var] = old


def l_equivalent(g: Graph, h: Graph, sentences: Sequence[Formula]) -> Optional[Formula]:
    """First sentence with different truth on g and h, or None when equivalent."""
    for phi in sentences:
        if not is_sentence(phi):
            raise ValueError(f"not a sentence (free variables): {format_formula(phi)}")
        if evaluate(g, phi) != evaluate(h, phi):
            return phi
    return None


@dataclass(frozen=True)
class SelfComplementarityReport:
    formulas: int
    checks: int
    counterexample: Optional[tuple[Formula, Graph, tuple[tuple[str, int], ...]]]

    @property
    def passed(self) -> bool:
        return self.counterexample is None


def check_self_complementarity(
    corpus: Sequence[Formula], max_n: int
) -> SelfComplementarityReport:
    """Exhaustively confirm: g,v |= phi  iff  complement(g),v |= transform(phi).

    Runs over every simple graph with at most max_n vertices and every
    assignment of the free variables.
    """
    if max_n > 5:
        raise SizeBoundError("self-complementarity check supports max_n <= 5")
    checks = 0
    for phi in corpus:
        fv = sorted(free_variables(phi))
        if len(fv) > 3:
            raise SizeBoundError("self-complementarity check supports <= 3 free variables")
        phibar = complement_formula(phi)
        for n in range(max_n + 1):
            for g in all_simple_graphs(n):
                gc = complement(g)
                for values in product(range(n), repeat=len(fv)):
                    env = dict(zip(fv, values))
                    checks += 1
                    if evaluate(g, phi, env) != evaluate(gc, phibar, env):
                        return SelfComplementarityReport(
                            len(corpus), checks, (phi, g, tuple(zip(fv, values)))
                        )
    return SelfComplementarityReport(len(corpus), checks, None)


# Built-in corpus: every constructor appears, free variables stay <= 2.
DEFAULT_CORPUS: tuple[str, ...] = (
    "bot",
    "top",
    "x = y",
    "E(x,y)",
    "not E(x,y)",
    "(E(x,y) and x = y)",
    "(E(x,y) or x = y)",
    "exists x. E(x,y)",
    "forall x. (E(x,y) or x = y)",
    "exists x. exists y. E(x,y)",
    "forall x. forall y. ((x = y) or E(x,y))",
    "exists>=2 x. E(x,y)",
    "exists>=3 x. exists y. E(x,y)",
    "exists x. not exists y. E(x,y)",
    "forall x. exists y. E(x,y)",
    "exists x. exists y. (not x = y and not E(x,y))",
    "exists>=2 x. exists>=2 y. E(x,y)",
    "exists x. E(x,x)",
    "forall x. (x = x and top)",
    "exists>=1 x. (E(x,y) or not x = x)",
)


def default_corpus() -> list[Formula]:
    return [parse_formula(text) for text in DEFAULT_CORPUS]
