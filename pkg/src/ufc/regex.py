"""Regular expression trees, union elimination, and the position automaton."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import AutomatonError
from .fa import Nfa, check_alphabet


class Regex:
    """Base class of expression nodes."""

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class Empty(Regex):
    pass


@dataclass(frozen=True)
class Epsilon(Regex):
    pass


@dataclass(frozen=True)
class Letter(Regex):
    symbol: str


@dataclass(frozen=True)
class Union(Regex):
    children: tuple[Regex, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a union node needs at least two children")


@dataclass(frozen=True)
class Concat(Regex):
    children: tuple[Regex, ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise ValueError("a concat node needs at least two children")


@dataclass(frozen=True)
class Star(Regex):
    child: Regex


EMPTY = Empty()
EPSILON = Epsilon()


def letter(symbol: str) -> Letter:
    return Letter(symbol)


def union(*children: Regex) -> Regex:
    if not children:
        return EMPTY
    return children[0] if len(children) == 1 else Union(tuple(children))


def concat(*children: Regex) -> Regex:
    if not children:
        return EPSILON
    return children[0] if len(children) == 1 else Concat(tuple(children))


def star(child: Regex) -> Star:
    return Star(child)


class NotEliminable(AutomatonError):
    """A union is not dominated by any star."""


def count_unions(r: Regex) -> int:
    if isinstance(r, Union):
        return 1 + sum(map(count_unions, r.children))
    if isinstance(r, Concat):
        return sum(map(count_unions, r.children))
    if isinstance(r, Star):
        return count_unions(r.child)
    return 0


def eliminate_unions(r: Regex) -> Regex:
    """Remove every union using (E1 u ... u Ek)* = (E1* ... Ek*)*.

    Works bottom-up.  Below a star, concatenation is distributed over union
    (X(Y u Z) = XY u XZ) so that all alternatives surface directly under
    the star before the identity is applied.  A union that no star
    dominates cannot be removed and raises ``NotEliminable``.
    """
    alternatives = _alternatives(r)
    if len(alternatives) != 1:
        raise NotEliminable(f"union not under a star in {render(r)}")
    return alternatives[0]


def _alternatives(r: Regex) -> list[Regex]:
    # union-free expressions whose union is r
    if isinstance(r, Union):
        return [alt for child in r.children for alt in _alternatives(child)]
    if isinstance(r, Concat):
        parts = [_alternatives(child) for child in r.children]
        return [concat(*combo) for combo in itertools.product(*parts)]
    if isinstance(r, Star):
        alts = _alternatives(r.child)
        if len(alts) == 1:
            return [star(alts[0])]
        return [star(concat(*(star(a) for a in alts)))]
    return [r]


def nullable(r: Regex) -> bool:
    if isinstance(r, (Epsilon, Star)):
        return True
    if isinstance(r, Union):
        return any(map(nullable, r.children))
    if isinstance(r, Concat):
        return all(map(nullable, r.children))
    return False


def letters(r: Regex) -> frozenset[str]:
    if isinstance(r, Letter):
        return frozenset(r.symbol)
    if isinstance(r, (Union, Concat)):
        return frozenset().union(*map(letters, r.children))
    if isinstance(r, Star):
        return letters(r.child)
    return frozenset()


def regex_to_nfa(r: Regex, alphabet=None) -> Nfa:
    """Glushkov position automaton: state 0 is initial, state k is position k.

    The result is epsilon-free; state 0 is final iff ``r`` is nullable.
    """
    alphabet = tuple(sorted(letters(r))) if alphabet is None else check_alphabet(alphabet)
    symbols: list[str] = [""]
    follow: list[set[int]] = [set()]

    def walk(node):
        # returns (nullable, first, last)
        if isinstance(node, Letter):
            symbols.append(node.symbol)
            follow.append(set())
            k = len(symbols) - 1
            return False, {k}, {k}
        if isinstance(node, Empty):
            return False, set(), set()
        if isinstance(node, Epsilon):
            return True, set(), set()
        if isinstance(node, Star):
            _, first, last = walk(node.child)
            for p in last:
                follow[p] |= first
            return True, first, last
        if isinstance(node, Union):
            results = [walk(c) for c in node.children]
            return (any(x[0] for x in results), set().union(*(x[1] for x in results)),
                    set().union(*(x[2] for x in results)))
        if isinstance(node, Concat):
            null, first, last = True, set(), set()
            for c in node.children:
                c_null, c_first, c_last = walk(c)
                for p in last:
                    follow[p] |= c_first
                if null:
                    first |= c_first
                last = (last | c_last) if c_null else c_last
                null = null and c_null
            return null, first, last
        raise TypeError(f"not a regex node: {node!r}")

    null, first, last = walk(r)
    follow[0] = first
    edges = [(p, symbols[q], q) for p in range(len(symbols)) for q in follow[p]]
    finals = set(last) | ({0} if null else set())
    return Nfa.from_edges(len(symbols), alphabet, edges, {0}, finals)


_PRECEDENCE = {Union: 0, Concat: 1, Star: 2}


def render(r: Regex, union_symbol: str = "|") -> str:
    """Text form: juxtaposition for concatenation, ``*`` for star."""

    def go(node, context):
        if isinstance(node, Letter):
            return node.symbol
        if isinstance(node, Empty):
            return "∅"
        if isinstance(node, Epsilon):
            return "ε"
        level = _PRECEDENCE[type(node)]
        if isinstance(node, Star):
            text = go(node.child, 3) + "*"
        elif isinstance(node, Union):
            text = union_symbol.join(go(c, 1) for c in node.children)
        else:
            text = "".join(go(c, 2) for c in node.children)
        return f"({text})" if level < context else text

    return go(r, 0)
