"""Witness automata D_n(a,b,c,d), their dialects, and the OCFP check.

The four letter roles act on Q_n = {0, ..., n-1} as

    a: the cycle (1, 2, ..., n-1)
    b: the transposition (0, 1)
    c: the send (1 -> 0)
    d: the identity

with initial state 0 and the single final state n-1.  A dialect assigns a
letter (or nothing) to each role, written like ``"a,b,-,c"``.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import regex as rx
from .errors import AlphabetError, PreconditionError
from .fa import UNDEFINED, Dfa

ROLES = ("a", "b", "c", "d")


@dataclass(frozen=True)
class Dialect:
    """Letter assigned to each of the roles a, b, c, d (``None`` = deleted)."""

    slots: tuple[str | None, str | None, str | None, str | None]

    @classmethod
    def parse(cls, text: str) -> Dialect:
        """Parse ``"a,b,-,c"``; missing trailing slots are deleted roles."""
        parts = [p.strip() for p in text.split(",")] if text.strip() else []
        if len(parts) > 4:
            raise AlphabetError(f"dialect {text!r} has more than four slots")
        slots = [None if p in ("-", "") else p for p in parts] + [None] * (4 - len(parts))
        return cls(tuple(slots))

    def __post_init__(self):
        if len(self.slots) != 4:
            raise AlphabetError("a dialect has exactly four slots")
        letters = [x for x in self.slots if x is not None]
        if not letters:
            raise AlphabetError("a dialect must assign at least one letter")
        for x in letters:
            if len(x) != 1 or not x.isprintable() or x in ",-":
                raise AlphabetError(f"invalid dialect letter {x!r}")
        if len(set(letters)) != len(letters):
            raise AlphabetError(f"dialect {self} assigns a letter twice")

    def __str__(self):
        text = ",".join("-" if x is None else x for x in self.slots)
        while text.endswith(",-"):
            text = text[:-2]
        return text


def role_images(role: str, n: int) -> tuple[int, ...]:
    if role == "a":
        return (0,) + tuple(range(2, n)) + (1,)
    if role == "b":
        return (1, 0) + tuple(range(2, n))
    if role == "c":
        return (0, 0) + tuple(range(2, n))
    if role == "d":
        return tuple(range(n))
    raise ValueError(f"unknown role {role!r}")


def make_witness(n: int, dialect: str | Dialect = "a,b,c,d") -> Dfa:
    """The DFA D_n under the given dialect; its alphabet is sorted."""
    if n < 3:
        raise PreconditionError(f"witnesses are defined for n >= 3, got {n}")
    if isinstance(dialect, str):
        dialect = Dialect.parse(dialect)
    table = {letter: role_images(role, n)
             for role, letter in zip(ROLES, dialect.slots) if letter is not None}
    return Dfa.from_dict(n, table, initial=0, finals={n - 1})


def boolean_witness_pair(m: int, n: int) -> tuple[Dfa, Dfa]:
    """D'_m(a,b,-,c) and D_n(b,a,-,d), the pair for unrestricted boolean operations."""
    return make_witness(m, "a,b,-,c"), make_witness(n, "b,a,-,d")


def union_free_regex(n: int) -> rx.Regex:
    """A union-free expression for L_n(a,b,c,d)."""
    return rx.eliminate_unions(ln_regex(n))


def ln_regex(n: int) -> rx.Regex:
    """The expression for L_n with unions, before elimination.

    ``E`` spells the walk 1 -> 2 -> ... -> n-1 along ``a`` with the
    self-loops of the intermediate states, so it leads from 1 to n-1.
    """
    if n < 3:
        raise PreconditionError(f"witnesses are defined for n >= 3, got {n}")
    a, b, c, d = map(rx.letter, "abcd")
    loops = rx.star(rx.union(b, c, d))
    e = rx.concat(*([rx.concat(a, loops)] * (n - 3)), a)
    back_to_1 = rx.star(rx.union(d, rx.concat(e, loops, a)))
    prefix = rx.star(rx.union(rx.union(a, c, d), rx.concat(b, back_to_1, rx.union(b, c))))
    return rx.concat(prefix, b, back_to_1, e, loops)


@dataclass(frozen=True)
class OcfpResult:
    violations: tuple[str, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        return "pass" if self.ok else "; ".join(self.violations)


def ocfp_check(d: Dfa) -> OcfpResult:
    """Check the one-cycle-free-path property.

    There must be exactly one final state, and from every state exactly one
    simple path (no repeated state) to it.  Paths are sequences of labelled
    transitions, so two letters on the same edge give two paths.
    """
    if len(d.finals) != 1:
        return OcfpResult((f"{'multiple' if d.finals else 'no'} finals "
                           f"({len(d.finals)} final states)",))
    (final,) = d.finals
    edges = [[t for row in d.delta if (t := row[q]) != UNDEFINED] for q in range(d.state_count)]
    violations = []
    for q in range(d.state_count):
        count = _count_simple_paths(edges, q, final, limit=2)
        if count == 0:
            violations.append(f"no path from {q} to the final state")
        elif count > 1:
            violations.append(f"two simple paths from {q}")
    return OcfpResult(tuple(violations))


def _count_simple_paths(edges, source, target, limit):
    if source == target:
        return 1
    count = 0
    on_path = {source}
    stack = [(source, iter(edges[source]))]
    while stack:
        q, it = stack[-1]
        t = next(it, None)
        if t is None:
            stack.pop()
            on_path.discard(q)
            continue
        if t == target:
            count += 1
            if count >= limit:
                return count
        elif t not in on_path:
            on_path.add(t)
            stack.append((t, iter(edges[t])))
    return count
