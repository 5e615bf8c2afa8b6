"""Reversal, star, product and boolean operations with construction statistics.

Each operation builds an epsilon-free automaton in the same shape as the
classical proofs (subset automaton or direct product), records its raw
size, and returns the minimal DFA together with the regular-language upper
bound for the operand complexities.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import AlphabetError
from .fa import (Dfa, Nfa, UNDEFINED, complete, complexity, determinize,
                 language_alphabet, merge_alphabets, minimize, restrict)

RESTRICTED = "restricted"
UNRESTRICTED = "unrestricted"


@dataclass(frozen=True)
class BoolOp:
    """Binary boolean operation given by its truth table.

    ``table[2 * x + y]`` is the value for (x in first, y in second).
    """

    name: str
    table: tuple[bool, bool, bool, bool]

    def __call__(self, x: bool, y: bool) -> bool:
        return self.table[2 * bool(x) + bool(y)]

    @property
    def is_proper(self) -> bool:
        depends_on_first = any(self(False, y) != self(True, y) for y in (False, True))
        depends_on_second = any(self(x, False) != self(x, True) for x in (False, True))
        return depends_on_first and depends_on_second

    def __str__(self):
        return self.name


UNION = BoolOp("union", (False, True, True, True))
INTERSECTION = BoolOp("intersection", (False, False, False, True))
DIFFERENCE = BoolOp("difference", (False, False, True, False))
SYMMETRIC_DIFFERENCE = BoolOp("symmetric-difference", (False, True, True, False))

PROPER_OPS = (UNION, INTERSECTION, DIFFERENCE, SYMMETRIC_DIFFERENCE)

BOOL_OPS = {
    "union": UNION, "intersect": INTERSECTION, "intersection": INTERSECTION,
    "diff": DIFFERENCE, "difference": DIFFERENCE,
    "symdiff": SYMMETRIC_DIFFERENCE, "symmetric-difference": SYMMETRIC_DIFFERENCE,
}


@dataclass(frozen=True)
class OpResult:
    result: Dfa
    raw_states: int
    construction: str
    bound: int | None = None

    @property
    def complexity(self) -> int:
        return self.result.state_count

    @property
    def within_bound(self) -> bool:
        return self.bound is None or self.complexity <= self.bound


# Upper bounds for regular languages of complexities m and n.

def reversal_bound(n: int) -> int:
    return 2 ** n


def star_bound(n: int) -> int:
    # the star of the empty language is {eps}, which needs two states
    return 2 if n == 1 else 2 ** (n - 1) + 2 ** (n - 2)


def product_bound(m: int, n: int, mode: str = RESTRICTED) -> int:
    if mode == RESTRICTED:
        return (m - 1) * 2 ** n + 2 ** (n - 1)
    return m * 2 ** n + 2 ** (n - 1)


def boolean_bound(m: int, n: int, op: BoolOp, mode: str = RESTRICTED) -> int:
    if mode == RESTRICTED:
        return m * n
    if op in (UNION, SYMMETRIC_DIFFERENCE):
        return (m + 1) * (n + 1)
    if op == DIFFERENCE:
        return m * n + m
    return m * n


def reverse_nfa(d: Dfa) -> Nfa:
    """Reverse every transition; finals become initials and vice versa."""
    table = [[set() for _ in range(d.state_count)] for _ in d.alphabet]
    for i, row in enumerate(d.delta):
        for p, q in enumerate(row):
            if q != UNDEFINED:
                table[i][q].add(p)
    return Nfa(d.state_count, d.alphabet, table, d.finals, frozenset((d.initial,)))


def reverse(d: Dfa) -> OpResult:
    raw = determinize(reverse_nfa(d))
    return OpResult(minimize(raw), raw.state_count, "reverse", reversal_bound(complexity(d)))


def brzozowski_minimize(d: Dfa) -> Dfa:
    """Minimal DFA by double reversal; independent of partition refinement."""
    once = determinize(reverse_nfa(complete(d)))
    return determinize(reverse_nfa(once))


def star_nfa(d: Dfa) -> Nfa:
    """Epsilon-free NFA for L(d)*.

    A new state s = n is initial and final and copies the outgoing
    transitions of the initial state.  Every transition into a final state
    gets a twin into the initial state.
    """
    n = d.state_count
    table = [[set() for _ in range(n + 1)] for _ in d.alphabet]
    for i, row in enumerate(d.delta):
        for p, q in enumerate(row):
            if q == UNDEFINED:
                continue
            table[i][p].add(q)
            if q in d.finals:
                table[i][p].add(d.initial)
        table[i][n] = set(table[i][d.initial])
    return Nfa(n + 1, d.alphabet, table, {n}, d.finals | {n})


def star(d: Dfa) -> OpResult:
    raw = determinize(star_nfa(d))
    return OpResult(minimize(raw), raw.state_count, "star", star_bound(complexity(d)))


def product_nfa(d1: Dfa, d2: Dfa, mode: str = RESTRICTED) -> Nfa:
    """Epsilon-free NFA for L(d1)L(d2).

    States 0..m-1 are d1's, m..m+n-1 are d2's.  d1's finals become
    non-final; each d1 transition into a final state also enters d2's
    initial state.  In unrestricted mode a letter missing from an operand
    simply has no transitions in that operand's part.
    """
    sigma = _operation_alphabet(d1, d2, mode)
    m, n = d1.state_count, d2.state_count
    table = [[set() for _ in range(m + n)] for _ in sigma]
    for i, letter in enumerate(sigma):
        if letter in d1.alphabet:
            for p, q in enumerate(d1.delta[d1.alphabet.index(letter)]):
                if q == UNDEFINED:
                    continue
                table[i][p].add(q)
                if q in d1.finals:
                    table[i][p].add(m + d2.initial)
        if letter in d2.alphabet:
            for p, q in enumerate(d2.delta[d2.alphabet.index(letter)]):
                if q != UNDEFINED:
                    table[i][m + p].add(m + q)
    initials = {d1.initial} | ({m + d2.initial} if d1.initial in d1.finals else set())
    return Nfa(m + n, sigma, table, initials, {m + f for f in d2.finals})


def concat(d1: Dfa, d2: Dfa, mode: str = RESTRICTED) -> OpResult:
    raw = determinize(product_nfa(d1, d2, mode))
    bound = product_bound(complexity(d1), complexity(d2), mode)
    return OpResult(_minimal_result(raw, mode), raw.state_count, f"concat/{mode}", bound)


def direct_product(d1: Dfa, d2: Dfa, op: BoolOp, mode: str = RESTRICTED) -> tuple[Dfa, list]:
    """Reachable part of the direct product; also returns the state pairs."""
    sigma = _operation_alphabet(d1, d2, mode)
    if mode == UNRESTRICTED:
        d1, d2 = complete(d1, sigma), complete(d2, sigma)
    else:
        d1, d2 = complete(d1), complete(d2)
    start = (d1.initial, d2.initial)
    index = {start: 0}
    pairs = [start]
    rows: list[list[int]] = [[] for _ in sigma]
    queue = deque([start])
    while queue:
        p, q = queue.popleft()
        for i in range(len(sigma)):
            nxt = (d1.delta[i][p], d2.delta[i][q])
            k = index.get(nxt)
            if k is None:
                k = index[nxt] = len(pairs)
                pairs.append(nxt)
                queue.append(nxt)
            rows[i].append(k)
    finals = {k for k, (p, q) in enumerate(pairs) if op(p in d1.finals, q in d2.finals)}
    return Dfa(len(pairs), sigma, tuple(map(tuple, rows)), 0, finals), pairs


def boolean(d1: Dfa, d2: Dfa, op: BoolOp, mode: str = RESTRICTED) -> OpResult:
    raw, _ = direct_product(d1, d2, op, mode)
    bound = boolean_bound(complexity(d1), complexity(d2), op, mode)
    return OpResult(_minimal_result(raw, mode), raw.state_count, f"{op.name}/{mode}", bound)


def _minimal_result(raw: Dfa, mode: str) -> Dfa:
    # unrestricted results live over the alphabet of the result language,
    # e.g. an intersection never needs the letters private to one operand
    result = minimize(raw)
    if mode == UNRESTRICTED:
        result = minimize(restrict(result, language_alphabet(result)))
    return result


def _operation_alphabet(d1: Dfa, d2: Dfa, mode: str) -> tuple[str, ...]:
    if mode == RESTRICTED:
        if d1.alphabet != d2.alphabet:
            raise AlphabetError(
                f"restricted operation needs equal alphabets, got {d1.alphabet} and {d2.alphabet}")
        return d1.alphabet
    if mode != UNRESTRICTED:
        raise ValueError(f"mode must be {RESTRICTED!r} or {UNRESTRICTED!r}, not {mode!r}")
    return merge_alphabets(d1.alphabet, d2.alphabet)
