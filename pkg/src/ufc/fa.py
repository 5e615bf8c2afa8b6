"""Deterministic and nondeterministic finite automata.

States are the integers ``0 .. state_count - 1``.  Transition tables are
stored per letter: ``delta[i][q]`` is the target of state ``q`` on
``alphabet[i]``.  A DFA entry of ``UNDEFINED`` marks an absent transition
(a partial DFA); an NFA entry is a frozenset of targets.

Every value is immutable and every operation returns a new automaton.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import AlphabetError, CapacityError, PreconditionError

UNDEFINED = -1

#: Largest number of source states the subset construction accepts.
SUBSET_CAPACITY = 64


def check_alphabet(alphabet: Iterable[str]) -> tuple[str, ...]:
    """Validate an alphabet and return it as a tuple.

    Letters must be single characters listed in strictly increasing
    character-code order, which also rules out duplicates.
    """
    alphabet = tuple(alphabet)
    for letter in alphabet:
        if not isinstance(letter, str) or len(letter) != 1 or not letter.isprintable():
            raise AlphabetError(f"letter {letter!r} is not a single printable character")
    for x, y in zip(alphabet, alphabet[1:]):
        if not x < y:
            raise AlphabetError(f"alphabet {alphabet!r} is not strictly increasing at {x!r}, {y!r}")
    return alphabet


def merge_alphabets(*alphabets: Iterable[str]) -> tuple[str, ...]:
    return tuple(sorted(set().union(*map(set, alphabets))))


@dataclass(frozen=True)
class Dfa:
    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    finals: frozenset[int]

    def __post_init__(self):
        n = self.state_count
        if n < 1:
            raise PreconditionError("a DFA needs at least one state")
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "delta", tuple(tuple(row) for row in self.delta))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if len(self.delta) != len(self.alphabet):
            raise PreconditionError("one transition row per letter is required")
        for letter, row in zip(self.alphabet, self.delta):
            if len(row) != n:
                raise PreconditionError(f"row for {letter!r} has {len(row)} entries, expected {n}")
            for t in row:
                if t != UNDEFINED and not 0 <= t < n:
                    raise PreconditionError(f"transition target {t} out of range on {letter!r}")
        if not 0 <= self.initial < n:
            raise PreconditionError(f"initial state {self.initial} out of range")
        for f in self.finals:
            if not 0 <= f < n:
                raise PreconditionError(f"final state {f} out of range")

    @classmethod
    def from_dict(cls, state_count, transitions, initial=0, finals=()):
        """Build from ``{letter: [target per state]}``; letters are sorted."""
        alphabet = tuple(sorted(transitions))
        return cls(state_count, alphabet, tuple(transitions[x] for x in alphabet),
                   initial, frozenset(finals))

    def index(self, letter: str) -> int:
        try:
            return self.alphabet.index(letter)
        except ValueError:
            raise AlphabetError(f"letter {letter!r} not in alphabet {self.alphabet!r}") from None

    def step(self, q: int, letter: str) -> int:
        """Target of ``q`` on ``letter``; ``UNDEFINED`` for absent or foreign."""
        if q == UNDEFINED or letter not in self.alphabet:
            return UNDEFINED
        return self.delta[self.alphabet.index(letter)][q]

    def run(self, word, start: int | None = None) -> int:
        q = self.initial if start is None else start
        for letter in word:
            q = self.step(q, letter)
            if q == UNDEFINED:
                break
        return q

    @property
    def is_complete(self) -> bool:
        return all(t != UNDEFINED for row in self.delta for t in row)

    def with_initial(self, q: int) -> Dfa:
        return Dfa(self.state_count, self.alphabet, self.delta, q, self.finals)

    def with_finals(self, finals: Iterable[int]) -> Dfa:
        return Dfa(self.state_count, self.alphabet, self.delta, self.initial, frozenset(finals))

    def to_nfa(self) -> Nfa:
        delta = tuple(tuple(frozenset() if t == UNDEFINED else frozenset((t,)) for t in row)
                      for row in self.delta)
        return Nfa(self.state_count, self.alphabet, delta, frozenset((self.initial,)), self.finals)


@dataclass(frozen=True)
class Nfa:
    state_count: int
    alphabet: tuple[str, ...]
    delta: tuple[tuple[frozenset[int], ...], ...]
    initials: frozenset[int]
    finals: frozenset[int]

    def __post_init__(self):
        n = self.state_count
        if n < 1:
            raise PreconditionError("an NFA needs at least one state")
        object.__setattr__(self, "alphabet", check_alphabet(self.alphabet))
        object.__setattr__(self, "delta",
                           tuple(tuple(frozenset(ts) for ts in row) for row in self.delta))
        object.__setattr__(self, "initials", frozenset(self.initials))
        object.__setattr__(self, "finals", frozenset(self.finals))
        if len(self.delta) != len(self.alphabet):
            raise PreconditionError("one transition row per letter is required")
        for letter, row in zip(self.alphabet, self.delta):
            if len(row) != n:
                raise PreconditionError(f"row for {letter!r} has {len(row)} entries, expected {n}")
            for ts in row:
                if any(not 0 <= t < n for t in ts):
                    raise PreconditionError(f"transition target out of range on {letter!r}")
        if any(not 0 <= q < n for q in self.initials | self.finals):
            raise PreconditionError("initial or final state out of range")

    @classmethod
    def from_edges(cls, state_count, alphabet, edges, initials, finals):
        """Build from an iterable of ``(source, letter, target)`` triples."""
        alphabet = check_alphabet(alphabet)
        table = [[set() for _ in range(state_count)] for _ in alphabet]
        for p, letter, q in edges:
            try:
                i = alphabet.index(letter)
            except ValueError:
                raise AlphabetError(f"letter {letter!r} not in alphabet {alphabet!r}") from None
            table[i][p].add(q)
        return cls(state_count, alphabet, table, frozenset(initials), frozenset(finals))

    def successors(self, states: Iterable[int], letter: str) -> frozenset[int]:
        if letter not in self.alphabet:
            return frozenset()
        row = self.delta[self.alphabet.index(letter)]
        return frozenset().union(*(row[q] for q in states))


def accepts(a: Dfa | Nfa, word) -> bool:
    """Membership test; foreign letters reject (dead state / empty set)."""
    if isinstance(a, Dfa):
        q = a.run(word)
        return q != UNDEFINED and q in a.finals
    current = a.initials
    for letter in word:
        current = a.successors(current, letter)
        if not current:
            return False
    return bool(current & a.finals)


def reachable_states(d: Dfa) -> list[int]:
    """States reachable from the initial state, in canonical BFS order."""
    seen = {d.initial}
    order = [d.initial]
    queue = deque(order)
    while queue:
        q = queue.popleft()
        for row in d.delta:
            t = row[q]
            if t != UNDEFINED and t not in seen:
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def complete(d: Dfa, over: Iterable[str] | None = None) -> Dfa:
    """Complete ``d`` over the alphabet ``over`` (default: its own alphabet).

    If ``d`` is already complete over ``over`` it is returned unchanged.
    Otherwise one non-final sink is appended and every absent transition,
    including those on letters new to ``d``, is sent to it.
    """
    over = d.alphabet if over is None else check_alphabet(over)
    missing = set(d.alphabet) - set(over)
    if missing:
        raise AlphabetError(f"letters {sorted(missing)} of the automaton are not in {over!r}")
    if over == d.alphabet and d.is_complete:
        return d
    sink = d.state_count
    rows = []
    for letter in over:
        if letter in d.alphabet:
            row = d.delta[d.alphabet.index(letter)]
            rows.append(tuple(sink if t == UNDEFINED else t for t in row) + (sink,))
        else:
            rows.append((sink,) * (sink + 1))
    return Dfa(sink + 1, over, tuple(rows), d.initial, d.finals)


def restrict(d: Dfa, letters: Iterable[str]) -> Dfa:
    """Drop every letter not in ``letters`` (words using them are deleted)."""
    keep = set(letters)
    alphabet = tuple(x for x in d.alphabet if x in keep)
    rows = tuple(d.delta[d.alphabet.index(x)] for x in alphabet)
    return Dfa(d.state_count, alphabet, rows, d.initial, d.finals)


def determinize(n: Nfa) -> Dfa:
    """Accessible subset construction with canonical numbering.

    State 0 is the initial subset; the others are numbered in BFS discovery
    order, letters explored in alphabet order.  The result is complete; the
    empty subset appears as a sink only when it is reachable.
    """
    if n.state_count > SUBSET_CAPACITY:
        raise CapacityError(
            f"subset construction over {n.state_count} states exceeds the limit of {SUBSET_CAPACITY}")
    masks = [[sum(1 << t for t in ts) for ts in row] for row in n.delta]
    final_mask = sum(1 << q for q in n.finals)
    start = sum(1 << q for q in n.initials)
    index = {start: 0}
    order = [start]
    rows: list[list[int]] = [[] for _ in n.alphabet]
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for i, letter_masks in enumerate(masks):
            image = 0
            s = subset
            while s:
                low = s & -s
                image |= letter_masks[low.bit_length() - 1]
                s ^= low
            target = index.get(image)
            if target is None:
                target = index[image] = len(order)
                order.append(image)
                queue.append(image)
            rows[i].append(target)
    finals = frozenset(k for k, s in enumerate(order) if s & final_mask)
    return Dfa(len(order), n.alphabet, tuple(map(tuple, rows)), 0, finals)


def subset_states(n: Nfa) -> list[frozenset[int]]:
    """The subsets behind ``determinize(n)``'s states, indexed by state."""
    start = n.initials
    index = {start: 0}
    order = [start]
    queue = deque([start])
    while queue:
        subset = queue.popleft()
        for letter in n.alphabet:
            image = n.successors(subset, letter)
            if image not in index:
                index[image] = len(order)
                order.append(image)
                queue.append(image)
    return order


def canonical(d: Dfa) -> Dfa:
    """Renumber reachable states in BFS order and drop the unreachable ones."""
    order = reachable_states(d)
    new = {q: k for k, q in enumerate(order)}
    rows = tuple(tuple(UNDEFINED if row[q] == UNDEFINED else new[row[q]] for q in order)
                 for row in d.delta)
    finals = frozenset(new[q] for q in order if q in d.finals)
    return Dfa(len(order), d.alphabet, rows, 0, finals)


def _hopcroft(n: int, delta: Sequence[Sequence[int]], finals: frozenset[int]) -> list[int]:
    """Partition refinement on a complete DFA; returns a block id per state."""
    inverse = []
    for row in delta:
        inv: list[list[int]] = [[] for _ in range(n)]
        for q, t in enumerate(row):
            inv[t].append(q)
        inverse.append(inv)

    accepting = set(finals)
    rejecting = set(range(n)) - accepting
    blocks = [b for b in (accepting, rejecting) if b]
    block_of = [0] * n
    for k, b in enumerate(blocks):
        for q in b:
            block_of[q] = k
    if len(blocks) < 2:
        return block_of

    pending = {0 if len(blocks[0]) <= len(blocks[1]) else 1}
    while pending:
        splitter = tuple(blocks[pending.pop()])
        for inv in inverse:
            touched: dict[int, list[int]] = {}
            for t in splitter:
                for q in inv[t]:
                    touched.setdefault(block_of[q], []).append(q)
            for b, hit in touched.items():
                block = blocks[b]
                if len(hit) == len(block):
                    continue
                new_block = set(hit)
                block -= new_block
                k = len(blocks)
                blocks.append(new_block)
                for q in new_block:
                    block_of[q] = k
                if b in pending or len(new_block) <= len(block):
                    pending.add(k)
                else:
                    pending.add(b)
    return block_of


def minimize(d: Dfa) -> Dfa:
    """The minimal complete DFA of ``L(d)``, canonically numbered."""
    d = canonical(complete(d))
    block_of = _hopcroft(d.state_count, d.delta, d.finals)
    quotient = Dfa(
        max(block_of) + 1,
        d.alphabet,
        tuple(_collapse(row, block_of) for row in d.delta),
        block_of[d.initial],
        frozenset(block_of[q] for q in d.finals),
    )
    return canonical(quotient)


def _collapse(row, block_of):
    out = [0] * (max(block_of) + 1)
    for q, t in enumerate(row):
        out[block_of[q]] = block_of[t]
    return tuple(out)


def complexity(d: Dfa) -> int:
    """State complexity: the number of states of the minimal complete DFA."""
    return minimize(d).state_count


def is_minimal(d: Dfa) -> bool:
    return d.is_complete and complexity(d) == d.state_count


def equivalent(a1: Dfa | Nfa, a2: Dfa | Nfa) -> str | None:
    """``None`` if the languages agree, else a shortlex-least word on which they differ.

    NFAs are determinized on the fly with unbounded bit sets, so the subset
    capacity of ``determinize`` does not apply here.
    """
    sigma = merge_alphabets(a1.alphabet, a2.alphabet)
    start1, step1, final1 = _explorer(a1, sigma)
    start2, step2, final2 = _explorer(a2, sigma)
    start = (start1, start2)
    parent: dict[tuple[int, int], tuple[tuple[int, int], str] | None] = {start: None}
    queue = deque([start])
    while queue:
        pair = queue.popleft()
        p, q = pair
        if final1(p) != final2(q):
            word = []
            while parent[pair] is not None:
                pair, letter = parent[pair]
                word.append(letter)
            return "".join(reversed(word))
        for i, letter in enumerate(sigma):
            nxt = (step1(p, i), step2(q, i))
            if nxt not in parent:
                parent[nxt] = (pair, letter)
                queue.append(nxt)
    return None


def _explorer(a: Dfa | Nfa, sigma: tuple[str, ...]):
    # (start, step(state, letter index), is_final) over sigma
    if isinstance(a, Dfa):
        d = complete(a, sigma)
        return d.initial, lambda q, i: d.delta[i][q], d.finals.__contains__
    masks = [[sum(1 << t for t in ts) for ts in a.delta[a.alphabet.index(x)]] if x in a.alphabet
             else [0] * a.state_count for x in sigma]
    final_mask = sum(1 << q for q in a.finals)

    def step(subset, i):
        image, row = 0, masks[i]
        while subset:
            low = subset & -subset
            image |= row[low.bit_length() - 1]
            subset ^= low
        return image

    return sum(1 << q for q in a.initials), step, lambda s: bool(s & final_mask)


def isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Compare two minimal complete DFAs by their canonical numbering."""
    for d in (d1, d2):
        if not is_minimal(d):
            raise PreconditionError("isomorphic() requires minimal complete DFAs")
    return canonical(d1) == canonical(d2)


def quotient(d: Dfa, word) -> Dfa:
    """DFA for the left quotient ``word^-1 L(d)``."""
    d = complete(d)
    q = d.initial
    for letter in word:
        q = d.delta[d.index(letter)][q]
    return d.with_initial(q)


def quotient_complexities(d: Dfa) -> tuple[int, ...]:
    """Complexity of the language of each reachable state, in state order."""
    d = complete(d)
    return tuple(complexity(d.with_initial(q)) for q in sorted(reachable_states(d)))


def language_alphabet(d: Dfa) -> tuple[str, ...]:
    """Letters occurring in at least one word of ``L(d)``."""
    reachable = set(reachable_states(d))
    coreachable = set(d.finals)
    changed = True
    while changed:
        changed = False
        for row in d.delta:
            for p, q in enumerate(row):
                if q in coreachable and p not in coreachable:
                    coreachable.add(p)
                    changed = True
    return tuple(letter for letter, row in zip(d.alphabet, d.delta)
                 if any(row[p] in coreachable for p in reachable))
