"""Atoms of a regular language.

For the minimal DFA of L with states Q_n, the atom A_S (S a subset of Q_n)
is the set of words w with ``{i : i.w is final} == S``.  All atoms are
recognised by one automaton whose states are the transformations induced
by words (the identity standing for the empty word); only the final
states differ between atoms.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from math import comb

from .errors import CapacityError, PreconditionError
from .fa import Dfa, is_minimal, minimize
from .ops import reverse
from .transforms import default_cap

#: Full atom sweeps refuse larger minimal DFAs unless overridden.
DEFAULT_MAX_N = 6


@dataclass(frozen=True)
class MonoidAutomaton:
    """Transformation automaton of a DFA plus the signature of each state.

    ``signatures[k]`` is the bit set ``{i : i.t_k in F}`` for element ``t_k``.
    """

    dfa: Dfa
    elements: tuple[tuple[int, ...], ...]
    signatures: tuple[int, ...]


def monoid_automaton(d: Dfa, cap: int | None = None) -> MonoidAutomaton:
    if not is_minimal(d):
        raise PreconditionError("atoms are defined on minimal complete DFAs")
    if cap is None:
        cap = default_cap()
    n = d.state_count
    identity = tuple(range(n))
    index = {identity: 0}
    elements = [identity]
    rows: list[list[int]] = [[] for _ in d.alphabet]
    lookups = [row.__getitem__ for row in d.delta]
    queue = deque([identity])
    while queue:
        t = queue.popleft()
        for i, step in enumerate(lookups):
            u = tuple(map(step, t))
            k = index.get(u)
            if k is None:
                if len(elements) >= cap:
                    raise CapacityError(f"transition monoid exceeds the cap of {cap} elements")
                k = index[u] = len(elements)
                elements.append(u)
                queue.append(u)
            rows[i].append(k)
    finals = d.finals
    signatures = tuple(sum(1 << i for i, x in enumerate(t) if x in finals) for t in elements)
    dfa = Dfa(len(elements), d.alphabet, tuple(map(tuple, rows)), 0, frozenset())
    return MonoidAutomaton(dfa, tuple(elements), signatures)


def subset_mask(states) -> int:
    return sum(1 << q for q in set(states))


def mask_states(mask: int) -> tuple[int, ...]:
    return tuple(q for q in range(mask.bit_length()) if mask >> q & 1)


def atom(d: Dfa, states, monoid: MonoidAutomaton | None = None) -> Dfa | None:
    """Minimal DFA of the atom A_S, or ``None`` when the atom is empty."""
    if monoid is None:
        monoid = monoid_automaton(d)
    mask = subset_mask(states)
    if mask >> d.state_count:
        raise PreconditionError(f"atom index {sorted(states)} is not a subset of the states")
    finals = [k for k, sig in enumerate(monoid.signatures) if sig == mask]
    if not finals:
        return None
    return minimize(monoid.dfa.with_finals(finals))


def atom_count(d: Dfa, monoid: MonoidAutomaton | None = None, check: bool = True) -> int:
    """Number of non-empty atoms; cross-checked against the reversal complexity."""
    if monoid is None:
        monoid = monoid_automaton(d)
    count = len(set(monoid.signatures))
    if check:
        expected = reverse(d).complexity
        if count != expected:
            raise AssertionError(f"{count} atoms but the reverse has complexity {expected}")
    return count


def atom_complexity_formula(n: int, s: int) -> int:
    """Maximal complexity of an atom A_S with |S| = s of a language of complexity n."""
    if n < 1 or not 0 <= s <= n:
        raise ValueError(f"need 0 <= s <= n and n >= 1, got n={n}, s={s}")
    if s in (0, n):
        return 2 ** n - 1
    return 1 + sum(comb(n, x) * comb(n - x, y)
                   for x in range(1, s + 1) for y in range(1, n - s + 1))


@dataclass(frozen=True)
class AtomRow:
    states: tuple[int, ...]
    nonempty: bool
    complexity: int | None
    formula: int

    @property
    def meets_formula(self) -> bool:
        return self.complexity == self.formula

    @property
    def within_formula(self) -> bool:
        return self.complexity is None or self.complexity <= self.formula

    def to_dict(self) -> dict:
        return {"S": list(self.states), "nonempty": self.nonempty,
                "complexity": self.complexity, "formula": self.formula,
                "match": self.meets_formula}


@dataclass(frozen=True)
class AtomReport:
    n: int
    rows: tuple[AtomRow, ...]

    @property
    def atom_count(self) -> int:
        return sum(row.nonempty for row in self.rows)

    @property
    def all_meet_formula(self) -> bool:
        return all(row.meets_formula for row in self.rows)

    def to_dict(self) -> dict:
        return {"n": self.n, "atom_count": self.atom_count,
                "rows": [row.to_dict() for row in self.rows]}


def atoms_report(d: Dfa, max_n: int = DEFAULT_MAX_N, cap: int | None = None) -> AtomReport:
    """Every atom of ``L(d)`` compared with the closed-form maximum.

    Rows are ordered by S read as a bit set (state i is bit i).
    """
    n = d.state_count
    if n > max_n:
        raise CapacityError(f"atom sweep over {n} states refused; raise max_n to allow it")
    monoid = monoid_automaton(d, cap)
    rows = []
    for mask in range(2 ** n):
        result = atom(d, mask_states(mask), monoid)
        rows.append(AtomRow(mask_states(mask), result is not None,
                            None if result is None else result.state_count,
                            atom_complexity_formula(n, bin(mask).count("1"))))
    return AtomReport(n, tuple(rows))
