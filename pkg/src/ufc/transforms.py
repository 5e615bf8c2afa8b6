"""Transformations of Q_n = {0, ..., n-1} and transition semigroups.

Composition is written left to right: ``q(st) = (qs)t``, so
``compose(s, t)`` applies ``s`` first.  The cycle notation used for input
and output is a left-to-right product of factors, each either a cycle
``(q0,q1,...,qk)`` or a send ``(p->q)``; states not mentioned are fixed.
"""

from __future__ import annotations

import os
import re
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from .errors import AlphabetError, FormatError, PreconditionError
from .fa import Dfa, complete, is_minimal

DEFAULT_CAP = 2_000_000


def default_cap() -> int:
    """Closure cap, overridable through the ``UFC_MAX_CLOSURE`` variable."""
    value = os.environ.get("UFC_MAX_CLOSURE")
    if not value:
        return DEFAULT_CAP
    try:
        cap = int(value)
    except ValueError:
        raise PreconditionError(f"UFC_MAX_CLOSURE must be an integer, got {value!r}") from None
    if cap < 1:
        raise PreconditionError("UFC_MAX_CLOSURE must be positive")
    return cap


@dataclass(frozen=True, order=True)
class Transformation:
    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if any(not 0 <= x < n for x in images):
            raise PreconditionError(f"images {images} are not all below the degree {n}")

    @classmethod
    def identity(cls, n: int) -> Transformation:
        return cls(tuple(range(n)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, q: int) -> int:
        return self.images[q]

    def __mul__(self, other: Transformation) -> Transformation:
        return compose(self, other)

    def __str__(self):
        return format_cycles(self) or "1"


def compose(s: Transformation, t: Transformation) -> Transformation:
    """``s`` then ``t``."""
    if s.degree != t.degree:
        raise PreconditionError(f"cannot compose degrees {s.degree} and {t.degree}")
    return Transformation(tuple(t.images[x] for x in s.images))


def rank(t: Transformation) -> int:
    return len(set(t.images))


_FACTOR = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Transformation:
    """Parse a product of cycles and sends, e.g. ``"(1,2,3)(1->0)"``."""
    images = list(range(degree))
    rest = _FACTOR.sub("", text)
    if rest.strip():
        raise FormatError(f"unexpected text {rest.strip()!r} in {text!r}")
    for body in _FACTOR.findall(text):
        factor = list(range(degree))
        if "->" in body:
            p, q = (_state(x, degree, text) for x in body.split("->", 1))
            factor[p] = q
        else:
            states = [_state(x, degree, text) for x in body.split(",")]
            if len(set(states)) != len(states):
                raise FormatError(f"repeated state in cycle ({body}) of {text!r}")
            for x, y in zip(states, states[1:] + states[:1]):
                factor[x] = y
        images = [factor[x] for x in images]
    return Transformation(tuple(images))


def _state(token: str, degree: int, text: str) -> int:
    token = token.strip()
    if not token.isdigit():
        raise FormatError(f"bad state {token!r} in {text!r}")
    q = int(token)
    if q >= degree:
        raise FormatError(f"state {q} out of range for degree {degree} in {text!r}")
    return q


def format_cycles(t: Transformation) -> str:
    """Inverse of ``parse_cycles``.

    A transformation is written as sends followed by disjoint cycles.  The
    sends collapse every state onto the least state with the same image;
    the cycles then carry those representatives to their images.
    """
    n = t.degree
    representative: dict[int, int] = {}
    for q, x in enumerate(t.images):
        representative.setdefault(x, q)
    sends = [(q, representative[x]) for q, x in enumerate(t.images) if representative[x] != q]

    perm = [None] * n
    for x, q in representative.items():
        perm[q] = x
    spare_sources = [q for q in range(n) if perm[q] is None]
    spare_targets = sorted(set(range(n)) - set(representative))
    for q, x in zip(spare_sources, spare_targets):
        perm[q] = x

    cycles = []
    seen = set()
    for q in range(n):
        if q in seen or perm[q] == q:
            continue
        cycle = [q]
        seen.add(q)
        x = perm[q]
        while x != q:
            cycle.append(x)
            seen.add(x)
            x = perm[x]
        cycles.append(cycle)

    return ("".join(f"({p}->{q})" for p, q in sends)
            + "".join("(" + ",".join(map(str, c)) + ")" for c in cycles))


def letter_transformations(d: Dfa) -> list[Transformation]:
    if not d.is_complete:
        raise PreconditionError("letter transformations need a complete DFA")
    return [Transformation(row) for row in d.delta]


def word_transformation(d: Dfa, word) -> Transformation:
    """The transformation of the states of ``d`` induced by ``word``."""
    if not d.is_complete:
        raise PreconditionError("word transformations need a complete DFA")
    images = list(range(d.state_count))
    for letter in word:
        if letter not in d.alphabet:
            raise AlphabetError(f"letter {letter!r} not in alphabet {d.alphabet!r}")
        row = d.delta[d.alphabet.index(letter)]
        images = [row[x] for x in images]
    return Transformation(tuple(images))


@dataclass(frozen=True)
class ClosureReport:
    """Outcome of a semigroup closure.

    ``size`` is exact when ``exceeded`` is false and a lower bound otherwise.
    """

    size: int
    exceeded: bool
    cap: int
    elements: tuple[Transformation, ...] | None = field(default=None, repr=False)

    def to_dict(self) -> dict:
        return {"size": self.size, "exceeded_cap": self.exceeded, "cap": self.cap}


def semigroup_closure(generators: Iterable[Transformation], cap: int | None = None,
                      keep_elements: bool = False) -> ClosureReport:
    """All products of one or more generators, explored breadth first.

    The identity is only included if some non-empty product equals it.
    """
    gens = list(dict.fromkeys(generators))
    if cap is None:
        cap = default_cap()
    if not gens:
        return ClosureReport(0, False, cap, () if keep_elements else None)
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise PreconditionError("generators must have equal degrees")
    elements, exceeded = _closure([g.images for g in gens], cap)
    kept = tuple(map(Transformation, elements)) if keep_elements else None
    return ClosureReport(len(elements), exceeded, cap, kept)


def _closure(gens: Sequence[tuple[int, ...]], cap: int) -> tuple[list[tuple[int, ...]], bool]:
    seen = set()
    order = []
    for g in gens:
        if g not in seen:
            if len(order) >= cap:
                return order, True
            seen.add(g)
            order.append(g)
    frontier = 0
    lookups = [g.__getitem__ for g in gens]
    while frontier < len(order):
        u = order[frontier]
        frontier += 1
        for g in lookups:
            v = tuple(map(g, u))
            if v not in seen:
                if len(order) >= cap:
                    return order, True
                seen.add(v)
                order.append(v)
    return order, False


def transition_semigroup_size(d: Dfa, cap: int | None = None) -> ClosureReport:
    """Size of the syntactic semigroup of ``L(d)``; ``d`` must be minimal."""
    if not is_minimal(d):
        raise PreconditionError("the transition semigroup is the syntactic one only for minimal DFAs")
    return semigroup_closure(letter_transformations(complete(d)), cap)
