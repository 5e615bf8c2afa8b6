"""JSON interchange format for automata.

DFA::

    {"kind": "dfa", "states": N, "alphabet": ["a", "b"], "initial": 0,
     "finals": [...], "transitions": {"a": [t0, ..., tN-1], ...}}

with -1 for an absent transition.  The NFA variant has ``"initials"``
instead of ``"initial"`` and lists of targets in ``"transitions"``.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import AutomatonError, FormatError
from .fa import Dfa, Nfa


def to_dict(a: Dfa | Nfa) -> dict:
    if isinstance(a, Dfa):
        return {
            "kind": "dfa",
            "states": a.state_count,
            "alphabet": list(a.alphabet),
            "initial": a.initial,
            "finals": sorted(a.finals),
            "transitions": {x: list(row) for x, row in zip(a.alphabet, a.delta)},
        }
    return {
        "kind": "nfa",
        "states": a.state_count,
        "alphabet": list(a.alphabet),
        "initials": sorted(a.initials),
        "finals": sorted(a.finals),
        "transitions": {x: [sorted(ts) for ts in row] for x, row in zip(a.alphabet, a.delta)},
    }


def dumps(a: Dfa | Nfa) -> str:
    return json.dumps(to_dict(a)) + "\n"


def _field(data: dict, name: str, kind):
    if name not in data:
        raise FormatError(f"missing field {name!r}")
    value = data[name]
    if kind is int and (isinstance(value, bool) or not isinstance(value, int)):
        raise FormatError(f"field {name!r} must be an integer, got {value!r}")
    if kind is not int and not isinstance(value, kind):
        raise FormatError(f"field {name!r} must be a {kind.__name__}, got {type(value).__name__}")
    return value


def from_dict(data) -> Dfa | Nfa:
    if not isinstance(data, dict):
        raise FormatError("top-level value must be an object")
    kind = _field(data, "kind", str)
    if kind not in ("dfa", "nfa"):
        raise FormatError(f"field 'kind' must be 'dfa' or 'nfa', got {kind!r}")
    states = _field(data, "states", int)
    alphabet = _field(data, "alphabet", list)
    finals = _field(data, "finals", list)
    transitions = _field(data, "transitions", dict)
    if set(transitions) != set(alphabet) or len(set(alphabet)) != len(alphabet):
        raise FormatError("field 'transitions' must have exactly one entry per alphabet letter")
    for letter in alphabet:
        row = transitions[letter]
        if not isinstance(row, list) or len(row) != states:
            raise FormatError(f"field 'transitions.{letter}' must list {states} entries")
    try:
        if kind == "dfa":
            initial = _field(data, "initial", int)
            return Dfa(states, tuple(alphabet), tuple(transitions[x] for x in alphabet),
                       initial, frozenset(finals))
        initials = _field(data, "initials", list)
        rows = tuple(tuple(frozenset(ts) for ts in transitions[x]) for x in alphabet)
        return Nfa(states, tuple(alphabet), rows, frozenset(initials), frozenset(finals))
    except FormatError:
        raise
    except (AutomatonError, TypeError) as exc:
        raise FormatError(str(exc)) from None


def loads(text: str) -> Dfa | Nfa:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from None
    return from_dict(data)


def load(path) -> Dfa | Nfa:
    path = Path(path)
    try:
        return loads(path.read_text())
    except FormatError as exc:
        raise FormatError(f"{path}: {exc}") from None


def save(a: Dfa | Nfa, path) -> None:
    Path(path).write_text(dumps(a))
