"""Acceptance suite: one test per criterion, exact tolerances throughout.

The n = 7 semigroup check runs only with ``--semigroup-n7``.
"""

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import dfas
from oracles import in_concat, in_star, member, naive_closure, words
from ufc import atoms, ops
from ufc import regex as rx
from ufc.fa import (accepts, complexity, determinize, equivalent, is_minimal, isomorphic,
                    minimize, quotient_complexities)
from ufc.transforms import letter_transformations, semigroup_closure, transition_semigroup_size
from ufc.witness import boolean_witness_pair, make_witness, ocfp_check, union_free_regex

GRID = range(3, 7)


def _mismatches(cases):
    return [(label, got, want) for label, got, want in cases if got != want]


def test_c01_syntactic_semigroup(request):
    ns = [3, 4, 5, 6] + ([7] if request.config.getoption("--semigroup-n7") else [])
    expected = {3: 27, 4: 256, 5: 3125, 6: 46656, 7: 823543}
    cases = []
    for n in ns:
        report = transition_semigroup_size(make_witness(n, "a,b,c"))
        assert not report.exceeded
        cases.append((n, report.size, expected[n]))
        assert expected[n] == n ** n
    assert _mismatches(cases) == []


def test_c02_three_letters_needed():
    oracle = {(3, "a,b"): 6, (3, "a,-,c"): 7, (3, "-,b,c"): 4,
              (4, "a,b"): 24, (4, "a,-,c"): 22, (4, "-,b,c"): 4}
    for (n, dialect), size in oracle.items():
        gens = letter_transformations(make_witness(n, dialect))
        measured = semigroup_closure(gens).size
        assert measured == size == len(naive_closure({g.images for g in gens}))
        assert measured < n ** n


def test_c03_quotients():
    for n in range(3, 11):
        assert quotient_complexities(make_witness(n, "a,b")) == (n,) * n


def test_c04_reversal_and_atom_count():
    for n in range(3, 9):
        assert ops.reverse(make_witness(n, "a,b,c")).complexity == 2 ** n
    for n in range(3, 7):
        assert atoms.atom_count(make_witness(n, "a,b,c")) == 2 ** n


def test_c05_atom_complexities():
    for n in (3, 4, 5):
        report = atoms.atoms_report(make_witness(n, "a,b,c"))
        assert len(report.rows) == 2 ** n
        for row in report.rows:
            assert row.complexity == atoms.atom_complexity_formula(n, len(row.states)), row
    n3 = atoms.atoms_report(make_witness(3, "a,b,c"))
    assert [row.complexity for row in n3.rows] == [7, 10, 10, 10, 10, 10, 10, 7]


def test_c06_star():
    measured = [ops.star(make_witness(n, "a,b")).complexity for n in range(3, 11)]
    assert measured == [6, 12, 24, 48, 96, 192, 384, 768]
    assert measured == [2 ** (n - 1) + 2 ** (n - 2) for n in range(3, 11)]


def test_c07_product():
    cases = []
    for m, n in itertools.product(GRID, GRID):
        r = ops.concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c"))
        cases.append((("restricted", m, n), r.complexity, (m - 1) * 2 ** n + 2 ** (n - 1)))
        u = ops.concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c,d"), ops.UNRESTRICTED)
        cases.append((("unrestricted", m, n), u.complexity, m * 2 ** n + 2 ** (n - 1)))
    assert _mismatches(cases) == []


def test_c08_restricted_boolean():
    cases = []
    for m, n in itertools.product(GRID, GRID):
        for op in ops.PROPER_OPS:
            if (m, n) != (3, 3):
                r = ops.boolean(make_witness(m, "a,b"), make_witness(n, "b,a"), op)
                cases.append(((op.name, "a,b / b,a", m, n), r.complexity, m * n))
            if m != n:
                r = ops.boolean(make_witness(m, "a,b"), make_witness(n, "a,b"), op)
                cases.append(((op.name, "a,b / a,b", m, n), r.complexity, m * n))
    assert _mismatches(cases) == []


def test_c09_unrestricted_boolean():
    # literal targets: union and symmetric difference (m+1)(n+1), difference mn+n,
    # intersection mn, over the whole grid including (3, 3)
    target = {
        ops.UNION: lambda m, n: (m + 1) * (n + 1),
        ops.SYMMETRIC_DIFFERENCE: lambda m, n: (m + 1) * (n + 1),
        ops.DIFFERENCE: lambda m, n: m * n + n,
        ops.INTERSECTION: lambda m, n: m * n,
    }
    cases = []
    for m, n in itertools.product(GRID, GRID):
        d1, d2 = boolean_witness_pair(m, n)
        for op, formula in target.items():
            r = ops.boolean(d1, d2, op, ops.UNRESTRICTED)
            cases.append(((op.name, m, n), r.complexity, formula(m, n)))
    assert _mismatches(cases) == []


def _starred_unions():
    leaves = st.sampled_from([rx.letter(x) for x in "abc"])

    def extend(children):
        return st.one_of(
            st.lists(children, min_size=2, max_size=3).map(lambda cs: rx.union(*cs)),
            st.lists(children, min_size=2, max_size=3).map(lambda cs: rx.concat(*cs)),
            children.map(rx.star))

    return st.recursive(leaves, extend, max_leaves=16).map(rx.star)


def _depth(r):
    children = getattr(r, "children", None) or ([r.child] if isinstance(r, rx.Star) else [])
    return 1 + max(map(_depth, children), default=0)


def test_c10_union_free_expression():
    for n in (3, 4, 5):
        r = union_free_regex(n)
        assert rx.count_unions(r) == 0
        assert equivalent(determinize(rx.regex_to_nfa(r, "abcd")), make_witness(n)) is None

    @settings(max_examples=200, deadline=None)
    @given(_starred_unions().filter(lambda r: _depth(r) <= 4))
    def preserves_language(r):
        out = rx.eliminate_unions(r)
        assert rx.count_unions(out) == 0
        assert equivalent(rx.regex_to_nfa(r, "abc"), rx.regex_to_nfa(out, "abc")) is None

    preserves_language()


def test_c11_ocfp_and_minimality():
    for n in range(3, 9):
        d = make_witness(n, "a,b,c,d")
        assert ocfp_check(d).ok
        assert is_minimal(d)
        w = "b" + "a" * (n - 2)
        assert [member(d, w, start=q) for q in range(n)] == [True] + [False] * (n - 1)


@settings(max_examples=100, deadline=None)
@given(dfas(max_states=6, max_letters=3), dfas(max_states=6, max_letters=3))
def test_c12_oracle_suites(d1, d2):
    # (a) double reversal against partition refinement
    assert isomorphic(ops.brzozowski_minimize(d1), minimize(d1))

    m, n = complexity(d1), complexity(d2)
    probe = list(words(d1.alphabet, 8))

    # (b) membership oracles on all words up to length 8
    rev = ops.reverse(d1)
    st_ = ops.star(d1)
    for w in probe:
        assert accepts(rev.result, w) == member(d1, w[::-1])
        assert accepts(st_.result, w) == in_star(d1, w)
    mode = ops.RESTRICTED if d1.alphabet == d2.alphabet else ops.UNRESTRICTED
    sigma = sorted(set(d1.alphabet) | set(d2.alphabet))
    cat = ops.concat(d1, d2, mode)
    bools = [(op, ops.boolean(d1, d2, op, mode)) for op in ops.PROPER_OPS]
    for w in words(sigma, 8):
        assert accepts(cat.result, w) == in_concat(d1, d2, w)
        for op, r in bools:
            assert accepts(r.result, w) == op(member(d1, w), member(d2, w))

    # (c) regular upper bounds
    assert rev.complexity <= ops.reversal_bound(m)
    assert st_.complexity <= ops.star_bound(m)
    assert cat.complexity <= ops.product_bound(m, n, mode)
    for op, r in bools:
        assert r.complexity <= ops.boolean_bound(m, n, op, mode)
