import pytest
from hypothesis import given, settings

from conftest import dfas
from oracles import in_concat, in_star, member, words
from ufc import ops
from ufc.errors import AlphabetError
from ufc.fa import Dfa, accepts, complexity, equivalent, is_minimal, isomorphic, minimize
from ufc.witness import boolean_witness_pair, make_witness


def epsilon_only(alphabet="ab"):
    return Dfa(2, alphabet, [[1, 1]] * len(alphabet), 0, {0})


# bounds

@pytest.mark.parametrize("n, bound", [(1, 2), (2, 3), (3, 6), (4, 12), (10, 768)])
def test_star_bound(n, bound):
    assert ops.star_bound(n) == bound


def test_product_bounds():
    assert ops.product_bound(3, 4) == 2 * 16 + 8
    assert ops.product_bound(3, 4, ops.UNRESTRICTED) == 3 * 16 + 8


def test_boolean_bounds():
    assert ops.boolean_bound(3, 4, ops.UNION) == 12
    assert ops.boolean_bound(3, 4, ops.UNION, ops.UNRESTRICTED) == 20
    assert ops.boolean_bound(3, 4, ops.SYMMETRIC_DIFFERENCE, ops.UNRESTRICTED) == 20
    assert ops.boolean_bound(3, 4, ops.DIFFERENCE, ops.UNRESTRICTED) == 15
    assert ops.boolean_bound(3, 4, ops.INTERSECTION, ops.UNRESTRICTED) == 12


def test_proper_operations():
    assert all(op.is_proper for op in ops.PROPER_OPS)
    first = ops.BoolOp("first", (False, False, True, True))
    assert not first.is_proper


# reversal

@pytest.mark.parametrize("n", [3, 4, 5])
def test_reverse_of_witness(n):
    r = ops.reverse(make_witness(n, "a,b,c"))
    assert r.complexity == 2 ** n
    assert r.within_bound


def test_reverse_membership():
    d = make_witness(4, "a,b")
    r = ops.reverse(d).result
    for w in words("ab", 7):
        assert accepts(r, w) == member(d, w[::-1])


def test_brzozowski_matches_hopcroft_on_witness():
    d = make_witness(5, "a,b,c")
    assert isomorphic(ops.brzozowski_minimize(d), minimize(d))


# star

@pytest.mark.parametrize("n, expected", [(3, 6), (4, 12), (5, 24), (6, 48)])
def test_star_of_witness(n, expected):
    assert ops.star(make_witness(n, "a,b")).complexity == expected


def test_star_raw_subset_count():
    # the subset construction reaches exactly the minimal number of sets
    r = ops.star(make_witness(4, "a,b"))
    assert (r.complexity, r.raw_states) == (12, 12)


def test_star_of_empty_language():
    empty = Dfa(1, "a", [[0]], 0, set())
    r = ops.star(empty)
    assert r.complexity == 2
    assert accepts(r.result, "")
    assert not accepts(r.result, "a")


def test_star_membership_on_witness():
    d = make_witness(3, "a,b")
    r = ops.star(d).result
    for w in words("ab", 7):
        assert accepts(r, w) == in_star(d, w)


# concatenation

@pytest.mark.parametrize("m, n", [(3, 3), (3, 4), (4, 3)])
def test_concat_of_witnesses(m, n):
    r = ops.concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c"))
    assert r.complexity == ops.product_bound(m, n)
    u = ops.concat(make_witness(m, "a,b,c"), make_witness(n, "a,b,c,d"), ops.UNRESTRICTED)
    assert u.complexity == ops.product_bound(m, n, ops.UNRESTRICTED)


def test_concat_with_epsilon_is_identity():
    d = make_witness(4, "a,b")
    assert equivalent(ops.concat(d, epsilon_only()).result, d) is None
    assert equivalent(ops.concat(epsilon_only(), d).result, d) is None


def test_concat_membership_unrestricted():
    d1, d2 = make_witness(3, "a,b"), make_witness(3, "-,b,-,c")
    r = ops.concat(d1, d2, ops.UNRESTRICTED).result
    for w in words("abc", 6):
        assert accepts(r, w) == in_concat(d1, d2, w)


def test_restricted_alphabet_mismatch():
    with pytest.raises(AlphabetError):
        ops.concat(make_witness(3, "a,b"), make_witness(3, "a,b,c"))
    with pytest.raises(AlphabetError):
        ops.boolean(make_witness(3, "a,b"), make_witness(3, "a,b,c"), ops.UNION)


def test_unknown_mode():
    d = make_witness(3, "a,b")
    with pytest.raises(ValueError):
        ops.concat(d, d, "sideways")


# boolean operations

@pytest.mark.parametrize("op", ops.PROPER_OPS, ids=str)
def test_restricted_boolean_on_witness_pair(op):
    r = ops.boolean(make_witness(3, "a,b"), make_witness(4, "b,a"), op)
    assert r.complexity == 12


@pytest.mark.parametrize("op", ops.PROPER_OPS, ids=str)
def test_boolean_membership(op):
    d1, d2 = boolean_witness_pair(3, 4)
    r = ops.boolean(d1, d2, op, ops.UNRESTRICTED).result
    for w in words("abcd", 5):
        assert accepts(r, w) == op(member(d1, w), member(d2, w))


@pytest.mark.parametrize("op, expected", [
    (ops.UNION, 20), (ops.SYMMETRIC_DIFFERENCE, 20), (ops.DIFFERENCE, 15),
    (ops.INTERSECTION, 12),
])
def test_unrestricted_boolean_3_4(op, expected):
    r = ops.boolean(*boolean_witness_pair(3, 4), op, ops.UNRESTRICTED)
    assert r.complexity == expected


def test_unrestricted_pair_3_3_reaches_13_pairs():
    # only 13 of the 16 completed state pairs are reachable at m = n = 3
    d1, d2 = boolean_witness_pair(3, 3)
    raw, pairs = ops.direct_product(d1, d2, ops.UNION, ops.UNRESTRICTED)
    assert raw.state_count == len(pairs) == 13
    assert ops.boolean(d1, d2, ops.UNION, ops.UNRESTRICTED).complexity == 13


def test_reachable_pairs_by_brute_force():
    d1, d2 = boolean_witness_pair(3, 3)
    sink = object()

    def run(d, w):
        q = d.initial
        for x in w:
            if x not in d.alphabet:
                return sink
            q = d.delta[d.alphabet.index(x)][q]
        return q

    reached = {(run(d1, w), run(d2, w)) for w in words("abcd", 7)}
    assert len(reached) == 13


def test_unrestricted_intersection_drops_private_letters():
    d1, d2 = boolean_witness_pair(4, 4)
    r = ops.boolean(d1, d2, ops.INTERSECTION, ops.UNRESTRICTED).result
    assert r.alphabet == ("a", "b")
    assert r.state_count == 16


# random automata

@settings(max_examples=40, deadline=None)
@given(dfas(max_states=4, max_letters=2))
def test_star_oracle(d):
    r = ops.star(d)
    assert r.within_bound
    assert is_minimal(r.result)
    for w in words(d.alphabet, 6):
        assert accepts(r.result, w) == in_star(d, w)


@settings(max_examples=40, deadline=None)
@given(dfas(max_states=4, max_letters=2), dfas(max_states=4, max_letters=2))
def test_concat_oracle(d1, d2):
    mode = ops.RESTRICTED if d1.alphabet == d2.alphabet else ops.UNRESTRICTED
    r = ops.concat(d1, d2, mode)
    assert r.complexity <= ops.product_bound(complexity(d1), complexity(d2), mode)
    for w in words("ab", 6):
        assert accepts(r.result, w) == in_concat(d1, d2, w)


@settings(max_examples=40, deadline=None)
@given(dfas(max_states=4), dfas(max_states=4))
def test_boolean_oracle(d1, d2):
    for op in ops.PROPER_OPS:
        r = ops.boolean(d1, d2, op, ops.UNRESTRICTED)
        assert r.within_bound
        for w in words("abc", 4):
            assert accepts(r.result, w) == op(member(d1, w), member(d2, w))


@pytest.mark.parametrize("m, n", [(3, 4), (4, 3), (5, 5), (6, 4)])
def test_unrestricted_difference_is_mn_plus_m(m, n):
    # both the four-letter pair and the pair with a two-letter subtrahend
    for d2 in (make_witness(n, "b,a,-,d"), make_witness(n, "b,a")):
        r = ops.boolean(make_witness(m, "a,b,-,c"), d2, ops.DIFFERENCE, ops.UNRESTRICTED)
        assert r.complexity == m * n + m == ops.boolean_bound(m, n, ops.DIFFERENCE,
                                                              ops.UNRESTRICTED)
