import json
import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from skeinpoly.braid import (
    BraidParseError,
    BraidWord,
    Permutation,
    chain,
    closure_components,
    concat,
    conjugate,
    cyclic_min,
    invert,
    markov_stabilize,
    parse,
    random_braid,
    shift,
    underlying_permutation,
)
from skeinpoly.oracles import burau_matrix


def B(n, *letters):
    return BraidWord(n, letters)


@st.composite
def braids(draw, n=None, max_len=10):
    n = n or draw(st.integers(2, 5))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(
        lambda i: st.sampled_from([i, -i])), max_size=max_len))
    return BraidWord(n, tuple(letters))


def burau(w: BraidWord) -> sympy.Matrix:
    m = sympy.eye(w.n - 1)
    for l in w.letters:
        m = m * burau_matrix(l, w.n)
    return m.applyfunc(sympy.cancel)


# --- parsing --------------------------------------------------------------

def test_parse_trefoil():
    w = parse("1 1 1")
    assert (w.n, w.letters) == (2, (1, 1, 1))


def test_parse_free_reduction():
    w = parse("1 -1", 3)
    assert (w.n, w.letters) == (3, ())


def test_parse_figure_eight():
    w = parse("1 -2 1 -2")
    assert (w.n, w.letters) == (3, (1, -2, 1, -2))


def test_parse_commas_and_empty():
    assert parse("1,2, -1").letters == (1, 2, -1)
    assert parse("").n == 1


@pytest.mark.parametrize("text,strands,pos", [
    ("1 0 1", None, 1),
    ("1 x", None, 1),
    ("2 1", 2, 0),
    ("1 1.5", None, 1),
])
def test_parse_errors_carry_position(text, strands, pos):
    with pytest.raises(BraidParseError) as err:
        parse(text, strands)
    assert err.value.position == pos


def test_word_validation():
    with pytest.raises(ValueError):
        B(2, 2)
    with pytest.raises(ValueError):
        B(3, 0)


def test_json_round_trip():
    w = B(4, 1, -3, 2)
    assert BraidWord.from_json(json.dumps(w.to_json())) == w


# --- word operations ------------------------------------------------------

def test_concat():
    assert concat(B(2, 1), B(2, -1)).letters == ()
    assert concat(B(3, 1, 2), B(3, 2, 1)).letters == (1, 2, 2, 1)
    w = B(3, 1, -2)
    assert concat(w, BraidWord.identity(3)) == w
    with pytest.raises(ValueError):
        concat(B(2, 1), B(3, 1))


def test_invert():
    assert invert(B(3, 1, 2)).letters == (-2, -1)
    assert invert(B(3)).letters == ()
    assert invert(B(3, 1, -2, 1)).letters == (-1, 2, -1)


def test_shift():
    assert shift(B(2, 1, 1), 2, 4) == B(4, 3, 3)
    assert shift(B(2, 1), 0, 5).letters == (1,)
    assert shift(B(3, 1, -2), 1, 4).letters == (2, -3)
    with pytest.raises(ValueError):
        shift(B(3, 1, -2), 2, 4)


def test_chain():
    assert chain(1) == B(1)
    assert chain(2) == B(2, 1, 1)
    assert chain(3) == B(3, 1, 1, 2, 2)
    with pytest.raises(ValueError):
        chain(0)


def test_underlying_permutation():
    assert underlying_permutation(B(3)) == Permutation.identity(3)
    assert underlying_permutation(B(2, 1, 1, 1)).images == (2, 1)
    # strand i goes to its bottom position
    perm = underlying_permutation(B(3, 1, 2))
    assert perm.images == (3, 1, 2)
    assert len(perm.cycles()) == 1


def test_closure_components():
    assert closure_components(B(3)) == 3
    assert closure_components(B(2, 1, 1)) == 2
    assert closure_components(B(2, 1, 1, 1)) == 1
    assert closure_components(chain(4)) == 4


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 5).flatmap(lambda n: st.tuples(braids(n), braids(n))))
def test_permutation_homomorphism(pair):
    x, y = pair
    assert underlying_permutation(concat(x, y)) == \
        underlying_permutation(x).then(underlying_permutation(y))


def test_conjugate():
    x = B(3, 1, -2)
    assert conjugate(x, B(3)) == x
    assert conjugate(B(2, 1), B(2, 1)) == B(2, 1)
    assert conjugate(B(3, 1), B(3, 2)).letters == (-2, 1, 2)


def test_markov_stabilize():
    assert markov_stabilize(B(1), 1) == B(2, 1)
    assert markov_stabilize(B(2, 1, 1, 1), -1) == B(3, 1, 1, 1, -2)
    assert markov_stabilize(markov_stabilize(B(2, 1), 1), -1).n == 4
    with pytest.raises(ValueError):
        markov_stabilize(B(2), 0)


def test_cyclic_min_examples():
    assert cyclic_min(B(3, 2, 1)).letters == (1, 2)
    assert cyclic_min(B(2, 1, -1)).letters == ()
    assert cyclic_min(B(3, -1, 2)).letters == (-1, 2)
    assert cyclic_min(B(3, 2, -1)).letters == (-1, 2)
    assert cyclic_min(B(3, 1, 2, -1)).letters == (2,)


@settings(max_examples=300, deadline=None)
@given(braids())
def test_cyclic_min_rotation_invariant(x):
    if not x.letters:
        return
    rotated = BraidWord(x.n, x.letters[1:] + x.letters[:1])
    assert cyclic_min(rotated) == cyclic_min(x)
    assert cyclic_min(conjugate(x, BraidWord(x.n, x.letters[:1]))) == cyclic_min(x)
    assert cyclic_min(cyclic_min(x)) == cyclic_min(x)


def test_random_braid_bounds():
    rng = random.Random(5)
    for _ in range(200):
        w = random_braid(rng)
        assert 2 <= w.n <= 5 and len(w) <= 10


# --- braid relations through the Burau representation ---------------------

@pytest.mark.parametrize("n,lhs,rhs", [
    (3, (1, 2, 1), (2, 1, 2)),
    (4, (1, 3), (3, 1)),
    (3, (2, -1, -2), (-1, -2, 1)),
    (3, (-2, 1, 2), (1, 2, -1)),
    (4, (2, 3, 2), (3, 2, 3)),
])
def test_braid_identities_burau(n, lhs, rhs):
    assert burau(B(n, *lhs)) == burau(B(n, *rhs))


@settings(max_examples=50, deadline=None)
@given(braids(n=3, max_len=6))
def test_cyclic_min_is_conjugate_burau(x):
    # cyclic_min(x) is conjugate to x, so the characteristic polynomials agree
    lam = sympy.Symbol("lam")
    a, b = burau(x), burau(cyclic_min(x))
    assert sympy.simplify(a.charpoly(lam).as_expr() - b.charpoly(lam).as_expr()) == 0
