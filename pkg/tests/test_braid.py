import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spin7link.braid import (
    BadToken,
    BraidWord,
    Closure,
    GeneratorOutOfRange,
    LinkPresentation,
    closure_components,
    exponent_sum,
    parse_braid,
    self_writhe,
)

from strategies import braid_words


def test_parse_examples():
    assert parse_braid("1 2 -1", 3).letters == (1, 2, -1)
    assert parse_braid("1,-2, 1 ,-2", 3) == BraidWord(3, (1, -2, 1, -2))
    assert parse_braid("", 2) == BraidWord(2, ())
    with pytest.raises(GeneratorOutOfRange):
        parse_braid("2", 2)
    with pytest.raises(BadToken):
        parse_braid("1 a", 3)
    with pytest.raises(BadToken):
        parse_braid("0", 3)


def test_strand_range():
    BraidWord(1, ())
    with pytest.raises(GeneratorOutOfRange):
        BraidWord(1, (1,))
    with pytest.raises(ValueError):
        BraidWord(4, ())


def test_components():
    assert closure_components(BraidWord(3, ())).n_components == 3
    hopf = closure_components(BraidWord(3, (1, 1)))
    # two linked components plus the idle third strand
    assert hopf.n_components == 3
    assert hopf.self_crossing == (False, False)
    assert {frozenset(p) for p in hopf.letter_components} == {frozenset((0, 1))}
    assert closure_components(BraidWord(2, (1, 1))).n_components == 2
    fig8 = closure_components(BraidWord(3, (1, -2, 1, -2)))
    assert fig8.n_components == 1
    assert all(fig8.self_crossing)


def test_writhes():
    assert (exponent_sum(BraidWord(3, (1, 1, 1))), self_writhe(BraidWord(3, (1, 1, 1)))) == (3, 3)
    assert (exponent_sum(BraidWord(3, (1, 1))), self_writhe(BraidWord(3, (1, 1)))) == (2, 0)
    assert (exponent_sum(BraidWord(3, ())), self_writhe(BraidWord(3, ()))) == (0, 0)


def test_word_operations():
    w = BraidWord(3, (1, -2, 2))
    assert w.inverse() == BraidWord(3, (-2, 2, -1))
    assert w.mirror() == BraidWord(3, (-1, 2, -2))
    assert w.rotate(1) == BraidWord(3, (-2, 2, 1))
    assert BraidWord(2, (1,)) * BraidWord(3, (2,)) == BraidWord(3, (1, 2))
    assert str(w) == "1 -2 2"


def test_json_schema():
    text = '{"components":[{"braid":"1 1","strands":3,"mirror":false}],"normalization":"framed"}'
    lp = LinkPresentation.from_json(text)
    assert lp == LinkPresentation((Closure(BraidWord(3, (1, 1))),), "framed")
    assert LinkPresentation.from_json(lp.to_json()) == lp
    assert json.loads(lp.to_json()) == json.loads(text)


def test_json_rejects_bad_input():
    with pytest.raises(ValueError):
        LinkPresentation.from_json("{}")
    with pytest.raises(ValueError):
        LinkPresentation.from_json('{"components":[{"braid":"1","colour":"red"}]}')
    with pytest.raises(ValueError):
        LinkPresentation.from_json('{"components":[], "normalization":"oriented"}')


@given(braid_words(), braid_words(strands=3))
def test_exponent_sum_is_additive(a, b):
    assert exponent_sum(a * b) == exponent_sum(a) + exponent_sum(b)


@given(braid_words(), st.integers(0, 10))
def test_components_are_rotation_invariant(w, k):
    assert closure_components(w.rotate(k)).n_components == closure_components(w).n_components
    assert self_writhe(w.rotate(k)) == self_writhe(w)


@given(braid_words())
def test_permutation_of_inverse(w):
    p, q = w.permutation(), w.inverse().permutation()
    assert tuple(q[p[i]] for i in range(w.strands)) == tuple(range(w.strands))
