from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from spin7link.exactalg import (
    AlphaSeries,
    LaurentPoly,
    NotDivisible,
    RatFunc,
    W,
    ZeroDenominator,
    lp_div_exact,
    lp_eval_int,
    lp_gcd,
    lp_mirror,
    lp_to_alpha_series,
    rf_normalize,
)
from spin7link.invariant import FIGURE_EIGHT_VALUE, TREFOIL_VALUE
from spin7link.repdata import DELTA

from strategies import laurent, nonzero_laurent

RELATION_ONE = (1 + W**4) * (1 + W**12) * (1 + W**20)


def test_product_with_zero():
    assert (1 + W**4) * 0 == LaurentPoly.zero()
    assert ((1 + W**4) * 0).terms == {}


def test_relation_one_expansion():
    expected = LaurentPoly({0: 1, 4: 1, 12: 1, 16: 1, 20: 1, 24: 1, 32: 1, 36: 1})
    assert RELATION_ONE == expected


def test_identity_coefficient():
    assert W**-2 * (1 + W**8 - W**12) == W**-2 + W**6 - W**10


def test_mirror_examples():
    assert lp_mirror(W**-21) == W**21
    assert lp_mirror(DELTA * W**18) == RELATION_ONE.mirror()
    assert lp_mirror(DELTA * W**18) == W**-36 * LaurentPoly({36 - k: c for k, c in RELATION_ONE.items()})


def test_figure_eight_value_is_amphichiral():
    assert FIGURE_EIGHT_VALUE.mirror() == FIGURE_EIGHT_VALUE
    assert lp_div_exact(FIGURE_EIGHT_VALUE, DELTA).is_palindromic()


def test_exact_division():
    assert lp_div_exact(1 - W**8, 1 + W**4) == 1 - W**4
    assert lp_div_exact(DELTA, W**20 + 1) == W**-18 * (W**12 + 1) * (W**4 + 1)
    with pytest.raises(NotDivisible):
        lp_div_exact(1 + W**4, 1 + W**8)
    with pytest.raises(ZeroDivisionError):
        lp_div_exact(W, LaurentPoly.zero())


def test_rf_normalize():
    assert rf_normalize(W**8 - 1, W**4 - 1) == RatFunc(W**4 + 1)
    assert rf_normalize(W**8 - 1, W**4 - 1).is_laurent()
    r = rf_normalize(W**12, W**12 + 1)
    assert (r.num, r.den) == (W**12, W**12 + 1)
    assert rf_normalize(0, 1 + W**4).is_zero()
    with pytest.raises(ZeroDenominator):
        rf_normalize(1, 0)


def test_gcd_has_positive_leading_coefficient():
    assert lp_gcd(W**8 - 1, W**4 - 1) == W**4 - 1
    assert lp_gcd(-(W**8) + 1, 1 - W**4) == W**4 - 1


def test_alpha_series_examples():
    assert lp_to_alpha_series(LaurentPoly.one(), 3) == AlphaSeries([1, 0, 0, 0], 3)
    assert lp_to_alpha_series(W**-21, 1) == AlphaSeries([1, Fraction(21, 2)], 1)
    assert lp_to_alpha_series(DELTA, 0) == AlphaSeries([8], 0)


def test_evaluation_examples():
    assert lp_eval_int(DELTA, 1) == 8
    assert lp_eval_int(lp_div_exact(TREFOIL_VALUE, DELTA), 1) == 1
    assert lp_eval_int(W**-21, 1) == 1
    assert lp_eval_int(W**-2, Fraction(1, 2)) == 4


def test_text_format():
    p = -2 * W**-1 + 1 + 3 * W**4
    assert str(p) == "-2*W^-1 + 1 + 3*W^4"
    assert str(W) == "W^1"
    assert str(LaurentPoly.zero()) == "0"
    assert str(DELTA) == "W^-18 + W^-14 + W^-6 + W^-2 + W^2 + W^6 + W^14 + W^18"


@given(laurent, laurent, laurent)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == LaurentPoly.zero()
    assert -(-a) == a


@given(laurent)
def test_no_zero_terms_stored(a):
    assert all(c != 0 for c in (a - a + a).terms.values())


@given(laurent, laurent)
def test_mirror_is_a_ring_involution(a, b):
    assert lp_mirror(a * b) == lp_mirror(a) * lp_mirror(b)
    assert lp_mirror(a + b) == lp_mirror(a) + lp_mirror(b)
    assert lp_mirror(lp_mirror(a)) == a


@given(laurent, nonzero_laurent)
def test_division_inverts_multiplication(a, b):
    assert lp_div_exact(a * b, b) == a


@given(laurent, nonzero_laurent, nonzero_laurent)
def test_rf_normalize_cancels_common_factor(a, b, c):
    assert rf_normalize(a * c, b * c) == rf_normalize(a, b)
    r = rf_normalize(a * c, b * c)
    assert (r.num, r.den) == (rf_normalize(a, b).num, rf_normalize(a, b).den)


@given(nonzero_laurent, nonzero_laurent)
def test_gcd_divides_both(a, b):
    g = lp_gcd(a, b)
    lp_div_exact(a, g)
    lp_div_exact(b, g)


@given(laurent, laurent, st.integers(0, 4))
def test_alpha_substitution_is_a_homomorphism(a, b, order):
    sa, sb = lp_to_alpha_series(a, order), lp_to_alpha_series(b, order)
    assert lp_to_alpha_series(a * b, order) == sa * sb
    assert lp_to_alpha_series(a + b, order) == sa + sb


@given(laurent, st.fractions(min_value=-3, max_value=3).filter(lambda x: x != 0))
def test_eval_is_a_homomorphism(a, x):
    assert lp_eval_int(a * a, x) == lp_eval_int(a, x) ** 2


@given(laurent)
def test_text_and_json_round_trip(a):
    assert LaurentPoly.parse(str(a)) == a
    assert LaurentPoly.from_json(a.to_json()) == a


@given(nonzero_laurent, nonzero_laurent)
def test_ratfunc_field_operations(a, b):
    r = RatFunc(a, b)
    assert r * r.inverse() == RatFunc(1)
    assert r.mirror().mirror() == r
    assert (r + RatFunc(a)) - RatFunc(a) == r
