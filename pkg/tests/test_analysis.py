import json
from fractions import Fraction

import pytest

from spin7link.analysis import (
    CROSS_OFFSET,
    FIGURE_ONE_COEFFICIENTS,
    PRINTED_SKEIN,
    Report,
    alpha_exp,
    derive_skein_coefficients,
    series_consistency_check,
    skein_report,
    w1_degeneration_check,
)
from spin7link.blockmat import BlockMatrix
from spin7link.exactalg import AlphaSeries, RatFunc, W
from spin7link.repdata import build_alpha_generators, build_generators


def test_skein_coefficients():
    sc = derive_skein_coefficients()
    assert sc.c_crossinv == RatFunc(W**7)
    assert sc.c_id == RatFunc(W**-2 * (1 + W**8 - W**12))
    assert sc.c_clasp == RatFunc(W**4 * (W**24 - 1), 1 + W**4)
    assert sc.c_cross == RatFunc(W**-3 - W - W**9)
    assert sc.c_cross * CROSS_OFFSET == PRINTED_SKEIN["c_cross_printed"]


def test_clasp_coefficient_is_laurent():
    c = derive_skein_coefficients().c_clasp
    assert c.is_laurent()
    assert c.to_laurent() == -(W**4) + W**8 - W**12 + W**16 - W**20 + W**24


def test_skein_report_passes():
    rep = skein_report()
    assert rep.ok, str(rep)
    assert len(rep.results) == 7


def test_mirror_skein_coefficient():
    sc = derive_skein_coefficients()
    assert sc.c_id.mirror() == RatFunc(W**2 + W**-6 - W**-10)


def test_figure_one_constants_are_inert_data():
    assert len(FIGURE_ONE_COEFFICIENTS) == 4
    assert FIGURE_ONE_COEFFICIENTS[0] == W**3 - W**-1


def test_alpha_exp_of_scalar():
    order = 4
    a = AlphaSeries.alpha(order)
    x = BlockMatrix.identity(a)
    e = alpha_exp(x, order)
    expected = AlphaSeries([Fraction(1, 1), 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)], order)
    assert e.block(3)[0][0] == expected


def test_series_first_order_traces():
    ag = build_alpha_generators(1)
    s_traces = tuple(t.coeffs[0] for t in ag.s12.traces())
    # read off the printed diagonals of R12 at W = 1: (1,-1,-1,1), (-1,-1,1), (-1,1), (1)
    assert s_traces == (0, -1, 0, 1)
    assert tuple(t(1) for t in build_generators().R12.traces()) == s_traces


def test_series_consistency():
    rep = series_consistency_check(n_max=6, order=6)
    assert rep.ok, str(rep)
    assert len(rep.results) == 24


def test_series_requires_enough_order():
    with pytest.raises(ValueError):
        series_consistency_check(ag=build_alpha_generators(1), order=3)
    with pytest.raises(ValueError):
        series_consistency_check(order=0)


def test_degeneration():
    rep = w1_degeneration_check()
    assert rep.ok, str(rep)


def test_report_rendering():
    rep = Report("demo")
    rep.add("good", True)
    rep.add("bad", False, "because")
    assert not rep.ok
    assert rep.failures == ["bad"]
    text = str(rep)
    assert text.splitlines()[0] == "[FAIL] demo"
    assert "FAIL bad  (because)" in text
    assert json.loads(rep.to_json())["results"][1] == {"check": "bad", "ok": False, "detail": "because"}
