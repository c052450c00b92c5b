import dataclasses
from fractions import Fraction

import pytest

from spin7link.blockmat import BlockMatrix
from spin7link.exactalg import AlphaSeries, RatFunc, W
from spin7link.repdata import (
    DELTA,
    S2_SUMMANDS,
    ValidationFailed,
    build_alpha_generators,
    build_generators,
    build_rep_table,
    check_alpha_generators,
    check_casimir_consistency,
    check_generators,
    constants_checksum,
    dump_constants,
)

# Frozen when the tables were transcribed and cross-checked; any edit to a
# stored entry changes the rendering and must be reviewed against the source.
CHECKSUM = "d3fa476c8bd934bce4d9b05c3a4b24b84e419d3fb73a0530fa7766af5ee616fd"


@pytest.fixture(scope="module")
def g():
    return build_generators()


@pytest.fixture(scope="module")
def ag():
    return build_alpha_generators(1)


def test_w_picture_examples(g):
    assert g.R12.block(3) == [[RatFunc(W**-3)]]
    assert g.R23.block(3) == [[RatFunc(W**-3)]]
    assert all(x.is_zero() for row in g.A12.block(0)[1:] for x in row)
    assert DELTA(1) == 8
    assert g.Delta == DELTA
    assert g.phi == RatFunc(DELTA, 8)


def test_w_picture_is_valid(g):
    assert check_generators(g) == []


def test_alpha_picture_examples(ag):
    a = AlphaSeries.alpha(1)
    diag = [ag.r12.block(0)[i][i] for i in range(4)]
    assert diag == [a * 21, a, a * 9, a * -3]
    assert [x.coeffs[0] for x in ag.a12.block(0)[0]] == [8, 4, 4, 1]
    assert ag.a12 * ag.a12 == ag.a12 * 8
    assert check_alpha_generators(ag) == []


def test_alpha_picture_extends_to_higher_order():
    ag6 = build_alpha_generators(6)
    assert ag6.order == 6
    assert check_alpha_generators(ag6) == []


def test_rep_table():
    t = build_rep_table()
    assert t.dim("Gamma(1,0,1)") == 48
    assert t.casimir("s") == 21
    dims = tuple(t.dim(n) for n in ("v", "l", "s", "Gamma(0,0,2)", "Gamma(1,0,1)", "Gamma(0,1,1)", "Gamma(0,0,3)"))
    cas = tuple(t.casimir(n) for n in ("v", "l", "s", "Gamma(0,0,2)", "Gamma(1,0,1)", "Gamma(0,1,1)", "Gamma(0,0,3)"))
    assert dims == (7, 21, 8, 35, 48, 112, 112)
    assert cas == (24, 40, 21, 48, 49, 69, 81)


def test_casimir_consistency(ag):
    t = build_rep_table()
    assert check_casimir_consistency(ag, t) == []
    # trivial summand: (2*21 - 0)/2 = 21, the top diagonal entry
    assert S2_SUMMANDS[0] == "trivial"
    assert ag.r12.block(0)[0][0] == AlphaSeries([0, Fraction(42, 2)], 1)


def test_typo_is_detected(g):
    blocks = [list(map(list, b)) for b in g.R12.blocks]
    blocks[1][0][1] = blocks[1][0][1] + W
    bad = dataclasses.replace(g, R12=BlockMatrix.from_blocks(blocks))
    failures = check_generators(bad)
    assert failures
    with pytest.raises(ValidationFailed) as exc:
        raise ValidationFailed(failures)
    assert exc.value.failures == failures


def test_wrong_delta_is_detected(g):
    bad = dataclasses.replace(g, Delta=DELTA * W)
    assert "A12^2 = Delta A12" in check_generators(bad)


def test_dump_names_every_constant():
    text = dump_constants()
    for name in ("Delta", "R12", "R23", "R12inv", "R23inv", "A12", "r12", "s12", "s23", "a12", "Gamma(0,0,3)"):
        assert name in text


def test_constants_checksum():
    assert constants_checksum() == CHECKSUM
