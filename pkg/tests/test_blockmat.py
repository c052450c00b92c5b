import pytest
from hypothesis import given
from hypothesis import strategies as st

from spin7link.blockmat import (
    BlockMatrix,
    NotInSpan,
    Singular,
    bm_block_traces,
    bm_charpoly,
    bm_inverse,
    bm_mul,
    bm_solve_span,
    mat_charpoly,
    mat_inverse,
    poly_from_roots,
)
from spin7link.exactalg import RatFunc, W
from spin7link.repdata import DELTA, build_generators

G = build_generators()


def rf(x):
    return RatFunc(x)


# small integer block matrices keep hypothesis fast while still exercising
# the generic fraction-field code path
small_int = st.integers(-3, 3)


@st.composite
def block_matrices(draw):
    blocks = []
    for n in (4, 3, 2, 1):
        blocks.append([[draw(small_int) for _ in range(n)] for _ in range(n)])
    return BlockMatrix.from_blocks(blocks)


@st.composite
def unitriangular(draw):
    """Invertible over Z: unit upper triangular times a W-power diagonal."""
    blocks = []
    for n in (4, 3, 2, 1):
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if j < i:
                    row.append(0)
                elif j == i:
                    row.append(W ** draw(st.integers(-2, 2)))
                else:
                    row.append(draw(small_int) + draw(small_int) * W)
            rows.append(row)
        blocks.append(rows)
    return BlockMatrix.from_blocks(blocks)


def test_identity_is_neutral():
    assert BlockMatrix.identity() * G.R12 == G.R12
    assert G.R12 * BlockMatrix.identity() == G.R12


def test_clasp_is_quasi_idempotent():
    assert bm_mul(G.A12, G.A12) == G.A12 * DELTA


def test_inverse_of_braid_generator():
    assert G.R12 * bm_inverse(G.R12) == BlockMatrix.identity()
    assert bm_inverse(G.R12) * G.R12 == BlockMatrix.identity()


def test_inverse_of_diagonal_block():
    d = [[W**21, 0, 0, 0], [0, -W, 0, 0], [0, 0, -(W**9), 0], [0, 0, 0, W**-3]]
    inv = mat_inverse([[rf(x) for x in row] for row in d])
    expected = [W**-21, -(W**-1), -(W**-9), W**3]
    for i in range(4):
        for j in range(4):
            assert inv[i][j] == (rf(expected[i]) if i == j else rf(0))


def test_zero_is_singular():
    with pytest.raises(Singular):
        bm_inverse(BlockMatrix.zero())


def test_traces():
    assert BlockMatrix.identity().traces() == (4, 3, 2, 1)
    expected = (
        W**21 - W - W**9 + W**-3,
        -W - W**9 + W**-3,
        -W + W**-3,
        W**-3,
    )
    assert bm_block_traces(G.R12) == tuple(rf(t) for t in expected)


def test_charpolys():
    roots = [W**21, -W, -(W**9), W**-3]
    assert bm_charpoly(G.R12, 0) == poly_from_roots([rf(r) for r in roots])
    assert bm_charpoly(G.R23, 3) == [rf(-(W**-3)), rf(1)]
    assert mat_charpoly([[rf(1), rf(0)], [rf(0), rf(1)]]) == [rf(1), rf(-2), rf(1)]


def test_solve_span():
    I = BlockMatrix.identity()
    assert bm_solve_span(I, [I]) == [rf(1)]
    coeffs = bm_solve_span(G.R12 * G.R12, [G.R12, I, G.R12inv, G.A12])
    assert len(coeffs) == 4
    recombined = G.R12 * coeffs[0] + I * coeffs[1] + G.R12inv * coeffs[2] + G.A12 * coeffs[3]
    assert recombined == G.R12 * G.R12
    with pytest.raises(NotInSpan):
        bm_solve_span(G.A12, [I])


def test_debug_rendering_lists_every_block():
    text = str(G.A12)
    assert text.count("block") == 4


@given(block_matrices(), block_matrices(), block_matrices())
def test_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@given(unitriangular())
def test_inverse_both_sides(a):
    I = BlockMatrix.identity()
    assert a * a.inverse() == I
    assert a.inverse() * a == I


@given(block_matrices(), unitriangular())
def test_conjugation_invariance(m, p):
    c = p * m * p.inverse()
    assert c.traces() == m.traces()
    for i in range(4):
        assert c.charpoly(i) == m.charpoly(i)


@given(block_matrices(), block_matrices(), st.integers(-3, 3), st.integers(-3, 3))
def test_solve_span_recombines(a, b, x, y):
    target = a * x + b * y
    try:
        coeffs = bm_solve_span(target, [a, b])
    except ArithmeticError:
        return
    assert a * coeffs[0] + b * coeffs[1] == target
