"""
Exact linear algebra on block-diagonal matrices with block sizes (4, 3, 2, 1).

This is the algebra M4 x M3 x M2 x M1 in which the three-strand braid group
is represented. Entries are ``RatFunc`` for the W-picture and
``AlphaSeries`` for the alpha-picture; only ring operations are needed for
the latter, so everything except inversion and solving is entry-agnostic.

Dense matrices are plain lists of rows.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

from .exactalg import RatFunc

__all__ = [
    "BLOCK_SIZES",
    "BlockMatrix",
    "Singular",
    "NotInSpan",
    "DependentBasis",
    "mat_mul",
    "mat_det",
    "mat_inverse",
    "mat_charpoly",
    "solve_linear",
    "bm_solve_span",
    "poly_from_roots",
]

BLOCK_SIZES = (4, 3, 2, 1)


class Singular(ArithmeticError):
    pass


class NotInSpan(ArithmeticError):
    pass


class DependentBasis(ArithmeticError):
    pass


Matrix = list  # list[list[entry]]


def _zero_like(x):
    return x * 0


def _one_like(x):
    return x * 0 + 1


def identity(n: int, one=None):
    one = RatFunc(1) if one is None else one
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m, p = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = a[i][0] * b[0][j]
            for k in range(1, m):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _minor(a: Matrix, i: int, j: int) -> Matrix:
    return [row[:j] + row[j + 1:] for k, row in enumerate(a) if k != i]


def mat_det(a: Matrix):
    """Determinant by cofactor expansion along the first row (n <= 4 here)."""
    n = len(a)
    if n == 1:
        return a[0][0]
    if n == 2:
        return a[0][0] * a[1][1] - a[0][1] * a[1][0]
    total = None
    for j in range(n):
        if _is_zero(a[0][j]):
            continue
        term = a[0][j] * mat_det(_minor(a, 0, j))
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return total if total is not None else _zero_like(a[0][0])


def _is_zero(x) -> bool:
    return x.is_zero() if hasattr(x, "is_zero") else x == 0


def _row_echelon(rows: list[list[RatFunc]], ncols: int) -> tuple[list[list[RatFunc]], list[int]]:
    """
    Reduced row echelon form by Gauss-Jordan elimination over the fraction
    field, taking the first nonzero entry in each column as pivot.
    Returns the reduced rows and the pivot columns.
    """
    rows = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if not rows[i][c].is_zero()), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][c].is_zero():
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def mat_inverse(a: Matrix) -> Matrix:
    n = len(a)
    one, zero = RatFunc(1), RatFunc(0)
    aug = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(a)]
    red, pivots = _row_echelon(aug, n)
    if [p for p in pivots if p < n] != list(range(n)):
        raise Singular("matrix is singular")
    return [row[n:] for row in red]


def solve_linear(a: Matrix, b: Sequence) -> list:
    """
    Solve ``a x = b`` for x, where ``a`` has full column rank. Extra rows
    must be consistent.
    """
    rows = len(a)
    cols = len(a[0])
    aug = [list(a[i]) + [b[i]] for i in range(rows)]
    red, pivots = _row_echelon(aug, cols + 1)
    if [p for p in pivots if p < cols] != list(range(cols)):
        raise DependentBasis("columns are linearly dependent")
    if cols in pivots:
        raise NotInSpan("inconsistent linear system")
    return [red[i][cols] for i in range(cols)]


def _poly_mul(p: list, q: list) -> list:
    out = [p[0] * 0 for _ in range(len(p) + len(q) - 1)]
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def _poly_add(p: list, q: list) -> list:
    if len(p) < len(q):
        p, q = q, p
    return [x + (q[i] if i < len(q) else x * 0) for i, x in enumerate(p)]


def mat_charpoly(a: Matrix) -> list:
    """
    Coefficients (ascending powers of x) of det(x*I - a), computed by
    cofactor expansion with polynomial entries, so no division occurs.
    """
    n = len(a)
    one = _one_like(a[0][0])
    zero = one * 0
    xm = [[[zero - a[i][j], one] if i == j else [zero - a[i][j]] for j in range(n)] for i in range(n)]

    def det(m):
        if len(m) == 1:
            return m[0][0]
        total = [zero]
        for j in range(len(m)):
            term = _poly_mul(m[0][j], det(_minor(m, 0, j)))
            if j % 2:
                term = [zero - t for t in term]
            total = _poly_add(total, term)
        return total

    coeffs = det(xm)
    return coeffs[: n + 1]


def poly_from_roots(roots: Sequence) -> list:
    """Ascending coefficients of prod (x - r)."""
    one = _one_like(roots[0]) if roots else RatFunc(1)
    p = [one]
    for r in roots:
        p = _poly_mul(p, [one * 0 - r, one])
    return p


@dataclass(frozen=True)
class BlockMatrix:
    """
    An element of M4 x M3 x M2 x M1, stored as four dense blocks.

    The entries are immutable, so BlockMatrix values can be shared freely.
    """

    blocks: tuple

    def __post_init__(self):
        blocks = tuple(tuple(tuple(row) for row in b) for b in self.blocks)
        if tuple(len(b) for b in blocks) != BLOCK_SIZES or any(
            len(row) != len(b) for b in blocks for row in b
        ):
            raise ValueError(f"blocks must be square of sizes {BLOCK_SIZES}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks, coerce: Callable | None = RatFunc._coerce) -> BlockMatrix:
        if coerce is not None:
            blocks = [[[coerce(x) for x in row] for row in b] for b in blocks]
        return cls(tuple(blocks))

    @classmethod
    def identity(cls, one=None) -> BlockMatrix:
        return cls(tuple(identity(n, one) for n in BLOCK_SIZES))

    @classmethod
    def zero(cls, zero=None) -> BlockMatrix:
        zero = RatFunc(0) if zero is None else zero
        return cls(tuple([[zero] * n for _ in range(n)] for n in BLOCK_SIZES))

    @classmethod
    def diagonal(cls, diags) -> BlockMatrix:
        """Build from four diagonals (lists of entries)."""
        blocks = []
        for n, d in zip(BLOCK_SIZES, diags):
            d = [x if RatFunc._coerce(x) is None else RatFunc._coerce(x) for x in d]
            zero = d[0] * 0
            blocks.append([[d[i] if i == j else zero for j in range(n)] for i in range(n)])
        return cls(tuple(blocks))

    def block(self, i: int) -> list[list]:
        return [list(r) for r in self.blocks[i]]

    def entries(self):
        for b in self.blocks:
            for row in b:
                yield from row

    def map(self, f: Callable) -> BlockMatrix:
        return BlockMatrix(tuple(tuple(tuple(f(x) for x in row) for row in b) for b in self.blocks))

    def __mul__(self, other):
        if isinstance(other, BlockMatrix):
            return BlockMatrix(tuple(mat_mul(a, b) for a, b in zip(self.blocks, other.blocks)))
        return self.map(lambda x: x * other)

    def __rmul__(self, other):
        return self.map(lambda x: other * x)

    def __add__(self, other: BlockMatrix) -> BlockMatrix:
        return BlockMatrix(tuple(mat_add(a, b) for a, b in zip(self.blocks, other.blocks)))

    def __sub__(self, other: BlockMatrix) -> BlockMatrix:
        return self + other * -1

    def __neg__(self) -> BlockMatrix:
        return self * -1

    def __pow__(self, n: int) -> BlockMatrix:
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = BlockMatrix(tuple(identity(len(b), _one_like(b[0][0])) for b in self.blocks))
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> BlockMatrix:
        return BlockMatrix(tuple(mat_inverse(b) for b in self.blocks))

    def traces(self) -> tuple:
        out = []
        for b in self.blocks:
            t = b[0][0]
            for i in range(1, len(b)):
                t = t + b[i][i]
            out.append(t)
        return tuple(out)

    def charpoly(self, block: int) -> list:
        if not 0 <= block < len(BLOCK_SIZES):
            raise IndexError(f"block index {block} out of range")
        return mat_charpoly(self.blocks[block])

    def determinants(self) -> tuple:
        return tuple(mat_det(b) for b in self.blocks)

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.entries())

    def __str__(self):
        out = []
        for n, b in zip(BLOCK_SIZES, self.blocks):
            cells = [[str(x) for x in row] for row in b]
            widths = [max(len(cells[i][j]) for i in range(n)) for j in range(n)]
            out.append(f"block {n}x{n}:")
            for row in cells:
                out.append("  [ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]")
        return "\n".join(out)


# function-style aliases used throughout the package
def bm_mul(a: BlockMatrix, b: BlockMatrix) -> BlockMatrix:
    return a * b


def bm_add(a: BlockMatrix, b: BlockMatrix) -> BlockMatrix:
    return a + b


def bm_scale(a: BlockMatrix, c) -> BlockMatrix:
    return a * c


def bm_inverse(a: BlockMatrix) -> BlockMatrix:
    return a.inverse()


def bm_block_traces(a: BlockMatrix) -> tuple:
    return a.traces()


def bm_charpoly(a: BlockMatrix, block: int) -> list:
    return a.charpoly(block)


def bm_solve_span(target: BlockMatrix, basis: Sequence[BlockMatrix], blocks: Sequence[int] | None = None) -> list[RatFunc]:
    """
    Coefficients c with ``target == sum(c[i] * basis[i])``, comparing only
    the selected blocks (all four by default).

    Raises DependentBasis if the basis is linearly dependent on those blocks,
    NotInSpan if the target is not a combination of it.
    """
    blocks = range(len(BLOCK_SIZES)) if blocks is None else blocks

    def flat(m: BlockMatrix) -> list:
        return [x for i in blocks for row in m.blocks[i] for x in row]

    cols = [flat(b) for b in basis]
    rhs = flat(target)
    a = [[col[r] for col in cols] for r in range(len(rhs))]
    return solve_linear(a, rhs)
