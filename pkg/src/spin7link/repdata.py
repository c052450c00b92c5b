"""
Explicit constants of the spinor representation of so7 on three strands.

Two pictures of the same B3 representation are housed here:

- the alpha-picture: the images r12, s12, s23, a12 of the elementary
  diagrams, with entries linear in alpha;
- the W-picture: the braid generators R12, R23 and the cap-cup A12 with
  Laurent (or rational) entries in W = exp(-alpha/2), together with the
  unknot value Delta.

Every constructor validates its output against the algebraic identities
the matrices must satisfy, so a transcription error surfaces as
``ValidationFailed`` instead of a wrong invariant downstream.
"""
from __future__ import annotations

import hashlib
from fractions import Fraction
from dataclasses import dataclass
from functools import lru_cache

from .blockmat import BlockMatrix, poly_from_roots
from .exactalg import AlphaSeries, LaurentPoly, RatFunc, W

__all__ = [
    "ValidationFailed",
    "GeneratorSet",
    "AlphaGeneratorSet",
    "RepTable",
    "DELTA",
    "SPECTRA",
    "build_generators",
    "build_alpha_generators",
    "build_rep_table",
    "check_generators",
    "check_alpha_generators",
    "check_casimir_consistency",
    "dump_constants",
    "constants_checksum",
]


class ValidationFailed(ValueError):
    """A stored constant violates an identity it must satisfy."""

    def __init__(self, failures: list[str]):
        self.failures = failures
        super().__init__("constant validation failed: " + "; ".join(failures))


# Unknot value, W^-18 (W^20 + 1)(W^12 + 1)(W^4 + 1).
DELTA = W**-18 * (W**20 + 1) * (W**12 + 1) * (W**4 + 1)

# Eigenvalues of the braid generators on each block, in printed diagonal order.
SPECTRA = (
    (W**21, -W, -(W**9), W**-3),
    (-W, -(W**9), W**-3),
    (-W, W**-3),
    (W**-3,),
)


def _r12_blocks():
    c = 1 - W**4 + W**8
    return [
        [
            [W**21, -W * c, -(W**9) * c, W**-3],
            [0, -W, -(1 - W**4) * W**9, W**-3],
            [0, 0, -(W**9), W**-3],
            [0, 0, 0, W**-3],
        ],
        [
            [-W, -(W**-11) * (W**20 - 1), -(W**9)],
            [0, -(W**9), -(W**9)],
            [0, 0, W**-3],
        ],
        [
            [-W, -W],
            [0, W**-3],
        ],
        [[W**-3]],
    ]


def _r23_blocks():
    c = W**8 - W**4 + 1
    return [
        [
            [W**-3, 0, 0, 0],
            [W**9, -(W**9), 0, 0],
            [W**-3, W**-3 * (W**4 - 1), -W, 0],
            [W**9, -(W**9) * c, -(W**13) * c, W**21],
        ],
        [
            [W**-3, 0, 0],
            [W**9, -(W**9), 0],
            [-(W**9), W**-11 * (W**20 - 1), -W],
        ],
        [
            [W**-3, 0],
            [-(W**-3), -W],
        ],
        [[W**-3]],
    ]


def _a12_blocks():
    scale = RatFunc(DELTA, (W**20 + 1) * (W**4 + 1))
    top = [
        RatFunc((W**20 + 1) * (W**4 + 1)),
        RatFunc(-(W**12 + 1)),
        RatFunc(-(W**4) * (W**16 + 1)),
        RatFunc(W**12, W**12 + 1),
    ]
    zero = RatFunc(0)
    return [
        [[scale * x for x in top]] + [[zero] * 4 for _ in range(3)],
        [[zero] * 3 for _ in range(3)],
        [[zero] * 2 for _ in range(2)],
        [[zero]],
    ]


@dataclass(frozen=True)
class GeneratorSet:
    """Images of the elementary three-strand tangles in the W-picture."""

    R12: BlockMatrix
    R23: BlockMatrix
    R12inv: BlockMatrix
    R23inv: BlockMatrix
    A12: BlockMatrix
    Delta: LaurentPoly
    phi: RatFunc

    def letter(self, g: int) -> BlockMatrix:
        """Matrix of the braid letter sigma_|g|^sign(g)."""
        return {1: self.R12, -1: self.R12inv, 2: self.R23, -2: self.R23inv}[g]


@dataclass(frozen=True)
class AlphaGeneratorSet:
    """Images of r, s (on both strand pairs) and a in the alpha-picture."""

    r12: BlockMatrix
    s12: BlockMatrix
    s23: BlockMatrix
    a12: BlockMatrix
    order: int

    @property
    def alpha(self) -> AlphaSeries:
        return AlphaSeries.alpha(self.order)


@dataclass(frozen=True)
class RepTable:
    """Dimension and Casimir eigenvalue (Casimir = 40 x Killing) per irreducible."""

    entries: dict

    def dim(self, name: str) -> int:
        return self.entries[name][0]

    def casimir(self, name: str) -> int:
        return self.entries[name][1]


_REP_TABLE = {
    "v": (7, 24),
    "l": (21, 40),
    "s": (8, 21),
    "Gamma(0,0,2)": (35, 48),
    "Gamma(1,0,1)": (48, 49),
    "Gamma(0,1,1)": (112, 69),
    "Gamma(0,0,3)": (112, 81),
}

# Summands of s (x) s in the order of r12's diagonal; the trivial one has Casimir 0.
S2_SUMMANDS = ("trivial", "l", "v", "Gamma(0,0,2)")


def build_rep_table() -> RepTable:
    return RepTable(dict(_REP_TABLE))


# alpha-coefficients of r12; s12, s23, a12 are constant
_R12_ALPHA = [
    [[21, 10, 8, 0], [0, 1, -4, 0], [0, 0, 9, 6], [0, 0, 0, -3]],
    [[1, -20, -12], [0, 9, 6], [0, 0, -3]],
    [[-3, -2], [0, 1]],
    [[-3]],
]
_S12 = [
    [[1, 1, 1, 1], [0, -1, 0, -1], [0, 0, -1, -1], [0, 0, 0, 1]],
    [[-1, 0, 1], [0, -1, -1], [0, 0, 1]],
    [[1, 1], [0, -1]],
    [[1]],
]
_S23 = [
    [[1, 0, 0, 0], [-1, -1, 0, 0], [-1, 0, -1, 0], [1, 1, 1, 1]],
    [[1, 0, 0], [-1, -1, 0], [1, 0, -1]],
    [[-1, 0], [1, 1]],
    [[1]],
]
_A12 = [
    [[8, 4, 4, 1], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]],
    [[0] * 3 for _ in range(3)],
    [[0] * 2 for _ in range(2)],
    [[0]],
]


def _alpha_matrix(table, order: int, degree: int) -> BlockMatrix:
    def entry(c):
        return AlphaSeries([0] * degree + [c], order)

    return BlockMatrix.from_blocks(
        [[[entry(c) for c in row] for row in b] for b in table], coerce=None
    )


def _spectrum_ok(m: BlockMatrix) -> list[int]:
    """Indices of blocks whose characteristic polynomial does not match SPECTRA."""
    bad = []
    for i, roots in enumerate(SPECTRA):
        expected = poly_from_roots([RatFunc(r) for r in roots])
        if m.charpoly(i) != expected:
            bad.append(i)
    return bad


def check_generators(g: GeneratorSet) -> list[str]:
    """Names of the identities that ``g`` violates (empty when valid)."""
    failures = []
    I = BlockMatrix.identity()
    if g.R12 * g.R23 * g.R12 != g.R23 * g.R12 * g.R23:
        failures.append("braid relation R12 R23 R12 = R23 R12 R23")
    if g.A12 * g.R12 * g.R23 * g.A12 != g.A12:
        failures.append("A12 R12 R23 A12 = A12")
    if g.A12 * g.A12 != g.A12 * RatFunc(g.Delta):
        failures.append("A12^2 = Delta A12")
    if g.R12 * g.R12inv != I or g.R12inv * g.R12 != I:
        failures.append("R12 inverse")
    if g.R23 * g.R23inv != I or g.R23inv * g.R23 != I:
        failures.append("R23 inverse")
    for name, m in (("R12", g.R12), ("R23", g.R23)):
        for i in _spectrum_ok(m):
            failures.append(f"spectrum of {name} block {i}")
    if g.phi * 8 != RatFunc(g.Delta):
        failures.append("Delta = 8 phi")
    return failures


def check_alpha_generators(ag: AlphaGeneratorSet) -> list[str]:
    failures = []
    one = AlphaSeries.constant(1, ag.order)
    I = BlockMatrix.identity(one)
    if ag.s12 * ag.s12 != I:
        failures.append("s12^2 = 1")
    if ag.s23 * ag.s23 != I:
        failures.append("s23^2 = 1")
    if (ag.s12 * ag.s23) ** 3 != I:
        failures.append("(s12 s23)^3 = 1")
    if ag.s12 * ag.r12 * ag.s12 != ag.r12:
        failures.append("s12 r12 s12 = r12")
    if ag.a12 * ag.a12 != ag.a12 * 8:
        failures.append("a12^2 = 8 a12")
    ra = ag.a12 * (ag.alpha * 21)
    if ag.r12 * ag.a12 != ra:
        failures.append("r12 a12 = 21 alpha a12")
    if ag.a12 * ag.r12 != ra:
        failures.append("a12 r12 = 21 alpha a12")
    return failures


def check_casimir_consistency(ag: AlphaGeneratorSet, table: RepTable) -> list[str]:
    """
    The r12 eigenvalue on the summand X of s (x) s is alpha (2 c_s - c_X) / 2,
    where c_s = 21 is the Casimir on the spinor representation.
    """
    failures = []
    block = ag.r12.blocks[0]
    c_s = table.casimir("s")
    for i, name in enumerate(S2_SUMMANDS):
        c_x = 0 if name == "trivial" else table.casimir(name)
        expected = ag.alpha * Fraction(2 * c_s - c_x, 2)
        if block[i][i] != expected:
            failures.append(f"r12 diagonal entry {i} vs Casimir of {name}")
    return failures


@lru_cache(maxsize=None)
def build_generators() -> GeneratorSet:
    """
    The W-picture generators, validated. Cached: the result is immutable.
    """
    R12 = BlockMatrix.from_blocks(_r12_blocks())
    R23 = BlockMatrix.from_blocks(_r23_blocks())
    A12 = BlockMatrix.from_blocks(_a12_blocks())
    g = GeneratorSet(
        R12=R12,
        R23=R23,
        R12inv=R12.inverse(),
        R23inv=R23.inverse(),
        A12=A12,
        Delta=DELTA,
        phi=RatFunc(DELTA, 8),
    )
    failures = check_generators(g)
    if failures:
        raise ValidationFailed(failures)
    return g


@lru_cache(maxsize=None)
def build_alpha_generators(order: int = 6) -> AlphaGeneratorSet:
    ag = AlphaGeneratorSet(
        r12=_alpha_matrix(_R12_ALPHA, order, 1),
        s12=_alpha_matrix(_S12, order, 0),
        s23=_alpha_matrix(_S23, order, 0),
        a12=_alpha_matrix(_A12, order, 0),
        order=order,
    )
    failures = check_alpha_generators(ag) + check_casimir_consistency(ag, build_rep_table())
    if failures:
        raise ValidationFailed(failures)
    return ag


def dump_constants() -> str:
    """Canonical text rendering of every stored constant."""
    g = build_generators()
    ag = build_alpha_generators(1)
    table = build_rep_table()
    out = [f"Delta = {g.Delta}", f"phi = {g.phi}", ""]
    for name in ("R12", "R23", "R12inv", "R23inv", "A12"):
        out += [f"{name} =", str(getattr(g, name)), ""]
    for name in ("r12", "s12", "s23", "a12"):
        out += [f"{name} =", str(getattr(ag, name)), ""]
    out.append("representation  dimension  casimir")
    for name, (d, c) in table.entries.items():
        out.append(f"{name:<15} {d:>9}  {c:>7}")
    return "\n".join(out) + "\n"


def constants_checksum() -> str:
    return hashlib.sha256(dump_constants().encode()).hexdigest()
