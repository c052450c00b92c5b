"""
Braid words on two or three strands and links given as closures of them.

A word is a sequence of nonzero integers: ``i`` stands for sigma_i and
``-i`` for its inverse. Only sigma_1 exists on two strands; the single
strand carries only the empty word, whose closure is the unknot.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

__all__ = [
    "BadToken",
    "GeneratorOutOfRange",
    "BraidWord",
    "Closure",
    "ClosureInfo",
    "LinkPresentation",
    "NORMALIZATIONS",
    "parse_braid",
    "closure_components",
    "exponent_sum",
    "self_writhe",
]

MAX_STRANDS = 3
NORMALIZATIONS = ("framed", "global-writhe")


class BadToken(ValueError):
    pass


class GeneratorOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if not 1 <= self.strands <= MAX_STRANDS:
            raise ValueError(f"only 1 to {MAX_STRANDS} strands are supported, got {self.strands}")
        letters = tuple(int(g) for g in self.letters)
        for g in letters:
            if g == 0 or abs(g) >= self.strands:
                raise GeneratorOutOfRange(f"generator {g} does not exist on {self.strands} strands")
        object.__setattr__(self, "letters", letters)

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: BraidWord) -> BraidWord:
        strands = max(self.strands, other.strands)
        return BraidWord(strands, self.letters + other.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def mirror(self) -> BraidWord:
        """Switch every crossing; the closure becomes the mirror image."""
        return BraidWord(self.strands, tuple(-g for g in self.letters))

    def rotate(self, k: int) -> BraidWord:
        if not self.letters:
            return self
        k %= len(self.letters)
        return BraidWord(self.strands, self.letters[k:] + self.letters[:k])

    def embed(self, strands: int) -> BraidWord:
        return BraidWord(strands, self.letters)

    def permutation(self) -> tuple[int, ...]:
        """perm[p] = bottom position of the strand entering at top position p."""
        pos = list(range(self.strands))  # pos[p] = current position of strand p
        at = list(range(self.strands))  # at[q] = strand at position q
        for g in self.letters:
            i = abs(g) - 1
            a, b = at[i], at[i + 1]
            at[i], at[i + 1] = b, a
            pos[a], pos[b] = i + 1, i
        return tuple(pos)

    def __str__(self):
        return " ".join(str(g) for g in self.letters)


def parse_braid(text: str, strands: int) -> BraidWord:
    """
    Parse whitespace- or comma-separated signed generator indices.

    >>> parse_braid("1 2 -1", 3).letters
    (1, 2, -1)
    """
    letters = []
    for tok in text.replace(",", " ").split():
        try:
            g = int(tok)
        except ValueError:
            raise BadToken(f"not a generator: {tok!r}") from None
        if g == 0:
            raise BadToken("generator 0 does not exist")
        if abs(g) >= strands:
            raise GeneratorOutOfRange(f"generator {g} does not exist on {strands} strands")
        letters.append(g)
    return BraidWord(strands, tuple(letters))


@dataclass(frozen=True)
class ClosureInfo:
    n_components: int
    # component index of the strand entering at each top position
    component_of: tuple[int, ...]
    # per letter: component indices of the two crossing arcs
    letter_components: tuple[tuple[int, int], ...]

    @property
    def self_crossing(self) -> tuple[bool, ...]:
        return tuple(a == b for a, b in self.letter_components)


def closure_components(w: BraidWord) -> ClosureInfo:
    perm = w.permutation()
    comp = [-1] * w.strands
    n = 0
    for start in range(w.strands):
        if comp[start] >= 0:
            continue
        p = start
        while comp[p] < 0:
            comp[p] = n
            p = perm[p]
        n += 1
    at = list(range(w.strands))
    letters = []
    for g in w.letters:
        i = abs(g) - 1
        letters.append((comp[at[i]], comp[at[i + 1]]))
        at[i], at[i + 1] = at[i + 1], at[i]
    return ClosureInfo(n, tuple(comp), tuple(letters))


def exponent_sum(w: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in w.letters)


def self_writhe(w: BraidWord) -> int:
    """Signed count of the crossings whose two arcs lie on the same component."""
    info = closure_components(w)
    return sum(
        (1 if g > 0 else -1) for g, same in zip(w.letters, info.self_crossing) if same
    )


@dataclass(frozen=True)
class Closure:
    word: BraidWord
    mirror: bool = False

    def effective_word(self) -> BraidWord:
        return self.word.mirror() if self.mirror else self.word


@dataclass(frozen=True)
class LinkPresentation:
    """A disjoint union of braid closures, evaluated under one normalization."""

    components: tuple[Closure, ...]
    normalization: str = "framed"

    def __post_init__(self):
        if self.normalization not in NORMALIZATIONS:
            raise ValueError(f"unknown normalization {self.normalization!r}")
        object.__setattr__(self, "components", tuple(self.components))

    @classmethod
    def single(cls, word: BraidWord, mirror: bool = False, normalization: str = "framed") -> LinkPresentation:
        return cls((Closure(word, mirror),), normalization)

    def to_json(self) -> str:
        return json.dumps(
            {
                "components": [
                    {"braid": str(c.word), "strands": c.word.strands, "mirror": c.mirror}
                    for c in self.components
                ],
                "normalization": self.normalization,
            }
        )

    @classmethod
    def from_json(cls, text: str | dict) -> LinkPresentation:
        obj = json.loads(text) if isinstance(text, str) else text
        if not isinstance(obj, dict) or "components" not in obj:
            raise ValueError("link presentation needs a 'components' list")
        comps = []
        for c in obj["components"]:
            unknown = set(c) - {"braid", "strands", "mirror"}
            if unknown:
                raise ValueError(f"unknown component keys: {sorted(unknown)}")
            comps.append(Closure(parse_braid(c.get("braid", ""), int(c.get("strands", 3))), bool(c.get("mirror", False))))
        return cls(tuple(comps), obj.get("normalization", "framed"))
