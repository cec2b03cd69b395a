"""Braid words: sequences of generator powers on n strands.

Letters are stored in application (chronological) order: ``letters[0]`` is
the first interchange performed, i.e. the rightmost factor of the matrix
product.  The word [(1, 2), (2, -2), (1, 4)] therefore evaluates to
sigma_1^4 sigma_2^-2 sigma_1^2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable


@dataclass(frozen=True)
class BraidWord:
    n_strands: int
    letters: tuple[tuple[int, int], ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.n_strands < 2:
            raise ValueError(f"need at least 2 strands, got {self.n_strands}")
        letters = tuple((int(g), int(p)) for g, p in self.letters)
        object.__setattr__(self, "letters", letters)
        for g, p in letters:
            if not 1 <= g <= self.n_strands - 1:
                raise ValueError(f"generator {g} out of range for {self.n_strands} strands")
            if p == 0:
                raise ValueError("zero powers are not allowed in a braid word")

    @property
    def length(self) -> int:
        """Number of elementary crossings, sum |power|."""
        return sum(abs(p) for _, p in self.letters)

    @property
    def winding(self) -> int:
        """Signed crossing count, sum of powers."""
        return sum(p for _, p in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.n_strands, tuple((g, -p) for g, p in reversed(self.letters)))

    def then(self, other: "BraidWord") -> "BraidWord":
        """Concatenate: self applied first, then other."""
        if other.n_strands != self.n_strands:
            raise ValueError("strand-count mismatch in concatenation")
        return BraidWord(self.n_strands, self.letters + other.letters)

    def to_json_dict(self) -> dict:
        return {
            "strands": self.n_strands,
            "word": [{"gen": g, "pow": p} for g, p in self.letters],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @staticmethod
    def from_json_dict(data: dict) -> "BraidWord":
        return BraidWord(
            int(data["strands"]),
            tuple((int(l["gen"]), int(l["pow"])) for l in data["word"]),
        )

    @staticmethod
    def from_json(text: str) -> "BraidWord":
        return BraidWord.from_json_dict(json.loads(text))


def _reduce_power(p: int) -> int:
    """Reduce a power modulo 10 into (-5, 5]; valid because sigma_i^10 = 1."""
    r = p % 10
    if r > 5:
        r -= 10
    return r


def canonicalize(word: BraidWord) -> BraidWord:
    """Merge adjacent equal-generator letters and reduce powers into (-5, 5].

    Repeats to a fixed point.  The evaluated unitary is unchanged; the
    winding changes only by multiples of 10, so the winding class survives.
    """
    letters = list(word.letters)
    changed = True
    while changed:
        changed = False
        out: list[tuple[int, int]] = []
        for g, p in letters:
            if out and out[-1][0] == g:
                out[-1] = (g, out[-1][1] + p)
                changed = True
            else:
                out.append((g, p))
        reduced: list[tuple[int, int]] = []
        for g, p in out:
            r = _reduce_power(p)
            if r != p:
                changed = True
            if r != 0:
                reduced.append((g, r))
        letters = reduced
    return BraidWord(word.n_strands, tuple(letters))


def random_word(
    n_strands: int,
    n_letters: int,
    rng,
    max_power: int = 4,
) -> BraidWord:
    """Uniform random braid word, for property tests."""
    letters = []
    for _ in range(n_letters):
        g = int(rng.integers(1, n_strands))
        p = 0
        while p == 0:
            p = int(rng.integers(-max_power, max_power + 1))
        letters.append((g, p))
    return BraidWord(n_strands, tuple(letters))
