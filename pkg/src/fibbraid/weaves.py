"""Three-strand weaves: braids in which a single weft strand moves.

A weave body is an alternating product of even powers of the two elementary
generators, each exponent in {+-2, +-4}; each factor carries the weft once
or twice around one warp strand and back to the middle.  Endpoints other
than the middle add one positive boundary letter on the matching side:
starting at the top multiplies by sigma_2 on the right (it is applied
first), starting at the bottom by sigma_1, and symmetrically for the end
position on the left.  The weave length L counts body crossings only.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .braidword import BraidWord
from .constants import sigma_power

TOP = "top"
MIDDLE = "middle"
BOTTOM = "bottom"
POSITIONS = (TOP, MIDDLE, BOTTOM)

#: Boundary generator by position: the letter that moves the weft between
#: the middle and that position.
_BOUNDARY_GEN = {TOP: 2, BOTTOM: 1}

VALID_EXPONENTS = (-4, -2, 2, 4)


@dataclass(frozen=True)
class Weave:
    """Exponent sequence with alternating generators plus endpoints.

    ``first_gen`` is the generator of ``exponents[0]``; generators alternate
    from there.  Zero exponents are never stored: a body that effectively
    starts on the other generator is encoded by ``first_gen`` instead.
    """

    exponents: tuple[int, ...] = ()
    first_gen: int = 1
    start_pos: str = MIDDLE
    end_pos: str = MIDDLE

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        object.__setattr__(self, "exponents", exps)
        for e in exps:
            if e not in VALID_EXPONENTS:
                raise ValueError(f"weave exponents must be in {VALID_EXPONENTS}, got {e}")
        if self.first_gen not in (1, 2):
            raise ValueError(f"first_gen must be 1 or 2, got {self.first_gen}")
        if not exps and self.first_gen != 1:
            object.__setattr__(self, "first_gen", 1)
        for pos in (self.start_pos, self.end_pos):
            if pos not in POSITIONS:
                raise ValueError(f"unknown weft position {pos!r}")

    @property
    def length(self) -> int:
        """Body crossings only; boundary letters are counted separately."""
        return sum(abs(e) for e in self.exponents)

    @property
    def boundary_letters(self) -> int:
        return (self.start_pos != MIDDLE) + (self.end_pos != MIDDLE)

    @property
    def winding(self) -> int:
        """Signed crossings of the full weave, boundary letters included."""
        return sum(self.exponents) + self.boundary_letters

    def generator_of(self, i: int) -> int:
        """Generator index carrying exponent i (0-based)."""
        return self.first_gen if i % 2 == 0 else 3 - self.first_gen

    def mirrored(self) -> "Weave":
        """The weave reflected top <-> bottom (generators 1 <-> 2 swapped)."""
        flip = {TOP: BOTTOM, MIDDLE: MIDDLE, BOTTOM: TOP}
        return Weave(
            self.exponents,
            3 - self.first_gen if self.exponents else 1,
            flip[self.start_pos],
            flip[self.end_pos],
        )

    def to_json_dict(self) -> dict:
        return {
            "exponents": list(self.exponents),
            "first_gen": self.first_gen,
            "start": self.start_pos,
            "end": self.end_pos,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "Weave":
        return Weave(
            tuple(data["exponents"]),
            int(data["first_gen"]),
            data["start"],
            data["end"],
        )


def to_braid_word(weave: Weave) -> BraidWord:
    """Equivalent three-strand braid word, chronological letters.

    The mapping is structural (no canonicalization): boundary letters that
    share a generator with the adjacent body letter are kept separate.
    """
    letters: list[tuple[int, int]] = []
    if weave.start_pos != MIDDLE:
        letters.append((_BOUNDARY_GEN[weave.start_pos], 1))
    for i, e in enumerate(weave.exponents):
        letters.append((weave.generator_of(i), e))
    if weave.end_pos != MIDDLE:
        letters.append((_BOUNDARY_GEN[weave.end_pos], 1))
    return BraidWord(3, tuple(letters))


def body_product(exponents: tuple[int, ...], first_gen: int = 1) -> np.ndarray:
    """Product of the body letters only (no boundary), 3x3."""
    u = np.eye(3, dtype=complex)
    gen = first_gen
    for e in exponents:
        u = sigma_power(gen, e) @ u
        gen = 3 - gen
    return u


def weave_unitary(weave: Weave) -> np.ndarray:
    """Full 3x3 unitary of the weave, boundary letters included."""
    u = np.eye(3, dtype=complex)
    for g, p in to_braid_word(weave).letters:
        u = sigma_power(g, p) @ u
    return u
