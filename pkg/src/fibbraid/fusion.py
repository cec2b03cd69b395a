"""Fusion-path Hilbert spaces for n Fibonacci anyons and braid generators.

A basis state of n anyons with fixed total charge is the sequence of prefix
charges g_1 .. g_n (g_k = total charge of the first k anyons), a path on the
Bratteli diagram.  Braid generator i acts only on g_i, with matrix elements
fixed by the local triple (g_{i-1}, g_i, g_{i+1}) through the F and R
matrices; the boundary convention g_0 = 0 makes generator 1 diagonal.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .braidword import BraidWord
from .constants import TAU, SQRT_TAU

CHARGES = (0, 1)

_R_PHASE = {0: np.exp(-4j * np.pi / 5.0), 1: np.exp(3j * np.pi / 5.0)}

# The 2x2 mixing block F diag(R0, R1) F for a (1, x, 1) local triple.
_F_BLOCK = np.array([[TAU, SQRT_TAU], [SQRT_TAU, -TAU]], dtype=complex)
_B_BLOCK = _F_BLOCK @ np.diag([_R_PHASE[0], _R_PHASE[1]]) @ _F_BLOCK
_B_BLOCK.setflags(write=False)


def fuse(a: int, b: int) -> tuple[int, ...]:
    """Fusion channels of two Fibonacci charges: 1 x 1 = 0 + 1."""
    if a not in CHARGES or b not in CHARGES:
        raise ValueError(f"invalid charges ({a}, {b})")
    if a == 0:
        return (b,)
    if b == 0:
        return (a,)
    return (0, 1)


@dataclass(frozen=True)
class FusionBasis:
    """Ordered fusion paths for n anyons with fixed total charge."""

    n: int
    total: int
    paths: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.paths)

    def index(self, path: tuple[int, ...]) -> int:
        return self._index[path]

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.paths)})


@lru_cache(maxsize=None)
def enumerate_basis(n: int, total: int) -> FusionBasis:
    """All valid paths g_1..g_n with g_1 = 1 and g_n = total, lexicographic."""
    if n < 1:
        raise ValueError(f"need n >= 1 anyons, got {n}")
    if total not in CHARGES:
        raise ValueError(f"invalid total charge {total}")
    paths: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...]):
        if len(prefix) == n:
            if prefix[-1] == total:
                paths.append(prefix)
            return
        for c in fuse(prefix[-1], 1):
            extend(prefix + (c,))

    extend((1,))
    paths.sort()
    return FusionBasis(n, total, tuple(paths))


@lru_cache(maxsize=None)
def braid_generator(i: int, n: int, total: int) -> np.ndarray:
    """Unitary of the clockwise interchange of strands (i, i+1).

    Acts only on the prefix charge g_i of each path.  Read-only array,
    cached per (i, n, total).
    """
    basis = enumerate_basis(n, total)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for {n} strands")
    dim = basis.dim
    mat = np.zeros((dim, dim), dtype=complex)
    for idx, path in enumerate(basis.paths):
        p = path[i - 2] if i >= 2 else 0  # g_{i-1}, with the vacuum boundary g_0 = 0
        q = path[i]  # g_{i+1}
        x = path[i - 1]  # g_i
        if p == 1 and q == 1:
            # Both recouplings allowed: 2x2 block on g_i in {0, 1}.
            for x_new in (0, 1):
                new_path = path[: i - 1] + (x_new,) + path[i:]
                mat[basis.index(new_path), idx] = _B_BLOCK[x_new, x]
        else:
            # One-dimensional block: a pure R phase keyed by the pair charge.
            pair = q if p == 0 else 1
            mat[idx, idx] = _R_PHASE[pair]
    mat.setflags(write=False)
    return mat


@lru_cache(maxsize=None)
def _generator_power(i: int, n: int, total: int, power: int) -> np.ndarray:
    gen = braid_generator(i, n, total)
    p = power % 10  # sigma_i^10 = 1
    out = np.linalg.matrix_power(gen, p)
    out.setflags(write=False)
    return out


def evaluate_braid(word: BraidWord, basis: FusionBasis) -> np.ndarray:
    """Ordered product of generator powers; letters[0] is applied first."""
    if word.n_strands != basis.n:
        raise ValueError(
            f"strand-count mismatch: word has {word.n_strands}, basis has {basis.n}"
        )
    u = np.eye(basis.dim, dtype=complex)
    for g, p in word.letters:
        u = _generator_power(g, basis.n, basis.total, p) @ u
    return u


def evaluate_braid_full3(word: BraidWord) -> np.ndarray:
    """Three-strand word on the full 3-dim space in the {01, 11, 10} ordering.

    The charge-1 sector (paths 01, 11) comes first, then the charge-0 path.
    """
    if word.n_strands != 3:
        raise ValueError("full 3-dim evaluation is defined for 3 strands")
    u1 = evaluate_braid(word, enumerate_basis(3, 1))
    u0 = evaluate_braid(word, enumerate_basis(3, 0))
    out = np.zeros((3, 3), dtype=complex)
    out[:2, :2] = u1
    out[2, 2] = u0[0, 0]
    return out
