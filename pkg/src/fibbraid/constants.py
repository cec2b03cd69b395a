"""Exact constants of the Fibonacci anyon model.

All 3x3 matrices act on the fusion space of three charge-1 anyons in the
basis ordering {01, 11, 10}: the first index is the charge of the leftmost
pair, the second the total charge, so the two total-charge-1 states come
first and the single total-charge-0 state is always index 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

#: Inverse golden mean, tau = (sqrt(5) - 1) / 2.  Satisfies tau**2 + tau = 1.
TAU: float = (math.sqrt(5.0) - 1.0) / 2.0
SQRT_TAU: float = math.sqrt(TAU)


@dataclass(frozen=True)
class GoldenConstants:
    """The dimensionless constants entering the F matrix."""

    tau: float = TAU
    sqrt_tau: float = SQRT_TAU


GOLDEN = GoldenConstants()

_F = np.array(
    [
        [TAU, SQRT_TAU, 0.0],
        [SQRT_TAU, -TAU, 0.0],
        [0.0, 0.0, 1.0],
    ],
    dtype=complex,
)

# Exchange phases for a pair of total charge 0 (index 0) or 1 (index 1).
_R = np.diag([np.exp(-4j * np.pi / 5.0), np.exp(3j * np.pi / 5.0)])

# Clockwise interchange of the two leftmost anyons: diagonal R phases keyed
# by the pair charge; the charge-0 state picks up the pair-charge-1 phase.
_SIGMA_1 = np.diag(
    [
        np.exp(-4j * np.pi / 5.0),
        np.exp(3j * np.pi / 5.0),
        np.exp(3j * np.pi / 5.0),
    ]
)

# The rightmost interchange is the leftmost one conjugated by the basis
# change between the two pairings; F is its own inverse.
_SIGMA_2 = _F @ _SIGMA_1 @ _F

for _m in (_F, _R, _SIGMA_1, _SIGMA_2):
    _m.setflags(write=False)


def f_matrix() -> np.ndarray:
    """Recoupling matrix between the two pairings of three charge-1 anyons."""
    return _F.copy()


def r_matrix() -> np.ndarray:
    """Clockwise exchange phases diag(e^{-i4pi/5}, e^{i3pi/5})."""
    return _R.copy()


def sigma1() -> np.ndarray:
    """Elementary braid matrix for the two leftmost strands."""
    return _SIGMA_1.copy()


def sigma2() -> np.ndarray:
    """Elementary braid matrix for the two rightmost strands."""
    return _SIGMA_2.copy()


@lru_cache(maxsize=None)
def _sigma_power(gen: int, power: int) -> np.ndarray:
    if gen not in (1, 2):
        raise ValueError(f"generator index must be 1 or 2, got {gen}")
    base = _SIGMA_1 if gen == 1 else _SIGMA_2
    if power >= 0:
        out = np.linalg.matrix_power(base, power)
    else:
        out = np.linalg.matrix_power(base.conj().T, -power)
    out.setflags(write=False)
    return out


def sigma_power(gen: int, power: int) -> np.ndarray:
    """sigma_gen**power on the three-strand space (read-only view)."""
    return _sigma_power(gen, power)
