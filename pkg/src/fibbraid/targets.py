"""Search targets: the gates a three-strand weave can aim for.

Each library target packages the 3x3 matrix of its defining equation, the
admissible winding classes (mod 10), and the weft endpoints.  The boundary
letters implied by the endpoints are part of the compared product, so a
search only enumerates weave bodies against the boundary-stripped target.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import f_matrix, sigma_power
from .errors import InfeasibleTargetError
from .metrics import ensure_unitary, winding_class_of_target
from .weaves import BOTTOM, MIDDLE, TOP, _BOUNDARY_GEN

EXACT = "exact"
PROJECTIVE = "projective"


@dataclass(frozen=True)
class SearchTarget:
    matrix: np.ndarray
    winding_classes: frozenset[int]
    start_pos: str = MIDDLE
    end_pos: str = MIDDLE
    distance_mode: str = EXACT
    name: str = "custom"
    params: tuple = ()

    def __post_init__(self):
        m = ensure_unitary(self.matrix, tol=1e-10)
        m = m.astype(complex)
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "winding_classes", frozenset(int(w) % 10 for w in self.winding_classes))
        if self.distance_mode not in (EXACT, PROJECTIVE):
            raise ValueError(f"unknown distance mode {self.distance_mode!r}")
        if self.distance_mode == EXACT and not self.winding_classes:
            raise InfeasibleTargetError(
                f"target {self.name!r}: exact mode needs at least one winding class"
            )

    @property
    def boundary_count(self) -> int:
        return (self.start_pos != MIDDLE) + (self.end_pos != MIDDLE)

    def boundary_matrices(self) -> tuple[np.ndarray, np.ndarray]:
        """(S, E): the full compared product is E @ body @ S."""
        s = np.eye(3, dtype=complex)
        e = np.eye(3, dtype=complex)
        if self.start_pos != MIDDLE:
            s = sigma_power(_BOUNDARY_GEN[self.start_pos], 1).copy()
        if self.end_pos != MIDDLE:
            e = sigma_power(_BOUNDARY_GEN[self.end_pos], 1).copy()
        return s, e

    def body_matrix(self) -> np.ndarray:
        """Target with boundary letters stripped: E^-1 @ matrix @ S^-1."""
        s, e = self.boundary_matrices()
        return e.conj().T @ self.matrix @ s.conj().T

    def body_residues(self) -> frozenset[int]:
        """Admissible body windings mod 10.  Body windings are always even."""
        b = self.boundary_count
        residues = frozenset((w - b) % 10 for w in self.winding_classes)
        return frozenset(r for r in residues if r % 2 == 0)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "params": list(self.params),
            "start": self.start_pos,
            "end": self.end_pos,
            "distance_mode": self.distance_mode,
            "winding_classes": sorted(self.winding_classes),
            "matrix": [[[float(z.real), float(z.imag)] for z in row] for row in self.matrix],
        }


def ix_matrix() -> np.ndarray:
    """The pi rotation iX on the charge-1 block, charge-0 entry 1."""
    return np.array([[0, 1j, 0], [1j, 0, 0], [0, 0, 1]], dtype=complex)


def phase_gate_matrix(alpha: float) -> np.ndarray:
    """F diag(e^{i alpha}, e^{-i alpha}, 1) F^-1: diagonal in the right pairing."""
    f = f_matrix()
    return f @ np.diag([np.exp(1j * alpha), np.exp(-1j * alpha), 1.0]) @ f


def target_library(name: str, m: int | None = None, alpha: float | None = None) -> SearchTarget:
    """Named targets: ix, identity, injection, effective-braiding, fweave, phase."""
    key = name.lower().replace("_", "-")
    if key == "ix":
        return SearchTarget(ix_matrix(), frozenset({0}), MIDDLE, MIDDLE, EXACT, "ix")
    if key == "identity":
        return SearchTarget(np.eye(3), frozenset({0}), MIDDLE, MIDDLE, EXACT, "identity")
    if key == "injection":
        # sigma_1 body sigma_2 ~ I: the weft enters at the top, leaves at the bottom.
        return SearchTarget(np.eye(3), frozenset({0}), TOP, BOTTOM, EXACT, "injection")
    if key == "effective-braiding":
        if m is None:
            raise ValueError("effective-braiding requires the interchange count m")
        if m % 2 != 0:
            raise InfeasibleTargetError(
                "effective braiding weaves only exist for even m: the weft pair "
                f"starts and ends at the top, forcing even winding, but m = {m}"
            )
        mat = np.array(sigma_power(1, m))
        return SearchTarget(mat, frozenset({m % 10}), TOP, TOP, EXACT, "effective-braiding", (m,))
    if key in ("fweave", "f"):
        return SearchTarget(-f_matrix(), frozenset({5}), TOP, MIDDLE, EXACT, "fweave")
    if key == "phase":
        if alpha is None:
            raise ValueError("phase requires the rotation angle alpha")
        return SearchTarget(
            phase_gate_matrix(alpha), frozenset({0}), TOP, TOP, EXACT, "phase", (alpha,)
        )
    raise ValueError(f"unknown target {name!r}")


def check_target_consistency(target: SearchTarget, tol: float = 1e-10) -> bool:
    """Exact-mode targets must carry classes allowed by the phase law."""
    if target.distance_mode != EXACT:
        return True
    allowed = winding_class_of_target(target.matrix, tol=tol)
    return target.winding_classes <= allowed
