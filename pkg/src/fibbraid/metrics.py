"""Operator-norm distances and the winding phase law.

The distance between two operators is the operator norm of their difference,
i.e. the largest singular value.  For unitary operands the difference is
normal, so the distance reduces to max_k |lambda_k - 1| over the eigenvalues
of V^dagger U; the phase-minimized variant reduces to a smallest-covering-arc
problem on the unit circle.
"""

from __future__ import annotations

import numpy as np

_TWO_PI = 2.0 * np.pi


def ensure_unitary(u: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Validate that ``u`` is square and unitary within ``tol``; return it."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {u.shape}")
    d = u.shape[0]
    dev = np.abs(u.conj().T @ u - np.eye(d)).max()
    if dev > tol:
        raise ValueError(f"matrix is not unitary: max |U^dag U - I| = {dev:.3e}")
    det = np.linalg.det(u)
    if abs(abs(det) - 1.0) > tol:
        raise ValueError(f"matrix determinant has modulus {abs(det):.12f} != 1")
    return u


def is_unitary(u: np.ndarray, tol: float = 1e-10) -> bool:
    u = np.asarray(u)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    return np.abs(u.conj().T @ u - np.eye(u.shape[0])).max() <= tol


def operator_distance(u: np.ndarray, v: np.ndarray) -> float:
    """Operator-norm distance ||u - v|| (largest singular value)."""
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return float(np.linalg.norm(u - v, ord=2))


def _covering_arc(angles: np.ndarray) -> tuple[float, float]:
    """Smallest arc containing all angles; returns (width, center)."""
    th = np.sort(np.mod(angles, _TWO_PI))
    gaps = np.diff(np.concatenate([th, [th[0] + _TWO_PI]]))
    i = int(np.argmax(gaps))
    width = _TWO_PI - gaps[i]
    start = th[(i + 1) % len(th)]  # first angle after the largest gap
    center = np.mod(start + width / 2.0, _TWO_PI)
    return float(width), float(center)


def projective_distance_unitary(u: np.ndarray, v: np.ndarray) -> tuple[float, float]:
    """min over phi of ||u - e^{i phi} v|| for unitary operands, with argmin.

    Both operands must be unitary: then W = v^dag u is normal and the
    objective is max_k |lambda_k(W) - e^{i phi}|, minimized at the center of
    the smallest arc covering the eigenphases.
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    w = v.conj().T @ u
    lam = np.linalg.eigvals(w)
    width, center = _covering_arc(np.angle(lam))
    dist = 2.0 * np.sin(min(width, _TWO_PI) / 4.0)
    return float(dist), float(np.mod(center + np.pi, _TWO_PI) - np.pi)


def projective_distance(
    u: np.ndarray,
    v: np.ndarray,
    grid: int = 10_000,
    tol: float = 1e-12,
) -> tuple[float, float]:
    """min over phi of ||u - e^{i phi} v|| and the minimizing phi.

    General operands: coarse grid over phi followed by golden-section
    refinement of the bracketing interval.  Unitary operands take the exact
    closed-form path.  Always <= operator_distance(u, v).
    """
    u = np.asarray(u, dtype=complex)
    v = np.asarray(v, dtype=complex)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    if is_unitary(u) and is_unitary(v):
        return projective_distance_unitary(u, v)

    def f(phi: float) -> float:
        return float(np.linalg.norm(u - np.exp(1j * phi) * v, ord=2))

    phis = np.linspace(0.0, _TWO_PI, grid, endpoint=False)
    vals = np.array([f(p) for p in phis])
    k = int(np.argmin(vals))
    lo = phis[k] - _TWO_PI / grid
    hi = phis[k] + _TWO_PI / grid
    # Golden-section refinement on the bracket.
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > tol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    phi = 0.5 * (a + b)
    return f(phi), float(np.mod(phi + np.pi, _TWO_PI) - np.pi)


def winding_phases(w: int) -> tuple[tuple[complex, complex], complex]:
    """Sector phases fixed by the winding class.

    Returns the two candidate prefactors (+/- e^{-i w pi/10}) of the
    charge-1 block and the charge-0 phase e^{i 3 w pi / 5}.
    """
    pre = np.exp(-1j * w * np.pi / 10.0)
    return (pre, -pre), np.exp(3j * w * np.pi / 5.0)


def split_blocks(g: np.ndarray, tol: float = 1e-10) -> tuple[np.ndarray, complex]:
    """Split a 3x3 block-diagonal (2+1) matrix into its blocks.

    Raises ValueError if the off-block entries exceed ``tol``.
    """
    g = np.asarray(g, dtype=complex)
    if g.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got {g.shape}")
    off = max(abs(g[0, 2]), abs(g[1, 2]), abs(g[2, 0]), abs(g[2, 1]))
    if off > tol:
        raise ValueError(f"matrix is not block-diagonal within {tol:g} (off = {off:.3e})")
    return g[:2, :2].copy(), complex(g[2, 2])


def winding_class_of_target(g: np.ndarray, tol: float = 1e-10) -> frozenset[int]:
    """All winding classes W (mod 10) compatible with the phase law.

    A class W matches when the charge-0 entry equals e^{i 3 W pi/5} and the
    charge-1 block divided by either sign of e^{-i W pi/10} lands in SU(2),
    i.e. det(block) * e^{i W pi/5} = 1.  Both signs are always admissible
    because the prefactor is only defined up to -1.  Empty set: no class.
    """
    block, scalar = split_blocks(g, tol=tol)
    det = np.linalg.det(block)
    classes = set()
    for w in range(10):
        scalar_ok = abs(scalar - np.exp(3j * w * np.pi / 5.0)) <= tol
        det_ok = abs(det * np.exp(1j * w * np.pi / 5.0) - 1.0) <= tol
        if scalar_ok and det_ok:
            classes.add(w)
    return frozenset(classes)
