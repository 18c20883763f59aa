"""Complex adjoint embeddings and the left/right matrix inverses.

With the split ``A = A0 + A1 mu_perp`` (``A0, A1`` complex through
``a + b mu -> a + b i``)::

    left adjoint   chi(A)  = [[A0,    A1 ], [-conj(A1), conj(A0)]]
    right adjoint  chi'(A) = [[A0, -conj(A1)], [A1,      conj(A0)]]

``chi`` turns ``·L`` into ordinary complex multiplication and ``chi'`` does
the same for ``·R``; both inverses are computed through them.
"""

from __future__ import annotations

import enum

import numpy as np

from . import complex_engine
from .errors import NotInEmbeddingImage, ShapeMismatch
from .qmat import QuatMatrix
from .quaternion import I, Quaternion, check_axes, mul, orthogonal_complement


class AdjointSide(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


EMBEDDING_TOL = 1e-9


def _resolve(mu, mu_perp):
    mu = I if mu is None else mu
    return check_axes(mu, orthogonal_complement(mu) if mu_perp is None else mu_perp)


def matrix_symplectic_split(a: QuatMatrix, mu: Quaternion | None = None,
                            mu_perp: Quaternion | None = None) -> tuple[np.ndarray, np.ndarray]:
    mu, mu_perp = _resolve(mu, mu_perp)
    nu = mul(mu, mu_perp)
    d = a.data
    v = d[..., 1:]
    a0 = d[..., 0] + 1j * (v @ np.array(mu.vector))
    a1 = (v @ np.array(mu_perp.vector)) + 1j * (v @ np.array(nu.vector))
    return a0, a1


def from_split(a0: np.ndarray, a1: np.ndarray, mu: Quaternion | None = None,
               mu_perp: Quaternion | None = None) -> QuatMatrix:
    """Rebuild ``A0 + A1 mu_perp`` from its complex parts."""
    mu, mu_perp = _resolve(mu, mu_perp)
    nu = mul(mu, mu_perp)
    a0 = np.atleast_2d(a0)
    a1 = np.atleast_2d(a1)
    out = np.empty(a0.shape + (4,))
    out[..., 0] = a0.real
    out[..., 1:] = (a0.imag[..., None] * np.array(mu.vector)
                    + a1.real[..., None] * np.array(mu_perp.vector)
                    + a1.imag[..., None] * np.array(nu.vector))
    return QuatMatrix(out)


def adjoint(a: QuatMatrix, side: AdjointSide = AdjointSide.LEFT, mu: Quaternion | None = None,
            mu_perp: Quaternion | None = None) -> np.ndarray:
    """``2M x 2N`` complex adjoint of ``a``."""
    a0, a1 = matrix_symplectic_split(a, mu, mu_perp)
    if AdjointSide(side) is AdjointSide.LEFT:
        return np.block([[a0, a1], [-np.conj(a1), np.conj(a0)]])
    return np.block([[a0, -np.conj(a1)], [a1, np.conj(a0)]])


def from_adjoint(x: np.ndarray, side: AdjointSide = AdjointSide.LEFT, mu: Quaternion | None = None,
                 mu_perp: Quaternion | None = None, tol: float = EMBEDDING_TOL) -> QuatMatrix:
    """Recover ``A`` from its adjoint; the blocks must be consistent within ``tol``."""
    x = np.atleast_2d(np.asarray(x, dtype=np.complex128))
    rows, cols = x.shape
    if rows % 2 or cols % 2:
        raise ShapeMismatch(f"adjoint must have even dimensions, got {x.shape}")
    m, n = rows // 2, cols // 2
    p, q = x[:m, :n], x[:m, n:]
    r, s = x[m:, :n], x[m:, n:]
    if AdjointSide(side) is AdjointSide.LEFT:
        a0, a1 = 0.5 * (p + np.conj(s)), 0.5 * (q - np.conj(r))
        mismatch = max(np.max(np.abs(p - np.conj(s))), np.max(np.abs(q + np.conj(r))))
    else:
        a0, a1 = 0.5 * (p + np.conj(s)), 0.5 * (r - np.conj(q))
        mismatch = max(np.max(np.abs(p - np.conj(s))), np.max(np.abs(r + np.conj(q))))
    scale = max(1.0, float(np.max(np.abs(x))))
    if mismatch > tol * scale:
        raise NotInEmbeddingImage(f"block structure violated by {mismatch:.3g}")
    return from_split(a0, a1, mu, mu_perp)


def _inverse(a: QuatMatrix, side: AdjointSide, mu, mu_perp, rtol) -> QuatMatrix:
    if a.rows != a.cols:
        raise ShapeMismatch(f"inverse needs a square matrix, got {a.shape}")
    chi = adjoint(a, side, mu, mu_perp)
    chi_inv = complex_engine.inverse(chi, rtol)
    return from_adjoint(chi_inv, side, mu, mu_perp, tol=np.inf)


def inv_left(a: QuatMatrix, mu: Quaternion | None = None, mu_perp: Quaternion | None = None,
             rtol: float = complex_engine.PIVOT_RTOL) -> QuatMatrix:
    """Inverse with respect to ``·L``: ``inv_left(A) ·L A = A ·L inv_left(A) = I``."""
    return _inverse(a, AdjointSide.LEFT, mu, mu_perp, rtol)


def inv_right(a: QuatMatrix, mu: Quaternion | None = None, mu_perp: Quaternion | None = None,
              rtol: float = complex_engine.PIVOT_RTOL) -> QuatMatrix:
    """Inverse with respect to ``·R``: ``inv_right(A) ·R A = A ·R inv_right(A) = I``."""
    return _inverse(a, AdjointSide.RIGHT, mu, mu_perp, rtol)
