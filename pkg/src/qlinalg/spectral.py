"""Right eigendecomposition and checks for left/right eigenpairs.

Right eigenpairs ``A ·L q = q lambda`` are read off the left adjoint
``chi(A)`` built on ``mu = i, mu_perp = j``. Its ``2M`` eigenvalues come in
pairs ``{lambda, conj(lambda)}``; keeping the member with nonnegative
imaginary part of each pair yields the ``M`` standard eigenvalues. A complex
eigenvector ``[u0; u1]`` of ``chi(A)`` corresponds to the quaternion vector
``u0 - conj(u1) j``.

Left eigenvalues are only verified, never searched for.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import complex_engine
from .adjoint import AdjointSide, adjoint, from_split, inv_left, matrix_symplectic_split
from .errors import DefectiveOrAmbiguous, ShapeMismatch, SingularMatrix
from .qmat import (ProductOrder, QuatMatrix, diag, hstack, mul_left, mul_right, scalar_mul,
                   column_vector)
from .quaternion import I, J, Quaternion, canonical_representative

PAIRING_RTOL = 1e-7
GROUP_RTOL = 1e-8
RECONSTRUCTION_RTOL = 1e-6


@dataclass(frozen=True)
class RightEigenDecomposition:
    q: QuatMatrix
    eigenvalues: list

    @property
    def lambda_matrix(self) -> QuatMatrix:
        return diag(column_vector(self.eigenvalues))

    def reconstruct(self) -> QuatMatrix:
        return mul_left(mul_left(self.q, self.lambda_matrix), inv_left(self.q))


@dataclass(frozen=True)
class LeftEigenPair:
    eigenvalue: Quaternion
    q: QuatMatrix


def standardize_right_eigenvalue(lam: Quaternion) -> Quaternion:
    return canonical_representative(lam)


def _pair_conjugates(values: np.ndarray, tol: float) -> list[int]:
    """Greedy nearest-conjugate pairing; returns the kept index of each pair."""
    n = len(values)
    unpaired = set(range(n))
    kept = []
    for i in range(n):
        if i not in unpaired:
            continue
        unpaired.discard(i)
        others = sorted(unpaired)
        if not others:
            raise DefectiveOrAmbiguous("odd number of adjoint eigenvalues left unpaired")
        dists = [abs(values[j] - np.conj(values[i])) for j in others]
        best = others[int(np.argmin(dists))]
        if min(dists) > tol:
            raise DefectiveOrAmbiguous(
                f"eigenvalue {values[i]:.6g} has no conjugate partner within {tol:.3g}")
        unpaired.discard(best)
        kept.append(i if values[i].imag >= values[best].imag else best)
    return kept


def _to_quaternion_vector(u: np.ndarray) -> QuatMatrix:
    m = len(u) // 2
    return from_split(u[:m, None], -np.conj(u[m:, None]), I, J)


def _normalize(x: QuatMatrix) -> QuatMatrix:
    # right-scale by a unit of C_i (commutes with the standard eigenvalue) so
    # the dominant C_i component is real positive, then to unit norm
    x0, x1 = matrix_symplectic_split(x, I, J)
    p = int(np.argmax(np.abs(x0[:, 0])))
    phase = np.conj(x0[p, 0]) / abs(x0[p, 0]) if abs(x0[p, 0]) > 0 else 1.0
    # (x0 + x1 j) c = x0 c + x1 conj(c) j
    scale = 1.0 / x.norm()
    return from_split(x0 * phase * scale, x1 * np.conj(phase) * scale, I, J)


def _line_block(x: QuatMatrix) -> np.ndarray:
    # columns span the complex image of the quaternion line x*H
    return adjoint(x, AdjointSide.LEFT, I, J)


def right_eig(a: QuatMatrix, max_size: int = complex_engine.MAX_EIGEN_SIZE) -> RightEigenDecomposition:
    """Standard right eigenvalues and eigenvectors of a square matrix.

    Eigenvalues are sorted by real part, then imaginary part. Raises
    :class:`DefectiveOrAmbiguous` when the eigenvalues cannot be paired or
    the eigenvectors do not form an invertible matrix.
    """
    if a.rows != a.cols:
        raise ShapeMismatch(f"eigendecomposition needs a square matrix, got {a.shape}")
    m = a.rows
    anorm = max(a.norm(), np.finfo(float).tiny)
    chi = adjoint(a, AdjointSide.LEFT, I, J)
    res = complex_engine.eigen(chi, max_size=max_size)
    values = res.values
    kept = _pair_conjugates(values, PAIRING_RTOL * anorm)
    standard = [complex(values[k].real, abs(values[k].imag)) for k in kept]

    # group equal standard values; each group needs as many independent
    # quaternion eigenvectors as its multiplicity
    order = sorted(range(m), key=lambda t: (standard[t].real, standard[t].imag))
    groups: list[list[int]] = []
    for t in order:
        if groups and abs(standard[t] - standard[groups[-1][0]]) <= GROUP_RTOL * anorm:
            groups[-1].append(t)
        else:
            groups.append([t])

    columns, lams = [], []
    for group in groups:
        rep = standard[group[0]]
        real_value = abs(rep.imag) <= GROUP_RTOL * anorm
        cand_idx = [i for i in range(2 * m)
                    if abs(values[i] - rep) <= GROUP_RTOL * anorm
                    or (real_value and abs(values[i] - np.conj(rep)) <= GROUP_RTOL * anorm)]
        picked, blocks, rank = [], [], 0
        for i in cand_idx:
            if len(picked) == len(group):
                break
            x = _normalize(_to_quaternion_vector(res.vectors[:, i]))
            trial = np.column_stack(blocks + [_line_block(x)])
            r, _ = complex_engine.rank_and_nullbasis(trial, 1e-8 * np.max(np.abs(trial)))
            if r == rank + 2:
                picked.append(x)
                blocks.append(_line_block(x))
                rank = r
        if len(picked) != len(group):
            raise DefectiveOrAmbiguous(
                f"eigenvalue {rep:.6g}: found {len(picked)} independent eigenvectors, need {len(group)}")
        for t, x in zip(group, picked):
            columns.append(x)
            lams.append(Quaternion(standard[t].real, standard[t].imag, 0.0, 0.0))

    q = hstack(columns)
    try:
        q_inv = inv_left(q)
    except SingularMatrix as exc:
        raise DefectiveOrAmbiguous(f"eigenvector matrix is singular: {exc}") from exc
    decomposition = RightEigenDecomposition(q, lams)
    recon = mul_left(mul_left(q, decomposition.lambda_matrix), q_inv)
    if (recon - a).norm() > RECONSTRUCTION_RTOL * anorm:
        raise DefectiveOrAmbiguous("eigenvectors do not reconstruct the matrix; likely defective")
    return decomposition


def _pair_residual(a: QuatMatrix, q: QuatMatrix, lam: Quaternion, side: ProductOrder) -> float:
    if a.rows != a.cols or q.shape != (a.rows, 1):
        raise ShapeMismatch(f"need square A and a matching column, got {a.shape} and {q.shape}")
    return (mul_left(a, q) - scalar_mul(side, lam, q)).norm()


def verify_right_pair(a: QuatMatrix, q: QuatMatrix, lam: Quaternion, tol: float = 1e-8) -> bool:
    """``||A ·L q - q lam|| <= tol ||A||_F ||q||``."""
    return _pair_residual(a, q, lam, ProductOrder.RIGHT) <= tol * a.norm() * q.norm()


def verify_left_pair(a: QuatMatrix, q: QuatMatrix, lam: Quaternion, tol: float = 1e-8) -> bool:
    """``||A ·L q - lam q|| <= tol ||A||_F ||q||``."""
    return _pair_residual(a, q, lam, ProductOrder.LEFT) <= tol * a.norm() * q.norm()


def reconstruct_left(q_left: QuatMatrix, eigenvalues) -> QuatMatrix:
    """``(Q ·R Diag(lams)) ·L inv_left(Q)``."""
    lam = diag(column_vector(eigenvalues))
    if lam.rows != q_left.cols:
        raise ShapeMismatch(f"{lam.rows} eigenvalues for {q_left.cols} eigenvectors")
    return mul_left(mul_right(q_left, lam), inv_left(q_left))
