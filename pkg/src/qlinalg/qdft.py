"""Two-side, left-side and right-side discrete quaternion Fourier transforms.

With unitary Fourier matrices ``F1`` (axis ``mu1``, size ``M``) and ``F2``
(axis ``mu2``, size ``N``), a matrix ``A`` of shape ``M x N`` transforms as::

    TWO_SIDE    F1 ·L A ·L F2          inverse  F1^H ·L A ·L F2^H
    LEFT_SIDE   F1 ·L (A ·R F2)        inverse  (F1^H ·L A) ·R F2^H
    RIGHT_SIDE  (F1 ·R A) ·L F2        inverse  F1^H ·R (A ·L F2^H)
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass

import numpy as np

from .qmat import QuatMatrix, herm, mul_left, mul_right
from .quaternion import I, J, PureUnitQuaternion, Quaternion, exp


class QdftKind(enum.Enum):
    TWO_SIDE = 1
    LEFT_SIDE = 2
    RIGHT_SIDE = 3


@dataclass(frozen=True)
class FourierMatrix:
    f: QuatMatrix
    mu: PureUnitQuaternion
    size: int


def basis_value(m: int, u: int, size: int, mu: Quaternion) -> Quaternion:
    """``exp(-mu 2 pi u m / size) / sqrt(size)``."""
    angle = -2.0 * math.pi * u * m / size
    e = exp(Quaternion(0.0, angle * mu.x, angle * mu.y, angle * mu.z))
    return e / math.sqrt(size)


@functools.lru_cache(maxsize=64)
def _fourier_cached(size: int, mu_vec: tuple[float, float, float]) -> QuatMatrix:
    mu = PureUnitQuaternion(0.0, *mu_vec)
    arr = np.empty((size, size, 4))
    for m in range(size):
        for u in range(size):
            arr[m, u] = basis_value(m, u, size, mu).components
    return QuatMatrix(arr)


def fourier_matrix(size: int, mu: Quaternion = I) -> FourierMatrix:
    if size < 1:
        raise ValueError(f"Fourier matrix size must be positive, got {size}")
    mu = PureUnitQuaternion.from_quaternion(mu)
    return FourierMatrix(_fourier_cached(size, mu.vector), mu, size)


def dqft(a: QuatMatrix, kind: QdftKind = QdftKind.TWO_SIDE, mu1: Quaternion = I,
         mu2: Quaternion = J) -> QuatMatrix:
    kind = QdftKind(kind)
    f1 = fourier_matrix(a.rows, mu1).f
    f2 = fourier_matrix(a.cols, mu2).f
    if kind is QdftKind.TWO_SIDE:
        return mul_left(mul_left(f1, a), f2)
    if kind is QdftKind.LEFT_SIDE:
        return mul_left(f1, mul_right(a, f2))
    return mul_left(mul_right(f1, a), f2)


def idqft(a: QuatMatrix, kind: QdftKind = QdftKind.TWO_SIDE, mu1: Quaternion = I,
          mu2: Quaternion = J) -> QuatMatrix:
    kind = QdftKind(kind)
    g1 = herm(fourier_matrix(a.rows, mu1).f)
    g2 = herm(fourier_matrix(a.cols, mu2).f)
    if kind is QdftKind.TWO_SIDE:
        return mul_left(mul_left(g1, a), g2)
    if kind is QdftKind.LEFT_SIDE:
        return mul_right(mul_left(g1, a), g2)
    return mul_right(g1, mul_left(a, g2))
