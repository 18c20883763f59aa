"""Dense quaternion matrices and the ordered products ``A ·L B`` / ``A ·R B``.

``mul_left`` sums ``A[m,k] B[k,n]`` and ``mul_right`` sums ``B[k,n] A[m,k]``.
Both accumulate over ``k`` in increasing order starting from zero, one
Hamilton product per term, so results are bitwise reproducible against a
scalar triple loop with the same order.
"""

from __future__ import annotations

import enum
from typing import Iterable, Sequence

import numpy as np

from .errors import ShapeMismatch
from .quaternion import Quaternion, hamilton


class ProductOrder(enum.Enum):
    LEFT = "left"
    RIGHT = "right"


class TripleOrder(enum.Enum):
    """Scalar orderings of a three-matrix product.

    ====================  =====================  ==================
    member                scalar order per term  bracketing
    ====================  =====================  ==================
    ``LL``                a b c                  (A·L B)·L C
    ``RR``                c b a                  (A·R B)·R C
    ``L_OF_R``            a c b                  A·L (B·R C)
    ``LB_THEN_R``         c a b                  (A·L B)·R C
    ``RB_THEN_L``         b a c                  (A·R B)·L C
    ``R_OF_L``            b c a                  A·R (B·L C)
    ====================  =====================  ==================
    """

    LL = "LL"
    RR = "RR"
    L_OF_R = "L_of_R"
    LB_THEN_R = "LB_then_R"
    RB_THEN_L = "RB_then_L"
    R_OF_L = "R_of_L"


class QuatMatrix:
    """Immutable ``rows x cols`` quaternion matrix.

    Backed by a read-only float64 array of shape ``(rows, cols, 4)`` holding
    the ``w, x, y, z`` components of each entry.
    """

    __slots__ = ("_data",)

    def __init__(self, data):
        arr = np.array(data, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[2] != 4:
            raise ShapeMismatch(f"expected component array of shape (rows, cols, 4), got {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ShapeMismatch(f"matrix must have at least one row and column, got {arr.shape[:2]}")
        if not np.all(np.isfinite(arr)):
            raise ValueError("matrix entries must be finite")
        arr.setflags(write=False)
        self._data = arr

    # -- construction ----------------------------------------------------

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> QuatMatrix:
        # internal: trusts shape, skips copy and validation
        obj = cls.__new__(cls)
        arr.setflags(write=False)
        obj._data = arr
        return obj

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> QuatMatrix:
        """Build from nested rows of :class:`Quaternion` or real numbers."""
        out = []
        for row in rows:
            out.append([_components(v) for v in row])
        if len({len(r) for r in out}) > 1:
            raise ShapeMismatch("ragged rows")
        return cls(out)

    @classmethod
    def from_complex(cls, z, mu: Quaternion) -> QuatMatrix:
        """Lift a complex array into the subfield of ``mu`` via ``a+bi -> a+b*mu``."""
        z = np.atleast_2d(np.asarray(z, dtype=np.complex128))
        arr = np.empty(z.shape + (4,))
        arr[..., 0] = z.real
        arr[..., 1] = z.imag * mu.x
        arr[..., 2] = z.imag * mu.y
        arr[..., 3] = z.imag * mu.z
        return cls(arr)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QuatMatrix:
        return cls(np.zeros((rows, cols, 4)))

    @classmethod
    def random(cls, rows: int, cols: int, rng: np.random.Generator) -> QuatMatrix:
        """Entries with independent standard normal components."""
        return cls(rng.standard_normal((rows, cols, 4)))

    # -- access ----------------------------------------------------------

    @property
    def data(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape[:2]

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    def __getitem__(self, idx) -> Quaternion:
        m, n = idx
        return Quaternion(*self._data[m, n])

    def column(self, n: int) -> QuatMatrix:
        return QuatMatrix._wrap(self._data[:, n:n + 1].copy())

    def row(self, m: int) -> QuatMatrix:
        return QuatMatrix._wrap(self._data[m:m + 1].copy())

    def to_rows(self) -> list[list[Quaternion]]:
        return [[Quaternion(*e) for e in row] for row in self._data]

    def to_complex(self, mu: Quaternion) -> np.ndarray:
        """Inverse of :meth:`from_complex`; assumes entries lie in the subfield of ``mu``."""
        d = self._data
        imag = d[..., 1] * mu.x + d[..., 2] * mu.y + d[..., 3] * mu.z
        return d[..., 0] + 1j * imag

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.sqrt(np.sum(self._data * self._data)))

    def __eq__(self, other):
        if not isinstance(other, QuatMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self._data, other._data))

    __hash__ = None

    def __repr__(self):
        return f"QuatMatrix(shape={self.shape})"

    # -- elementwise arithmetic -------------------------------------------

    def __add__(self, other: QuatMatrix) -> QuatMatrix:
        _same_shape(self, other)
        return QuatMatrix._wrap(self._data + other._data)

    def __sub__(self, other: QuatMatrix) -> QuatMatrix:
        _same_shape(self, other)
        return QuatMatrix._wrap(self._data - other._data)

    def __neg__(self) -> QuatMatrix:
        return QuatMatrix._wrap(-self._data)

    def __mul__(self, r):
        if isinstance(r, (int, float)) and not isinstance(r, bool):
            return QuatMatrix._wrap(self._data * float(r))
        return NotImplemented

    __rmul__ = __mul__


def _components(v) -> tuple[float, float, float, float]:
    if isinstance(v, Quaternion):
        return v.components
    return (float(v), 0.0, 0.0, 0.0)


def _same_shape(a: QuatMatrix, b: QuatMatrix):
    if a.shape != b.shape:
        raise ShapeMismatch(f"shapes {a.shape} and {b.shape} differ")


def max_abs_diff(a: QuatMatrix, b: QuatMatrix) -> float:
    _same_shape(a, b)
    return float(np.max(np.abs(a.data - b.data)))


# -- products -------------------------------------------------------------


def _hprod_arrays(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    parts = hamilton(a[..., 0], a[..., 1], a[..., 2], a[..., 3],
                     b[..., 0], b[..., 1], b[..., 2], b[..., 3])
    return np.stack(parts, axis=-1)


def _check_inner(a: QuatMatrix, b: QuatMatrix):
    if a.cols != b.rows:
        raise ShapeMismatch(f"cannot multiply {a.shape} by {b.shape}")


def mul_left(a: QuatMatrix, b: QuatMatrix) -> QuatMatrix:
    """``[A ·L B]_{m,n} = sum_k A[m,k] B[k,n]``."""
    _check_inner(a, b)
    A, B = a.data, b.data
    acc = np.zeros((a.rows, b.cols, 4))
    for k in range(a.cols):
        acc = acc + _hprod_arrays(A[:, k, None, :], B[None, k, :, :])
    return QuatMatrix._wrap(acc)


def mul_right(a: QuatMatrix, b: QuatMatrix) -> QuatMatrix:
    """``[A ·R B]_{m,n} = sum_k B[k,n] A[m,k]``."""
    _check_inner(a, b)
    A, B = a.data, b.data
    acc = np.zeros((a.rows, b.cols, 4))
    for k in range(a.cols):
        acc = acc + _hprod_arrays(B[None, k, :, :], A[:, k, None, :])
    return QuatMatrix._wrap(acc)


def mul(a: QuatMatrix, b: QuatMatrix, order: ProductOrder) -> QuatMatrix:
    return mul_left(a, b) if ProductOrder(order) is ProductOrder.LEFT else mul_right(a, b)


def triple_product(a: QuatMatrix, b: QuatMatrix, c: QuatMatrix, order: TripleOrder) -> QuatMatrix:
    _check_inner(a, b)
    _check_inner(b, c)
    order = TripleOrder(order)
    if order is TripleOrder.LL:
        return mul_left(mul_left(a, b), c)
    if order is TripleOrder.RR:
        return mul_right(mul_right(a, b), c)
    if order is TripleOrder.L_OF_R:
        return mul_left(a, mul_right(b, c))
    if order is TripleOrder.LB_THEN_R:
        return mul_right(mul_left(a, b), c)
    if order is TripleOrder.RB_THEN_L:
        return mul_left(mul_right(a, b), c)
    return mul_right(a, mul_left(b, c))


def scalar_mul(side: ProductOrder, s: Quaternion, a: QuatMatrix) -> QuatMatrix:
    """``s * A[m,n]`` for ``LEFT``, ``A[m,n] * s`` for ``RIGHT``."""
    sv = np.broadcast_to(np.array(s.components), a.data.shape)
    if ProductOrder(side) is ProductOrder.LEFT:
        return QuatMatrix._wrap(_hprod_arrays(sv, a.data))
    return QuatMatrix._wrap(_hprod_arrays(a.data, sv))


# -- structure ------------------------------------------------------------

_CONJ = np.array([1.0, -1.0, -1.0, -1.0])


def transpose(a: QuatMatrix) -> QuatMatrix:
    return QuatMatrix._wrap(a.data.transpose(1, 0, 2).copy())


def conj(a: QuatMatrix) -> QuatMatrix:
    return QuatMatrix._wrap(a.data * _CONJ)


def herm(a: QuatMatrix) -> QuatMatrix:
    return conj(transpose(a))


def identity(n: int) -> QuatMatrix:
    arr = np.zeros((n, n, 4))
    arr[np.arange(n), np.arange(n), 0] = 1.0
    return QuatMatrix._wrap(arr)


def vec(a: QuatMatrix) -> QuatMatrix:
    """Stack the columns of ``a`` top to bottom into one column."""
    return QuatMatrix._wrap(a.data.transpose(1, 0, 2).reshape(-1, 1, 4).copy())


def unvec(v: QuatMatrix, rows: int, cols: int) -> QuatMatrix:
    if v.cols != 1 or v.rows != rows * cols:
        raise ShapeMismatch(f"cannot unvec {v.shape} into {rows}x{cols}")
    return QuatMatrix._wrap(v.data.reshape(cols, rows, 4).transpose(1, 0, 2).copy())


def diag(v: QuatMatrix) -> QuatMatrix:
    if v.cols != 1:
        raise ShapeMismatch(f"diag expects a column vector, got {v.shape}")
    n = v.rows
    arr = np.zeros((n, n, 4))
    arr[np.arange(n), np.arange(n)] = v.data[:, 0]
    return QuatMatrix._wrap(arr)


def column_vector(entries: Iterable) -> QuatMatrix:
    return QuatMatrix.from_rows([[e] for e in entries])


def hstack(blocks: Sequence[QuatMatrix]) -> QuatMatrix:
    if len({b.rows for b in blocks}) != 1:
        raise ShapeMismatch("hstack needs equal row counts")
    return QuatMatrix._wrap(np.concatenate([b.data for b in blocks], axis=1))


def vstack(blocks: Sequence[QuatMatrix]) -> QuatMatrix:
    if len({b.cols for b in blocks}) != 1:
        raise ShapeMismatch("vstack needs equal column counts")
    return QuatMatrix._wrap(np.concatenate([b.data for b in blocks], axis=0))


def in_complex_subfield(a: QuatMatrix, mu: Quaternion, tol: float = 1e-12) -> bool:
    """Matrix version of :func:`qlinalg.quaternion.in_complex_subfield`."""
    d = a.data
    m = np.array(mu.vector)
    v = d[..., 1:]
    perp = v - (v @ m)[..., None] * m
    scale = np.maximum(1.0, np.sqrt(np.sum(d * d, axis=-1)))
    return bool(np.all(np.sqrt(np.sum(perp * perp, axis=-1)) <= tol * scale))
