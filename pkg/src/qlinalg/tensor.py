"""Left/right Kronecker and Khatri-Rao products and their vec identities."""

from __future__ import annotations

import enum

import numpy as np

from .errors import ShapeMismatch
from .qmat import (ProductOrder, QuatMatrix, _hprod_arrays, diag, hstack, mul_left,
                   mul_right, transpose, vec)


class VecForm(enum.Enum):
    """Which bracketing of ``A, B, C`` a vec identity rewrites.

    ========  ==========================  =================================
    form      left-hand side              right-hand side (Kronecker)
    ========  ==========================  =================================
    ``L_R``   vec(A ·L [B ·R C])          (C^T (x)R A) ·L vec(B)
    ``R_L``   vec(A ·R [B ·L C])          (C^T (x)L A) ·R vec(B)
    ``LB_R``  vec([A ·L B] ·R C)          (C^T (x)L A) ·L vec(B)
    ``RB_L``  vec([A ·R B] ·L C)          (C^T (x)R A) ·R vec(B)
    ========  ==========================  =================================

    The Khatri-Rao variants replace ``B`` by ``Diag(b)``, the Kronecker
    product by the Khatri-Rao product of the same side, and ``vec(B)`` by ``b``.
    """

    L_R = "L_R"
    R_L = "R_L"
    LB_R = "LB_R"
    RB_L = "RB_L"


# (side of the Kronecker/Khatri-Rao factor, side of the final product)
_RHS = {
    VecForm.L_R: (ProductOrder.RIGHT, ProductOrder.LEFT),
    VecForm.R_L: (ProductOrder.LEFT, ProductOrder.RIGHT),
    VecForm.LB_R: (ProductOrder.LEFT, ProductOrder.LEFT),
    VecForm.RB_L: (ProductOrder.RIGHT, ProductOrder.RIGHT),
}


def kron(a: QuatMatrix, b: QuatMatrix, side: ProductOrder) -> QuatMatrix:
    """Block ``(p, q)`` is ``A[p,q] * B`` (``LEFT``) or ``B * A[p,q]`` (``RIGHT``)."""
    ma, na = a.shape
    mb, nb = b.shape
    ea = a.data[:, None, :, None, :]
    eb = b.data[None, :, None, :, :]
    if ProductOrder(side) is ProductOrder.LEFT:
        out = _hprod_arrays(ea, eb)
    else:
        out = _hprod_arrays(eb, ea)
    return QuatMatrix._wrap(np.ascontiguousarray(out.reshape(ma * mb, na * nb, 4)))


def khatri_rao(c: QuatMatrix, d: QuatMatrix, side: ProductOrder) -> QuatMatrix:
    """Columnwise Kronecker product."""
    if c.cols != d.cols:
        raise ShapeMismatch(f"Khatri-Rao needs equal column counts, got {c.shape} and {d.shape}")
    return hstack([kron(c.column(n), d.column(n), side) for n in range(c.cols)])


def _product(order: ProductOrder, x: QuatMatrix, y: QuatMatrix) -> QuatMatrix:
    return mul_left(x, y) if order is ProductOrder.LEFT else mul_right(x, y)


def _lhs(a, b, c, form: VecForm) -> QuatMatrix:
    if form is VecForm.L_R:
        return vec(mul_left(a, mul_right(b, c)))
    if form is VecForm.R_L:
        return vec(mul_right(a, mul_left(b, c)))
    if form is VecForm.LB_R:
        return vec(mul_right(mul_left(a, b), c))
    return vec(mul_left(mul_right(a, b), c))


def vec_identity_kron(a: QuatMatrix, b: QuatMatrix, c: QuatMatrix,
                      form: VecForm) -> tuple[QuatMatrix, QuatMatrix]:
    """Both sides of a Kronecker vec identity, evaluated independently."""
    form = VecForm(form)
    if a.cols != b.rows or b.cols != c.rows:
        raise ShapeMismatch(f"shapes {a.shape}, {b.shape}, {c.shape} are not chained")
    kron_side, prod_side = _RHS[form]
    rhs = _product(prod_side, kron(transpose(c), a, kron_side), vec(b))
    return _lhs(a, b, c, form), rhs


def vec_identity_kr(a: QuatMatrix, b: QuatMatrix, c: QuatMatrix,
                    form: VecForm) -> tuple[QuatMatrix, QuatMatrix]:
    """Both sides of a Khatri-Rao vec identity; ``b`` is a column vector."""
    form = VecForm(form)
    if b.cols != 1 or a.cols != b.rows or b.rows != c.rows:
        raise ShapeMismatch(f"need A (MxK), b (Kx1), C (KxN); got {a.shape}, {b.shape}, {c.shape}")
    kr_side, prod_side = _RHS[form]
    rhs = _product(prod_side, khatri_rao(transpose(c), a, kr_side), b)
    return _lhs(a, diag(b), c, form), rhs
