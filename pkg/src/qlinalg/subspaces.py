"""The eight fundamental subspaces of a quaternion matrix.

For ``A`` of shape ``M x N``::

    LR  = {A ·L x}          RR  = {A ·R x}           (in H^M)
    LC  = {y : y^T = x^T ·L A}                        (in H^N)
    RC  = {y : y^T = x^T ·R A}                        (in H^N)
    LRN = {x : A ·L x = 0}  RRN = {x : A ·R x = 0}   (in H^N)
    LCN = {x : x^T ·L A = 0}
    RCN = {x : x^T ·R A = 0}                          (in H^M)

Each space is a quaternion module on one side only. ``LR``, ``LRN``, ``RC``
and ``RCN`` are closed under right scalar multiplication; the other four
under left scalar multiplication.

Everything is computed on a complex embedding. A vector ``x = x0 + x1 mu_perp``
maps to ``[x0; -conj(x1)]`` for right-scalar spaces and to ``[x0; x1]`` for
left-scalar spaces; under these maps the defining products become products
with the left adjoint, the right adjoint or their transposes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from . import complex_engine
from .adjoint import AdjointSide, adjoint, from_split, matrix_symplectic_split
from .errors import NumericalError, ShapeMismatch
from .qmat import (ProductOrder, QuatMatrix, hstack, mul_left, mul_right, scalar_mul,
                   transpose)
from .quaternion import I, Quaternion, check_axes, orthogonal_complement

MEMBERSHIP_TOL = 1e-9


class SubspaceKind(enum.Enum):
    LR = "LR"
    RR = "RR"
    LC = "LC"
    RC = "RC"
    LRN = "LRN"
    RRN = "RRN"
    LCN = "LCN"
    RCN = "RCN"


class ScalarSide(enum.Enum):
    RIGHT_SCALARS = "right"
    LEFT_SCALARS = "left"


@dataclass(frozen=True)
class _Recipe:
    adjoint_side: AdjointSide
    transposed: bool
    null: bool
    side: ScalarSide


_RECIPES = {
    SubspaceKind.LR: _Recipe(AdjointSide.LEFT, False, False, ScalarSide.RIGHT_SCALARS),
    SubspaceKind.RR: _Recipe(AdjointSide.RIGHT, False, False, ScalarSide.LEFT_SCALARS),
    SubspaceKind.LC: _Recipe(AdjointSide.LEFT, True, False, ScalarSide.LEFT_SCALARS),
    SubspaceKind.RC: _Recipe(AdjointSide.RIGHT, True, False, ScalarSide.RIGHT_SCALARS),
    SubspaceKind.LRN: _Recipe(AdjointSide.LEFT, False, True, ScalarSide.RIGHT_SCALARS),
    SubspaceKind.RRN: _Recipe(AdjointSide.RIGHT, False, True, ScalarSide.LEFT_SCALARS),
    SubspaceKind.LCN: _Recipe(AdjointSide.LEFT, True, True, ScalarSide.LEFT_SCALARS),
    SubspaceKind.RCN: _Recipe(AdjointSide.RIGHT, True, True, ScalarSide.RIGHT_SCALARS),
}


def scalar_side(kind: SubspaceKind) -> ScalarSide:
    return _RECIPES[SubspaceKind(kind)].side


@dataclass(frozen=True)
class SubspaceBasis:
    kind: SubspaceKind
    vectors: list = field(default_factory=list)
    scalar_side: ScalarSide = ScalarSide.RIGHT_SCALARS

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def matrix(self) -> QuatMatrix | None:
        """Basis vectors as columns, or ``None`` for the zero space."""
        return hstack(self.vectors) if self.vectors else None


class _Embedding:
    def __init__(self, mu, mu_perp):
        mu = I if mu is None else mu
        self.mu, self.mu_perp = check_axes(mu, orthogonal_complement(mu) if mu_perp is None else mu_perp)

    def embed(self, v: QuatMatrix, side: ScalarSide) -> np.ndarray:
        x0, x1 = matrix_symplectic_split(v, self.mu, self.mu_perp)
        x0, x1 = x0[:, 0], x1[:, 0]
        if side is ScalarSide.RIGHT_SCALARS:
            return np.concatenate([x0, -np.conj(x1)])
        return np.concatenate([x0, x1])

    def unembed(self, u: np.ndarray, side: ScalarSide) -> QuatMatrix:
        n = len(u) // 2
        x0, x1 = u[:n], u[n:]
        if side is ScalarSide.RIGHT_SCALARS:
            x1 = -np.conj(x1)
        return from_split(x0[:, None], x1[:, None], self.mu, self.mu_perp)

    def block(self, v: QuatMatrix, side: ScalarSide) -> np.ndarray:
        """Complex span of the quaternion line through ``v`` (two columns)."""
        order = ProductOrder.RIGHT if side is ScalarSide.RIGHT_SCALARS else ProductOrder.LEFT
        turned = scalar_mul(order, self.mu_perp, v)
        return np.column_stack([self.embed(v, side), self.embed(turned, side)])

    def matrix(self, a: QuatMatrix, recipe: _Recipe) -> np.ndarray:
        chi = adjoint(a, recipe.adjoint_side, self.mu, self.mu_perp)
        return chi.T if recipe.transposed else chi


def _half_rank(rank: int, what: str) -> int:
    if rank % 2:
        raise NumericalError(f"{what}: adjoint rank {rank} is odd; rank tolerance is ill-suited")
    return rank // 2


def _select_independent(candidates, emb: _Embedding, side: ScalarSide, target: int) -> list:
    chosen, blocks, current = [], [], 0
    for v in candidates:
        if len(chosen) == target:
            break
        if v.norm() == 0.0:
            continue
        trial = np.column_stack(blocks + [emb.block(v, side)])
        r, _ = complex_engine.rank_and_nullbasis(trial)
        if r == current + 2:
            chosen.append(v)
            blocks.append(emb.block(v, side))
            current = r
    if len(chosen) != target:
        raise NumericalError(f"found {len(chosen)} independent vectors, expected {target}")
    return chosen


def basis(a: QuatMatrix, kind: SubspaceKind, tol: float | None = None,
          mu: Quaternion | None = None, mu_perp: Quaternion | None = None) -> SubspaceBasis:
    """Basis of one fundamental subspace of ``a``.

    Range spaces are spanned by a selection of the columns (``LR``, ``RR``)
    or rows (``LC``, ``RC``) of ``a``. Null spaces are spanned by vectors
    mapped back from a complex null basis of the embedding. ``tol`` is the
    complex rank tolerance (absolute); the default scales with the adjoint.
    """
    kind = SubspaceKind(kind)
    recipe = _RECIPES[kind]
    emb = _Embedding(mu, mu_perp)
    e = emb.matrix(a, recipe)
    rank, null = complex_engine.rank_and_nullbasis(e, tol)
    half = _half_rank(rank, kind.value)
    if recipe.null:
        target = _half_rank(e.shape[1] - rank, kind.value)
        candidates = [emb.unembed(null[:, c], recipe.side) for c in range(null.shape[1])]
    else:
        target = half
        source = transpose(a) if recipe.transposed else a
        candidates = [source.column(n) for n in range(source.cols)]
    vectors = _select_independent(candidates, emb, recipe.side, target)
    return SubspaceBasis(kind, vectors, recipe.side)


def _expected_length(a: QuatMatrix, kind: SubspaceKind) -> int:
    if kind in (SubspaceKind.LR, SubspaceKind.RR, SubspaceKind.LCN, SubspaceKind.RCN):
        return a.rows
    return a.cols


def contains(a: QuatMatrix, kind: SubspaceKind, v: QuatMatrix, tol: float = MEMBERSHIP_TOL,
             mu: Quaternion | None = None, mu_perp: Quaternion | None = None) -> bool:
    """Membership test.

    Range spaces: least-squares residual of ``v`` against the embedded
    column space, relative to ``||v||``. Null spaces: the defining product
    evaluated directly, relative to ``||A||_F ||v||``.
    """
    kind = SubspaceKind(kind)
    recipe = _RECIPES[kind]
    n = _expected_length(a, kind)
    if v.shape != (n, 1):
        raise ShapeMismatch(f"{kind.value} of a {a.shape} matrix holds {n}x1 vectors, got {v.shape}")
    vnorm = v.norm()
    if vnorm == 0.0:
        return True
    if recipe.null:
        if kind is SubspaceKind.LRN:
            res = mul_left(a, v)
        elif kind is SubspaceKind.RRN:
            res = mul_right(a, v)
        elif kind is SubspaceKind.LCN:
            res = mul_left(transpose(v), a)
        else:
            res = mul_right(transpose(v), a)
        return res.norm() <= tol * a.norm() * vnorm
    emb = _Embedding(mu, mu_perp)
    q = complex_engine.orthonormal_range(emb.matrix(a, recipe))
    b = emb.embed(v, recipe.side)
    resid = b - q @ (np.conj(q.T) @ b)
    return float(np.linalg.norm(resid)) <= tol * vnorm


def dimension(a: QuatMatrix, kind: SubspaceKind, tol: float | None = None) -> int:
    kind = SubspaceKind(kind)
    recipe = _RECIPES[kind]
    e = _Embedding(None, None).matrix(a, recipe)
    rank, _ = complex_engine.rank_and_nullbasis(e, tol)
    if recipe.null:
        return _half_rank(e.shape[1] - rank, kind.value)
    return _half_rank(rank, kind.value)


def rank_left(a: QuatMatrix, tol: float | None = None) -> int:
    """``dim LR(A)``, half the rank of the left adjoint."""
    rank, _ = complex_engine.rank_and_nullbasis(adjoint(a, AdjointSide.LEFT), tol)
    return _half_rank(rank, "rank_left")


def rank_right(a: QuatMatrix, tol: float | None = None) -> int:
    """``dim RR(A)``, half the rank of the right adjoint."""
    rank, _ = complex_engine.rank_and_nullbasis(adjoint(a, AdjointSide.RIGHT), tol)
    return _half_rank(rank, "rank_right")
