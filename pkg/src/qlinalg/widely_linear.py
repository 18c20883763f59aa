"""Complex widely linear systems ``A X + B conj(X) = C`` solved in quaternions.

The complex data is lifted into the subfield of ``mu``. There conjugation is
the sandwich ``conj(X) = -mu_perp X mu_perp``, which lets ``X`` be factored
out with one left and one right product::

    F1 = [A, -B mu_perp]          G   = [I; mu_perp I]
    F2 = [conj(B), -conj(A) mu_perp]
    F  = [F1; F2]                  C_a = [C; conj(C)]

    F ·L (G ·R X) = C_a    =>    X = 0.5 G^H ·R (inv_left(F) ·L C_a)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .adjoint import inv_left
from .errors import EntriesOutsideSubfield, ShapeMismatch
from .qmat import (ProductOrder, QuatMatrix, conj, herm, hstack, identity, in_complex_subfield,
                   mul_left, mul_right, scalar_mul, vstack)
from .quaternion import I, Quaternion, PureUnitQuaternion, check_axes, orthogonal_complement


@dataclass(frozen=True)
class WidelyLinearSystem:
    a: QuatMatrix
    b: QuatMatrix
    c: QuatMatrix
    mu: PureUnitQuaternion = I

    def __post_init__(self):
        object.__setattr__(self, "mu", PureUnitQuaternion.from_quaternion(self.mu))
        m = self.a.rows
        if self.a.shape != (m, m) or self.b.shape != (m, m) or self.c.rows != m:
            raise ShapeMismatch(
                f"need square A, B of equal size and C with matching rows; "
                f"got {self.a.shape}, {self.b.shape}, {self.c.shape}")
        for name in ("a", "b", "c"):
            if not in_complex_subfield(getattr(self, name), self.mu):
                raise EntriesOutsideSubfield(f"entries of {name.upper()} are not in C_mu for mu={self.mu}")

    @classmethod
    def from_complex(cls, a, b, c, mu: Quaternion = I) -> WidelyLinearSystem:
        mu = PureUnitQuaternion.from_quaternion(mu)
        return cls(QuatMatrix.from_complex(a, mu), QuatMatrix.from_complex(b, mu),
                   QuatMatrix.from_complex(c, mu), mu)


@dataclass(frozen=True)
class LiftedSystem:
    f1: QuatMatrix
    f2: QuatMatrix
    g: QuatMatrix
    c_a: QuatMatrix

    @property
    def f(self) -> QuatMatrix:
        return vstack([self.f1, self.f2])


def _perp(mu, mu_perp):
    if mu_perp is None:
        mu_perp = orthogonal_complement(mu)
    return check_axes(mu, mu_perp)


def conj_via_sandwich(x: QuatMatrix, mu: Quaternion = I, mu_perp: Quaternion | None = None) -> QuatMatrix:
    """``-mu_perp X mu_perp``; equals ``conj(X)`` for ``X`` inside ``C_mu``."""
    mu, mu_perp = _perp(mu, mu_perp)
    if not in_complex_subfield(x, mu):
        raise EntriesOutsideSubfield(f"entries are not in C_mu for mu={mu}")
    left = scalar_mul(ProductOrder.LEFT, mu_perp, x)
    return -scalar_mul(ProductOrder.RIGHT, mu_perp, left)


def lift(system: WidelyLinearSystem, mu_perp: Quaternion | None = None) -> LiftedSystem:
    mu, mu_perp = _perp(system.mu, mu_perp)
    m = system.a.rows
    a, b, c = system.a, system.b, system.c
    f1 = hstack([a, -scalar_mul(ProductOrder.RIGHT, mu_perp, b)])
    f2 = hstack([conj(b), -scalar_mul(ProductOrder.RIGHT, mu_perp, conj(a))])
    eye = identity(m)
    g = vstack([eye, scalar_mul(ProductOrder.LEFT, mu_perp, eye)])
    c_a = vstack([c, conj(c)])
    return LiftedSystem(f1, f2, g, c_a)


def solve(system: WidelyLinearSystem, mu_perp: Quaternion | None = None) -> QuatMatrix:
    """Solve ``A X + B conj(X) = C``; the result lies in ``C_mu``.

    Raises :class:`~qlinalg.errors.SingularMatrix` when the stacked matrix
    ``F`` has no left inverse.
    """
    lifted = lift(system, mu_perp)
    mu, mu_perp = _perp(system.mu, mu_perp)
    y = mul_left(inv_left(lifted.f, mu, mu_perp), lifted.c_a)
    return 0.5 * mul_right(herm(lifted.g), y)


def solve_complex(a, b, c, mu: Quaternion = I) -> np.ndarray:
    """Convenience wrapper taking and returning complex numpy arrays."""
    system = WidelyLinearSystem.from_complex(a, b, c, mu)
    return solve(system).to_complex(system.mu)


def residual(system: WidelyLinearSystem, x: QuatMatrix) -> float:
    """Frobenius norm of ``A X + B conj(X) - C`` evaluated in quaternions."""
    return (mul_left(system.a, x) + mul_left(system.b, conj(x)) - system.c).norm()
