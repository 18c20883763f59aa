"""Small dense complex linear algebra kernel.

LU with partial pivoting, rank-revealing elimination with complete
pivoting, Householder Hessenberg reduction and a Wilkinson-shifted QR
eigenvalue iteration with inverse-iteration eigenvectors. Matrices are plain
``complex128`` numpy arrays. Tolerances are relative to matrix norms and
every routine accepts an override.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence, ShapeMismatch, SingularMatrix

PIVOT_RTOL = 1e-13
DEFLATION_RTOL = 1e-14
MAX_EIGEN_SIZE = 128


def as_complex(m) -> np.ndarray:
    return np.array(m, dtype=np.complex128, ndmin=2)


def frobenius(m: np.ndarray) -> float:
    return float(np.sqrt(np.sum(np.abs(m) ** 2)))


def _require_square(m: np.ndarray, what: str):
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ShapeMismatch(f"{what} needs a square matrix, got shape {m.shape}")


# -- LU -------------------------------------------------------------------


def lu_factor(m, rtol: float = PIVOT_RTOL):
    """Return ``(lu, perm)`` with ``P M = L U`` packed into ``lu``.

    Raises :class:`SingularMatrix` when a pivot modulus falls below
    ``rtol * ||M||_F``.
    """
    a = as_complex(m).copy()
    _require_square(a, "lu_factor")
    n = a.shape[0]
    threshold = rtol * frobenius(a)
    perm = np.arange(n)
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if abs(a[p, k]) <= threshold or a[p, k] == 0:
            raise SingularMatrix(f"pivot {k} has modulus {abs(a[p, k]):.3g} <= {threshold:.3g}")
        if p != k:
            a[[k, p]] = a[[p, k]]
            perm[[k, p]] = perm[[p, k]]
        a[k + 1:, k] /= a[k, k]
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
    return a, perm


def _lu_substitute(lu: np.ndarray, perm: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = lu.shape[0]
    x = b[perm].astype(np.complex128)
    for i in range(1, n):
        x[i] -= lu[i, :i] @ x[:i]
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - lu[i, i + 1:] @ x[i + 1:]) / lu[i, i]
    return x


def lu_solve(m, b, rtol: float = PIVOT_RTOL) -> np.ndarray:
    """Solve ``M X = B`` by LU with partial pivoting."""
    m = as_complex(m)
    b = np.asarray(b, dtype=np.complex128)
    vector = b.ndim == 1
    b2 = b.reshape(-1, 1) if vector else b
    if b2.shape[0] != m.shape[0]:
        raise ShapeMismatch(f"right-hand side has {b2.shape[0]} rows, matrix has {m.shape[0]}")
    lu, perm = lu_factor(m, rtol)
    x = _lu_substitute(lu, perm, b2)
    return x[:, 0] if vector else x


def inverse(m, rtol: float = PIVOT_RTOL) -> np.ndarray:
    m = as_complex(m)
    _require_square(m, "inverse")
    return lu_solve(m, np.eye(m.shape[0], dtype=np.complex128), rtol)


def det(m) -> complex:
    m = as_complex(m)
    _require_square(m, "det")
    try:
        lu, perm = lu_factor(m, rtol=0.0)
    except SingularMatrix:
        return 0j
    # parity of the row permutation
    sign, seen = 1, np.zeros(len(perm), dtype=bool)
    for start in range(len(perm)):
        if seen[start]:
            continue
        length, j = 0, start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return complex(sign * np.prod(np.diag(lu)))


# -- rank and null space ----------------------------------------------------


def default_rank_tol(m: np.ndarray) -> float:
    if m.size == 0:
        return 0.0
    return 1e-10 * max(m.shape) * float(np.max(np.abs(m)))


def rank_and_nullbasis(m, tol: float | None = None) -> tuple[int, np.ndarray]:
    """Rank by complete-pivoting elimination and a basis of the right null space.

    The null basis has one column per free variable; it is not orthonormal.
    """
    a = as_complex(m).copy()
    rows, cols = a.shape
    if tol is None:
        tol = default_rank_tol(a)
    colperm = np.arange(cols)
    rank = 0
    for k in range(min(rows, cols)):
        sub = np.abs(a[k:, k:])
        flat = int(np.argmax(sub))
        i, j = divmod(flat, sub.shape[1])
        if sub[i, j] <= tol:
            break
        i += k
        j += k
        if i != k:
            a[[k, i]] = a[[i, k]]
        if j != k:
            a[:, [k, j]] = a[:, [j, k]]
            colperm[[k, j]] = colperm[[j, k]]
        a[k + 1:, k] /= a[k, k]
        a[k + 1:, k + 1:] -= np.outer(a[k + 1:, k], a[k, k + 1:])
        a[k + 1:, k] = 0
        rank += 1
    nullity = cols - rank
    basis_perm = np.zeros((cols, nullity), dtype=np.complex128)
    if nullity:
        u11 = a[:rank, :rank]
        u12 = a[:rank, rank:]
        top = np.zeros((rank, nullity), dtype=np.complex128)
        for i in range(rank - 1, -1, -1):
            top[i] = (-u12[i] - u11[i, i + 1:rank] @ top[i + 1:]) / u11[i, i]
        basis_perm[:rank] = top
        basis_perm[rank:] = np.eye(nullity)
    basis = np.zeros_like(basis_perm)
    basis[colperm] = basis_perm
    return rank, basis


def orthonormal_range(m, tol: float | None = None) -> np.ndarray:
    """Orthonormal basis of the column space.

    Modified Gram-Schmidt with column pivoting and one reorthogonalisation
    pass; stops once the largest remaining column norm drops below ``tol``.
    """
    a = as_complex(m).copy()
    rows, cols = a.shape
    if tol is None:
        tol = default_rank_tol(a)
    q = []
    for _ in range(min(rows, cols)):
        norms = np.sqrt(np.sum(np.abs(a) ** 2, axis=0))
        j = int(np.argmax(norms))
        if norms[j] <= tol:
            break
        v = a[:, j].copy()
        for basis_vec in q:
            v -= basis_vec * (np.conj(basis_vec) @ v)
        v /= np.linalg.norm(v)
        q.append(v)
        a -= np.outer(v, np.conj(v) @ a)
        a[:, j] = 0
    if not q:
        return np.zeros((rows, 0), dtype=np.complex128)
    return np.stack(q, axis=1)


# -- eigenvalues ------------------------------------------------------------


@dataclass(frozen=True)
class EigenResult:
    values: np.ndarray
    vectors: np.ndarray
    converged: np.ndarray

    @property
    def all_converged(self) -> bool:
        return bool(np.all(self.converged))


def hessenberg(m) -> np.ndarray:
    """Upper Hessenberg form by Householder reflections (similarity transform)."""
    h = as_complex(m).copy()
    _require_square(h, "hessenberg")
    n = h.shape[0]
    for k in range(n - 2):
        x = h[k + 1:, k].copy()
        alpha = np.linalg.norm(x)
        if alpha == 0.0:
            continue
        phase = x[0] / abs(x[0]) if x[0] != 0 else 1.0
        v = x
        v[0] += phase * alpha
        v /= np.linalg.norm(v)
        h[k + 1:, k:] -= 2.0 * np.outer(v, np.conj(v) @ h[k + 1:, k:])
        h[:, k + 1:] -= 2.0 * np.outer(h[:, k + 1:] @ v, np.conj(v))
        h[k + 2:, k] = 0
    return h


def _wilkinson_shift(a, b, c, d) -> complex:
    """Eigenvalue of ``[[a, b], [c, d]]`` closer to ``d``."""
    half_tr = 0.5 * (a + d)
    disc = np.sqrt(0.25 * (a - d) ** 2 + b * c)
    l1, l2 = half_tr + disc, half_tr - disc
    return l1 if abs(l1 - d) <= abs(l2 - d) else l2


def _qr_step(block: np.ndarray, shift: complex):
    """One explicitly shifted QR step on a Hessenberg block, in place."""
    n = block.shape[0]
    idx = np.arange(n)
    block[idx, idx] -= shift
    rots = []
    for k in range(n - 1):
        a, b = block[k, k], block[k + 1, k]
        r = np.hypot(abs(a), abs(b))
        if r == 0.0:
            c, s = 1.0 + 0j, 0j
        else:
            c, s = a / r, b / r
        row_k = block[k, k:].copy()
        row_k1 = block[k + 1, k:].copy()
        block[k, k:] = np.conj(c) * row_k + np.conj(s) * row_k1
        block[k + 1, k:] = -s * row_k + c * row_k1
        rots.append((c, s))
    for k, (c, s) in enumerate(rots):
        col_k = block[:k + 2, k].copy()
        col_k1 = block[:k + 2, k + 1].copy()
        block[:k + 2, k] = col_k * c + col_k1 * s
        block[:k + 2, k + 1] = -col_k * np.conj(s) + col_k1 * np.conj(c)
    block[idx, idx] += shift


def _negligible(h: np.ndarray, i: int, rtol: float, hnorm: float) -> bool:
    local = abs(h[i - 1, i - 1]) + abs(h[i, i])
    if local == 0.0:
        local = hnorm
    return abs(h[i, i - 1]) <= rtol * local


def eigenvalues(m, deflation_rtol: float = DEFLATION_RTOL, max_iter: int | None = None):
    """Eigenvalues by shifted QR on the Hessenberg form.

    Returns ``(values, converged)``; raises :class:`NoConvergence` when the
    iteration budget (default ``100 n``) runs out.
    """
    h = hessenberg(m)
    n = h.shape[0]
    values = np.zeros(n, dtype=np.complex128)
    converged = np.zeros(n, dtype=bool)
    budget = 100 * n if max_iter is None else max_iter
    hnorm = frobenius(h)
    hi = n - 1
    iters = 0
    stall = 0
    while hi >= 0:
        if hi == 0:
            values[0], converged[0] = h[0, 0], True
            break
        lo = hi
        while lo > 0 and not _negligible(h, lo, deflation_rtol, hnorm):
            lo -= 1
        if lo == hi:
            values[hi], converged[hi] = h[hi, hi], True
            h[hi, hi - 1] = 0
            hi -= 1
            stall = 0
            continue
        if lo > 0:
            h[lo, lo - 1] = 0
        if iters >= budget:
            values[: hi + 1] = np.diag(h)[: hi + 1]
            partial = EigenResult(values, np.zeros((n, n), dtype=np.complex128), converged)
            raise NoConvergence(f"QR iteration did not converge in {budget} steps", partial)
        iters += 1
        stall += 1
        if stall % 11 == 10:
            # exceptional shift to break cycles
            shift = h[hi, hi] + 0.75 * abs(h[hi, hi - 1]) * (1 + 0.5j)
        else:
            shift = _wilkinson_shift(h[hi - 1, hi - 1], h[hi - 1, hi], h[hi, hi - 1], h[hi, hi])
        block = h[lo:hi + 1, lo:hi + 1]
        _qr_step(block, shift)
    return values, converged


def _solve_shifted(m: np.ndarray, lam: complex, b: np.ndarray, floor: float) -> np.ndarray:
    # LU of (M - lam I) where tiny pivots are lifted to `floor` instead of failing
    n = m.shape[0]
    a = m - lam * np.eye(n)
    x = b.copy()
    for k in range(n):
        p = k + int(np.argmax(np.abs(a[k:, k])))
        if p != k:
            a[[k, p]] = a[[p, k]]
            x[[k, p]] = x[[p, k]]
        if abs(a[k, k]) < floor:
            a[k, k] = floor
        f = a[k + 1:, k] / a[k, k]
        a[k + 1:, k:] -= np.outer(f, a[k, k:])
        x[k + 1:] -= f * x[k]
    for i in range(n - 1, -1, -1):
        x[i] = (x[i] - a[i, i + 1:] @ x[i + 1:]) / a[i, i]
    return x


def _orthogonalize(v: np.ndarray, against) -> np.ndarray:
    # two Gram-Schmidt passes; one is not enough after inverse iteration
    for _ in range(2):
        for u in against:
            v = v - u * (np.conj(u) @ v)
    return v


def eigenvector(m, lam: complex, against=(), max_steps: int = 8) -> np.ndarray:
    """Unit eigenvector for ``lam`` by inverse iteration.

    ``against`` lists unit vectors already assigned to the same eigenvalue;
    iterates are kept orthogonal to them so repeated eigenvalues receive
    independent vectors.
    """
    m = as_complex(m)
    n = m.shape[0]
    mnorm = max(frobenius(m), np.finfo(float).tiny)
    floor = np.finfo(float).eps * mnorm
    # the start depends on how many peers exist, so repeated values do not
    # restart from a vector already used
    rng = np.random.default_rng((n, len(against)))
    v = _orthogonalize(rng.standard_normal(n) + 1j * rng.standard_normal(n), against)
    v /= np.linalg.norm(v)
    for _ in range(max_steps):
        w = _orthogonalize(_solve_shifted(m, lam, v, floor), against)
        nw = np.linalg.norm(w)
        if nw == 0.0 or not np.isfinite(nw):
            break
        v = w / nw
        if np.linalg.norm(m @ v - lam * v) <= 1e-12 * mnorm:
            break
    return v


def eigen(m, max_size: int = MAX_EIGEN_SIZE, deflation_rtol: float = DEFLATION_RTOL,
          cluster_rtol: float = 1e-10, max_iter: int | None = None) -> EigenResult:
    """Eigenvalues and unit eigenvectors of a square complex matrix.

    Eigenvalues closer than ``cluster_rtol * ||M||_F`` are treated as one
    repeated value; their eigenvectors are made mutually orthogonal.
    """
    m = as_complex(m)
    _require_square(m, "eigen")
    n = m.shape[0]
    if n > max_size:
        raise ShapeMismatch(f"eigen limited to size {max_size}, got {n}")
    values, converged = eigenvalues(m, deflation_rtol, max_iter)
    mnorm = frobenius(m)
    vectors = np.zeros((n, n), dtype=np.complex128)
    for i, lam in enumerate(values):
        peers = [vectors[:, j] for j in range(i) if abs(values[j] - lam) <= cluster_rtol * mnorm]
        vectors[:, i] = eigenvector(m, lam, peers)
    return EigenResult(values, vectors, converged)
