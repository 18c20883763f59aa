import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import real_action, real_rank, real_vector
from qlinalg import subspaces as sub
from qlinalg.errors import ShapeMismatch
from qlinalg.qmat import (ProductOrder, QuatMatrix, identity, mul_left, mul_right, scalar_mul,
                          transpose)
from qlinalg.quaternion import I, J, K, ONE, PureUnitQuaternion, Quaternion
from qlinalg.subspaces import ScalarSide, SubspaceKind

Kind = SubspaceKind
RANGE = [Kind.LR, Kind.RR, Kind.LC, Kind.RC]
NULL = [Kind.LRN, Kind.RRN, Kind.LCN, Kind.RCN]
TRANSPOSE_PAIRS = [(Kind.LR, Kind.RC), (Kind.RR, Kind.LC), (Kind.LRN, Kind.RCN), (Kind.RRN, Kind.LCN)]


def low_rank(rng, rows, cols, r):
    return mul_left(QuatMatrix.random(rows, r, rng), QuatMatrix.random(r, cols, rng))


def oracle_dimension(a, kind):
    """Dimensions from real representations of the defining maps."""
    if kind in (Kind.LR, Kind.LRN):
        m = real_action(a)
    elif kind in (Kind.RR, Kind.RRN):
        m = real_action(a, right=True)
    elif kind in (Kind.LC, Kind.LCN):
        # y^T = x^T .L A  <=>  y = A^T .R x
        m = real_action(transpose(a), right=True)
    else:
        m = real_action(transpose(a))
    r = real_rank(m) // 4
    return m.shape[1] // 4 - r if kind in NULL else r


def test_identity():
    eye = identity(2)
    assert sub.basis(eye, Kind.LRN).dimension == 0
    assert sub.basis(eye, Kind.LR).dimension == 2


def test_single_row_example():
    a = QuatMatrix.from_rows([[I, J]])
    x = QuatMatrix.from_rows([[J], [-I]])
    # i j + j (-i) = 2k, so the analogy with the commutative case fails
    assert not sub.contains(a, Kind.LRN, x)
    b = sub.basis(a, Kind.LRN)
    assert b.dimension == 1
    for v in b.vectors:
        assert mul_left(a, v).norm() <= 1e-12 * v.norm()


def test_zero_matrix():
    z = QuatMatrix.zeros(2, 3)
    expected = {Kind.LRN: 3, Kind.RRN: 3, Kind.LCN: 2, Kind.RCN: 2}
    for kind in SubspaceKind:
        assert sub.basis(z, kind).dimension == expected.get(kind, 0)


def test_contains_examples(rng):
    a = low_rank(rng, 4, 3, 2)
    for kind in NULL:
        n = a.cols if kind in (Kind.LRN, Kind.RRN) else a.rows
        assert sub.contains(a, kind, QuatMatrix.zeros(n, 1))
    for k in range(a.cols):
        e = identity(a.cols).column(k)
        assert sub.contains(a, Kind.LR, mul_left(a, e))
        assert sub.contains(a, Kind.RR, mul_right(a, e))
    with pytest.raises(ShapeMismatch):
        sub.contains(a, Kind.LR, QuatMatrix.zeros(3, 1))


@pytest.mark.parametrize("seed", range(10))
def test_contains_agrees_with_real_least_squares(seed):
    rng = np.random.default_rng(seed)
    a = low_rank(rng, 4, 3, 1)
    inside = mul_left(a, QuatMatrix.random(3, 1, rng))
    outside = QuatMatrix.random(4, 1, rng)
    for v in (inside, outside):
        m = real_action(a)
        x = np.linalg.lstsq(m, real_vector(v), rcond=None)[0]
        expected = np.linalg.norm(m @ x - real_vector(v)) <= 1e-9 * v.norm()
        assert sub.contains(a, Kind.LR, v) == expected
    assert sub.contains(a, Kind.LR, inside)


def test_ranks():
    assert sub.rank_left(identity(3)) == 3 == sub.rank_right(identity(3))
    assert sub.rank_left(QuatMatrix.zeros(2, 4)) == 0
    m = QuatMatrix.from_rows([[ONE, I], [J, K]])
    assert sub.rank_left(m) == 2
    assert sub.rank_right(m) == 1
    assert sub.rank_left(m) == oracle_dimension(m, Kind.LR)
    assert sub.rank_right(m) == oracle_dimension(m, Kind.RR)


def test_outer_product_has_left_rank_one(rng):
    u, v = QuatMatrix.random(4, 1, rng), QuatMatrix.random(1, 4, rng)
    assert sub.rank_left(mul_left(u, v)) == 1


@pytest.mark.parametrize("seed", range(12))
def test_dimensions_and_rank_nullity(seed):
    rng = np.random.default_rng(seed)
    rows, cols = (int(x) for x in rng.integers(1, 6, size=2))
    r = int(rng.integers(0, min(rows, cols) + 1))
    a = low_rank(rng, rows, cols, r) if r else QuatMatrix.zeros(rows, cols)
    dims = {kind: sub.basis(a, kind).dimension for kind in SubspaceKind}
    for kind in SubspaceKind:
        assert dims[kind] == oracle_dimension(a, kind)
    assert dims[Kind.LR] == r
    assert dims[Kind.LR] + dims[Kind.LRN] == cols
    assert dims[Kind.RR] + dims[Kind.RRN] == cols
    assert dims[Kind.LC] + dims[Kind.LCN] == rows
    assert dims[Kind.RC] + dims[Kind.RCN] == rows


@pytest.mark.parametrize("seed", range(6))
def test_basis_vectors_belong_to_their_space(seed):
    rng = np.random.default_rng(seed)
    a = low_rank(rng, 4, 5, 2)
    for kind in SubspaceKind:
        b = sub.basis(a, kind)
        assert b.scalar_side is sub.scalar_side(kind)
        for v in b.vectors:
            assert v.norm() > 0
            assert sub.contains(a, kind, v)


@pytest.mark.parametrize("seed", range(6))
def test_transpose_relations(seed):
    rng = np.random.default_rng(seed)
    a = low_rank(rng, 4, 3, 2)
    at = transpose(a)
    for left, right in TRANSPOSE_PAIRS:
        bl, br = sub.basis(a, left), sub.basis(at, right)
        assert bl.dimension == br.dimension
        assert all(sub.contains(at, right, v) for v in bl.vectors)
        assert all(sub.contains(a, left, v) for v in br.vectors)


@given(st.integers(0, 2**32 - 1))
def test_closure_under_declared_scalars(seed):
    rng = np.random.default_rng(seed)
    a = low_rank(rng, 4, 4, 2)
    p, q = (Quaternion(*rng.standard_normal(4)) for _ in range(2))
    for kind in SubspaceKind:
        b = sub.basis(a, kind)
        if b.dimension < 2:
            continue
        v, w = b.vectors[:2]
        order = ProductOrder.RIGHT if b.scalar_side is ScalarSide.RIGHT_SCALARS else ProductOrder.LEFT
        combo = scalar_mul(order, p, v) + scalar_mul(order, q, w)
        assert sub.contains(a, kind, combo)


def test_closure_fails_on_the_other_side(rng):
    a = low_rank(rng, 4, 4, 1)
    v = sub.basis(a, Kind.LR).vectors[0]
    assert sub.contains(a, Kind.LR, scalar_mul(ProductOrder.RIGHT, J, v))
    assert not sub.contains(a, Kind.LR, scalar_mul(ProductOrder.LEFT, J, v))


def test_other_axes_give_same_spaces(rng):
    a = low_rank(rng, 3, 4, 1)
    mu = PureUnitQuaternion(0, 1, 1, -1)
    for kind in SubspaceKind:
        b = sub.basis(a, kind, mu=mu)
        assert b.dimension == sub.basis(a, kind).dimension
        assert all(sub.contains(a, kind, v) for v in b.vectors)
