import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import double_sum_triple, entries, loop_mul, loop_triple
from qlinalg import qmat
from qlinalg.errors import ShapeMismatch
from qlinalg.qmat import ProductOrder, QuatMatrix, TripleOrder, conj, herm, mul_left, mul_right, transpose
from qlinalg.quaternion import I, J, K, ONE, PureUnitQuaternion, Quaternion

dims = st.integers(1, 5)
seeds = st.integers(0, 2**32 - 1)


def rand(rng, r, c):
    return QuatMatrix.random(r, c, rng)


def rand_subfield(rng, r, c, mu):
    z = rng.standard_normal((r, c)) + 1j * rng.standard_normal((r, c))
    return QuatMatrix.from_complex(z, mu)


def test_single_entry_products():
    a, b = QuatMatrix.from_rows([[I]]), QuatMatrix.from_rows([[J]])
    assert mul_left(a, b) == QuatMatrix.from_rows([[K]])
    assert mul_right(a, b) == QuatMatrix.from_rows([[-K]])


def test_identity_is_neutral(rng):
    b = rand(rng, 3, 4)
    assert mul_left(qmat.identity(3), b) == b
    assert mul_right(b, qmat.identity(4)) == b


def test_real_entries_commute(rng):
    a = QuatMatrix(np.pad(rng.standard_normal((3, 2, 1)), ((0, 0), (0, 0), (0, 3))))
    b = QuatMatrix(np.pad(rng.standard_normal((2, 4, 1)), ((0, 0), (0, 0), (0, 3))))
    assert mul_left(a, b) == mul_right(a, b)


def test_shape_mismatch(rng):
    with pytest.raises(ShapeMismatch):
        mul_left(rand(rng, 2, 3), rand(rng, 2, 3))
    with pytest.raises(ShapeMismatch):
        qmat.triple_product(rand(rng, 2, 2), rand(rng, 2, 3), rand(rng, 2, 2), TripleOrder.LL)
    with pytest.raises(ShapeMismatch):
        rand(rng, 2, 2) + rand(rng, 2, 3)


def test_triple_examples():
    a, b, c = (QuatMatrix.from_rows([[q]]) for q in (I, J, K))
    # i j k = -1 while k j i = +1
    assert qmat.triple_product(a, b, c, TripleOrder.LL) == QuatMatrix.from_rows([[-ONE]])
    assert qmat.triple_product(a, b, c, TripleOrder.RR) == QuatMatrix.from_rows([[ONE]])


@pytest.mark.parametrize("order", list(TripleOrder))
def test_triple_orders_match_loops(rng, order):
    a, b, c = rand(rng, 2, 3), rand(rng, 3, 2), rand(rng, 2, 2)
    got = entries(qmat.triple_product(a, b, c, order))
    ea, eb, ec = entries(a), entries(b), entries(c)
    assert got == loop_triple(ea, eb, ec, order.value)
    ref = np.array(double_sum_triple(ea, eb, ec, order.value))
    assert np.max(np.abs(np.array(got) - ref)) <= 1e-12


@given(dims, dims, dims, seeds)
def test_products_match_loops_bitwise(m, k, n, seed):
    rng = np.random.default_rng(seed)
    a, b = rand(rng, m, k), rand(rng, k, n)
    assert entries(mul_left(a, b)) == loop_mul(entries(a), entries(b))
    assert entries(mul_right(a, b)) == loop_mul(entries(a), entries(b), right=True)


@given(dims, dims, dims, seeds)
def test_transpose_rules(m, k, n, seed):
    rng = np.random.default_rng(seed)
    a, b = rand(rng, m, k), rand(rng, k, n)
    assert transpose(mul_left(a, b)) == mul_right(transpose(b), transpose(a))
    assert transpose(mul_right(a, b)) == mul_left(transpose(b), transpose(a))


@given(dims, dims, dims, seeds)
def test_conjugation_and_hermitian_rules(m, k, n, seed):
    rng = np.random.default_rng(seed)
    a, b = rand(rng, m, k), rand(rng, k, n)
    assert qmat.max_abs_diff(conj(mul_left(a, b)), mul_right(conj(a), conj(b))) <= 1e-12
    assert qmat.max_abs_diff(herm(mul_left(a, b)), mul_left(herm(b), herm(a))) <= 1e-12
    assert qmat.max_abs_diff(herm(mul_right(a, b)), mul_right(herm(b), herm(a))) <= 1e-12


@given(dims, dims, dims, dims, seeds)
def test_associativity(m, k, l, n, seed):
    rng = np.random.default_rng(seed)
    a, b, c = rand(rng, m, k), rand(rng, k, l), rand(rng, l, n)
    assert qmat.max_abs_diff(mul_left(mul_left(a, b), c), mul_left(a, mul_left(b, c))) <= 1e-12
    assert qmat.max_abs_diff(mul_right(mul_right(a, b), c), mul_right(a, mul_right(b, c))) <= 1e-12


@given(dims, dims, dims, dims, seeds)
def test_mixed_associativity_in_subfield(m, k, l, n, seed):
    # entrywise the two sides are sums of c*a*b versus a*c*b (and b*a*c versus
    # b*c*a), so the outer factors A and C are the ones that must commute
    rng = np.random.default_rng(seed)
    mu = PureUnitQuaternion(0.0, *rng.standard_normal(3))
    a, b, c = rand_subfield(rng, m, k, mu), rand(rng, k, l), rand_subfield(rng, l, n, mu)
    assert qmat.max_abs_diff(mul_right(mul_left(a, b), c), mul_left(a, mul_right(b, c))) <= 1e-12
    assert qmat.max_abs_diff(mul_left(mul_right(a, b), c), mul_right(a, mul_left(b, c))) <= 1e-12


def test_mixed_associativity_fails_generically(rng):
    a, b, c = rand(rng, 3, 3), rand(rng, 3, 3), rand(rng, 3, 3)
    assert qmat.max_abs_diff(mul_right(mul_left(a, b), c), mul_left(a, mul_right(b, c))) > 1e-3
    assert qmat.max_abs_diff(mul_left(mul_right(a, b), c), mul_right(a, mul_left(b, c))) > 1e-3


def test_mixed_associativity_needs_outer_factors_in_subfield(rng):
    # A and B sharing a subfield is not enough when C is generic
    mu = PureUnitQuaternion(0.0, 1.0, 2.0, 3.0)
    a, b, c = rand_subfield(rng, 3, 3, mu), rand_subfield(rng, 3, 3, mu), rand(rng, 3, 3)
    assert qmat.max_abs_diff(mul_right(mul_left(a, b), c), mul_left(a, mul_right(b, c))) > 1e-3


def test_four_distinct_products(rng):
    a, b = rand(rng, 3, 3), rand(rng, 3, 3)
    prods = [mul_left(a, b), mul_right(a, b), mul_left(b, a), mul_right(b, a)]
    for i in range(4):
        for j in range(i + 1, 4):
            assert qmat.max_abs_diff(prods[i], prods[j]) > 1e-6


def test_right_product_via_reversed_transposes(rng):
    a, b = rand(rng, 3, 4), rand(rng, 4, 2)
    assert mul_right(a, b) == transpose(mul_left(transpose(b), transpose(a)))


def test_structural_operators(rng):
    a = rand(rng, 2, 3)
    t = transpose(a)
    assert t.shape == (3, 2)
    assert t[2, 1] == a[1, 2]
    assert transpose(t) == a
    assert herm(herm(a)) == a
    assert herm(a) == conj(transpose(a))


def test_vec_unvec_diag():
    a, b, c, d = (Quaternion(v) for v in (1.0, 2.0, 3.0, 4.0))
    m = QuatMatrix.from_rows([[a, c], [b, d]])
    assert qmat.vec(m) == QuatMatrix.from_rows([[a], [b], [c], [d]])
    assert qmat.unvec(qmat.vec(m), 2, 2) == m
    with pytest.raises(ShapeMismatch):
        qmat.unvec(qmat.vec(m), 3, 2)
    v = QuatMatrix.from_rows([[I], [J]])
    assert qmat.diag(v) == QuatMatrix.from_rows([[I, 0], [0, J]])
    with pytest.raises(ShapeMismatch):
        qmat.diag(m)


def test_scalar_mul():
    a = QuatMatrix.from_rows([[J]])
    assert qmat.scalar_mul(ProductOrder.LEFT, I, a) == QuatMatrix.from_rows([[K]])
    assert qmat.scalar_mul(ProductOrder.RIGHT, I, a) == QuatMatrix.from_rows([[-K]])
    s = Quaternion(2.5)
    assert qmat.scalar_mul(ProductOrder.LEFT, s, a) == qmat.scalar_mul(ProductOrder.RIGHT, s, a)


def test_matrix_is_immutable(rng):
    a = rand(rng, 2, 2)
    with pytest.raises(ValueError):
        a.data[0, 0, 0] = 1.0


def test_complex_view_round_trip(rng):
    mu = PureUnitQuaternion(0, 1, 2, 2)
    z = rng.standard_normal((3, 2)) + 1j * rng.standard_normal((3, 2))
    a = QuatMatrix.from_complex(z, mu)
    assert qmat.in_complex_subfield(a, mu)
    assert np.max(np.abs(a.to_complex(mu) - z)) <= 1e-15
