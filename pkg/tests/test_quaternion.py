import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qlinalg import quaternion as qc
from qlinalg.errors import DegenerateInput, DivisionByZero, InvalidAxes, ParseError
from qlinalg.quaternion import I, J, K, ONE, ZERO, ComplexPair, PureUnitQuaternion, Quaternion

coord = st.floats(-3, 3, allow_nan=False)
quats = st.builds(Quaternion, coord, coord, coord, coord)
nonzero_vec = st.tuples(coord, coord, coord).filter(lambda v: math.hypot(*v) > 1e-3)
axes = nonzero_vec.map(lambda v: PureUnitQuaternion(0.0, *v))


def close(p, q, tol=1e-12):
    return max(abs(a - b) for a, b in zip(p.components, q.components)) <= tol


def test_basis_products():
    assert I * J == K
    assert J * I == -K
    assert qc.mul(I, J) == K
    q = Quaternion(1, 2, 3, 4)
    assert ONE * q == q


def test_conjugate_and_modulus():
    q = Quaternion(1, 2, 3, 4)
    assert qc.conjugate(q) == Quaternion(1, -2, -3, -4)
    assert qc.modulus(q) == math.sqrt(30)
    assert qc.conjugate(Quaternion(5.0)) == Quaternion(5.0)
    n = qc.mul(qc.conjugate(q), q)
    assert n.vector == (0.0, 0.0, 0.0) and n.w == pytest.approx(30.0)


def test_inverse():
    assert qc.inverse(I) == -I
    q = Quaternion(0.3, -1.2, 2.0, 0.7)
    assert close(qc.mul(qc.inverse(q), q), ONE, 1e-13)
    with pytest.raises(DivisionByZero):
        qc.inverse(ZERO)


def test_parts():
    q = Quaternion(5.0)
    assert qc.vector_part(q) == ZERO
    q = Quaternion(1, 2, 3, 4)
    assert qc.scalar_part(q) + qc.vector_part(q) == q


def test_puq_of():
    assert qc.puq_of(Quaternion(0, 0, 3, 0)) == J
    mu = qc.puq_of(Quaternion(1, 1, 1, 1))
    s = 1 / math.sqrt(3)
    assert close(mu, Quaternion(0, s, s, s))
    assert close(mu * mu, -ONE)
    with pytest.raises(DegenerateInput):
        qc.puq_of(Quaternion(7.0))


def test_pure_unit_validation():
    with pytest.raises(ValueError):
        PureUnitQuaternion(0.5, 1, 0, 0)
    with pytest.raises(ValueError):
        PureUnitQuaternion(0, 0, 0, 0)
    with pytest.raises(ValueError):
        Quaternion(float("nan"))
    assert PureUnitQuaternion(0, 2, 0, 0) == I


def test_orthogonality():
    assert qc.are_orthogonal(I, J)
    assert not qc.are_orthogonal(I, I)
    assert not qc.are_orthogonal(I, PureUnitQuaternion(0, 1, 1, 0))
    assert qc.orthogonal_complement(I) == J
    perp = qc.orthogonal_complement(J)
    assert qc.are_orthogonal(J, perp)
    with pytest.raises(InvalidAxes):
        qc.check_axes(I, PureUnitQuaternion(0, 1, 1, 0))


def test_complex_subfield_membership():
    assert qc.in_complex_subfield(Quaternion(3, 4, 0, 0), I)
    assert not qc.in_complex_subfield(J, I)
    mu = PureUnitQuaternion(0, 1, 0, 1)
    s = 5 / math.sqrt(2)
    assert qc.in_complex_subfield(Quaternion(2, s, 0, s), mu)


def test_symplectic_examples():
    a = Quaternion(1.5, -2.0, 0.25, 3.0)
    parts = qc.symplectic_decompose(a, I, J)
    assert parts.q0p == Quaternion(1.5, -2.0, 0, 0)
    assert parts.q1p == Quaternion(0.25, 3.0, 0, 0)
    parts = qc.symplectic_decompose(Quaternion(2, 7, 0, 0), I, J)
    assert parts.q1p == ZERO
    parts = qc.symplectic_decompose(J, I, J)
    assert parts.q0p == ZERO and parts.q1p == ONE
    with pytest.raises(InvalidAxes):
        qc.symplectic_decompose(a, I, I)


def test_polar_and_exp_examples():
    p = qc.to_polar(I)
    assert p.modulus == 1 and p.axis == I and p.angle == pytest.approx(math.pi / 2)
    assert qc.exp(ZERO) == ONE
    for mu in (I, J, PureUnitQuaternion(0, 1, -2, 3)):
        arg = Quaternion(0, *(math.pi * c for c in mu.vector))
        assert close(qc.exp(arg), -ONE, 1e-15)
    neg = qc.to_polar(Quaternion(-2.0))
    assert neg.axis == I and neg.angle == pytest.approx(math.pi)
    # sign convention: first nonzero axis component positive
    p = qc.to_polar(Quaternion(0.5, -1, 2, 0))
    assert p.axis.x > 0
    with pytest.raises(DegenerateInput):
        qc.to_polar(ZERO)


def test_similarity_examples():
    assert qc.similar(J, I)
    q = Quaternion(1, 2, -3, 0.5)
    assert qc.similar(q, q)
    assert qc.canonical_representative(Quaternion(2, 0, 3, 0)) == Quaternion(2, 3, 0, 0)
    s = Quaternion(1, 0, 0, 1) / math.sqrt(2)
    assert close(qc.inverse(s) * J * s, I, 1e-15)
    assert not qc.similar(I, Quaternion(1, 1, 0, 0))


@given(quats, quats)
def test_pair_formula_matches_components(p, q):
    via_pairs = (ComplexPair.from_quaternion(p) * ComplexPair.from_quaternion(q)).to_quaternion()
    assert close(qc.mul(p, q), via_pairs, 1e-13)


@given(quats)
def test_complex_pair_round_trip(q):
    assert ComplexPair.from_quaternion(q).to_quaternion() == q


@given(quats, quats)
def test_modulus_multiplicative(p, q):
    assert qc.modulus(p * q) == pytest.approx(qc.modulus(p) * qc.modulus(q), rel=1e-12, abs=1e-300)


@given(quats, quats)
def test_conjugate_reverses_products(p, q):
    assert close(qc.conjugate(p * q), qc.conjugate(q) * qc.conjugate(p), 1e-13)


@given(coord, coord, coord, coord, axes)
def test_commutative_inside_subfield(a0, a1, b0, b1, mu):
    p = a0 + a1 * mu
    q = b0 + b1 * mu
    assert close(p * q, q * p, 1e-13)


@given(coord, coord, coord, coord, axes)
def test_exp_additive_for_commuting_arguments(a0, a1, b0, b1, mu):
    p = (a0 / 3) + (a1 * mu)
    q = (b0 / 3) + (b1 * mu)
    lhs, rhs = qc.exp(p + q), qc.exp(p) * qc.exp(q)
    assert close(lhs, rhs, 1e-12 * max(1.0, qc.modulus(lhs)))


def test_exp_not_additive_for_noncommuting_arguments():
    p = Quaternion(0, math.pi / 2, 0, 0)
    q = Quaternion(0, 0, math.pi / 2, 0)
    assert not close(qc.exp(p + q), qc.exp(p) * qc.exp(q), 1e-3)


@given(axes)
def test_axes_square_to_minus_one(mu):
    assert close(mu * mu, -ONE, 1e-12)
    perp = qc.orthogonal_complement(mu)
    assert qc.are_orthogonal(mu, perp)
    assert close(perp * perp, -ONE, 1e-12)


@given(quats, axes)
def test_symplectic_recomposition(q, mu):
    perp = qc.orthogonal_complement(mu)
    parts = qc.symplectic_decompose(q, mu, perp)
    assert qc.in_complex_subfield(parts.q0p, mu)
    assert qc.in_complex_subfield(parts.q1p, mu)
    assert close(parts.recompose(), q, 1e-12)


@given(quats.filter(lambda q: qc.modulus(q) > 1e-6))
def test_polar_round_trip(q):
    p = qc.to_polar(q)
    assert -math.pi < p.angle <= math.pi
    assert close(p.to_quaternion(), q, 1e-12 * max(1.0, qc.modulus(q)))


@given(quats, st.integers(0, 2**32 - 1))
def test_similarity_orbit(q, seed):
    rng = np.random.default_rng(seed)
    s = Quaternion(*rng.standard_normal(4))
    s = s / qc.modulus(s)
    t = Quaternion(*rng.standard_normal(4))
    t = t / qc.modulus(t)
    p = qc.inverse(s) * q * s
    r = qc.inverse(t) * p * t
    # reflexive, symmetric, transitive on the sampled triple
    assert qc.similar(q, q, 1e-10)
    assert qc.similar(p, q, 1e-10) and qc.similar(q, p, 1e-10)
    assert qc.similar(r, q, 1e-10)


# -- text syntax ---------------------------------------------------------------


@pytest.mark.parametrize("text, expected", [
    ("1-2i+0.5k", Quaternion(1, -2, 0, 0.5)),
    ("-j", Quaternion(0, 0, -1, 0)),
    ("0", ZERO),
    ("2.5e-3i", Quaternion(0, 2.5e-3, 0, 0)),
    ("-1E+2+k", Quaternion(-100, 0, 0, 1)),
    (" 3 ", Quaternion(3)),
])
def test_parse_quaternion(text, expected):
    assert qc.parse_quaternion(text) == expected


@pytest.mark.parametrize("text", ["", "i+i", "1 2", "1i2", "2x", "++1", "1+", "nan", "inf"])
def test_parse_quaternion_rejects(text):
    with pytest.raises(ParseError):
        qc.parse_quaternion(text)


def test_format_quaternion():
    assert qc.format_quaternion(K) == "1k"
    assert qc.format_quaternion(ZERO) == "0"
    assert qc.format_quaternion(Quaternion(1, -2, 0, 0.5)) == "1-2i+0.5k"


@given(quats)
def test_format_parse_round_trip(q):
    assert qc.parse_quaternion(qc.format_quaternion(q)) == q
