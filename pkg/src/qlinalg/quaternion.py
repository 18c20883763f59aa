"""Quaternion scalars.

A quaternion is stored as four reals ``(w, x, y, z)``, the coefficients of
``1, i, j, k``. The pair-of-complex view ``z1 + z2 j`` is available through
:class:`ComplexPair` but is never the storage format.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

from .errors import DegenerateInput, DivisionByZero, InvalidAxes, ParseError

DEFAULT_TOL = 1e-12


def hamilton(aw, ax, ay, az, bw, bx, by, bz):
    """Hamilton product on raw components.

    Works on Python floats and on numpy arrays alike. Every product in the
    library goes through this one expression, so scalar and vectorised
    paths round identically.
    """
    return (
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    )


@dataclass(frozen=True, eq=False, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"quaternion component {name} is not finite: {value}")
            object.__setattr__(self, name, value)

    @classmethod
    def real(cls, r: float) -> Quaternion:
        return cls(r, 0.0, 0.0, 0.0)

    @property
    def components(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    @property
    def vector(self) -> tuple[float, float, float]:
        return (self.x, self.y, self.z)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        if isinstance(other, Quaternion):
            return self.components == other.components
        if isinstance(other, (int, float)):
            return self.components == (float(other), 0.0, 0.0, 0.0)
        return NotImplemented

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        return format_quaternion(self)

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    def __rmul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return mul(other, self)

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise DivisionByZero("division of a quaternion by zero")
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return modulus(self)

    def conjugate(self) -> Quaternion:
        return conjugate(self)


def _coerce(value):
    if isinstance(value, Quaternion):
        return value
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return Quaternion(float(value))
    return None


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)


class PureUnitQuaternion(Quaternion):
    """A quaternion with zero scalar part and unit modulus.

    The vector part is renormalised on construction; a scalar part larger
    than ``1e-12`` in magnitude or a vanishing vector part is rejected.
    """

    __slots__ = ()

    def __post_init__(self):
        Quaternion.__post_init__(self)
        if abs(self.w) > DEFAULT_TOL:
            raise DegenerateInput(f"pure unit quaternion needs zero scalar part, got {self.w!r}")
        norm = math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)
        if norm == 0.0:
            raise DegenerateInput("pure unit quaternion needs a nonzero vector part")
        object.__setattr__(self, "w", 0.0)
        if norm != 1.0:
            object.__setattr__(self, "x", self.x / norm)
            object.__setattr__(self, "y", self.y / norm)
            object.__setattr__(self, "z", self.z / norm)

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> PureUnitQuaternion:
        if isinstance(q, PureUnitQuaternion):
            return q
        return cls(q.w, q.x, q.y, q.z)

    @property
    def axis(self) -> Quaternion:
        return Quaternion(0.0, self.x, self.y, self.z)

    def __repr__(self):
        return f"PureUnitQuaternion(0.0, {self.x!r}, {self.y!r}, {self.z!r})"


I = PureUnitQuaternion(0.0, 1.0, 0.0, 0.0)
J = PureUnitQuaternion(0.0, 0.0, 1.0, 0.0)
K = PureUnitQuaternion(0.0, 0.0, 0.0, 1.0)


@dataclass(frozen=True)
class ComplexPair:
    """The pair ``(z1, z2)`` representing ``z1 + z2 j``."""

    z1: complex
    z2: complex

    @classmethod
    def from_quaternion(cls, q: Quaternion) -> ComplexPair:
        return cls(complex(q.w, q.x), complex(q.y, q.z))

    def to_quaternion(self) -> Quaternion:
        return Quaternion(self.z1.real, self.z1.imag, self.z2.real, self.z2.imag)

    def __mul__(self, other: ComplexPair) -> ComplexPair:
        x1, x2 = self.z1, self.z2
        z1, z2 = other.z1, other.z2
        return ComplexPair(x1 * z1 - x2 * z2.conjugate(), x2 * z1.conjugate() + z2 * x1)

    def conjugate(self) -> ComplexPair:
        return ComplexPair(self.z1.conjugate(), -self.z2)


@dataclass(frozen=True)
class SymplecticParts:
    """``q = q0p + q1p * mu_perp`` with both parts in the subfield of ``mu``."""

    q0p: Quaternion
    q1p: Quaternion
    mu: PureUnitQuaternion
    mu_perp: PureUnitQuaternion

    def recompose(self) -> Quaternion:
        return self.q0p + self.q1p * self.mu_perp


@dataclass(frozen=True)
class PolarForm:
    modulus: float
    axis: PureUnitQuaternion
    angle: float

    def to_quaternion(self) -> Quaternion:
        c, s = math.cos(self.angle), math.sin(self.angle)
        a = self.axis
        return Quaternion(self.modulus * c, self.modulus * s * a.x,
                          self.modulus * s * a.y, self.modulus * s * a.z)


# -- arithmetic ---------------------------------------------------------------


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(*hamilton(a.w, a.x, a.y, a.z, b.w, b.x, b.y, b.z))


def conjugate(q: Quaternion) -> Quaternion:
    return Quaternion(q.w, -q.x, -q.y, -q.z)


def scalar_part(q: Quaternion) -> float:
    return q.w


def vector_part(q: Quaternion) -> Quaternion:
    return Quaternion(0.0, q.x, q.y, q.z)


def modulus(q: Quaternion) -> float:
    return math.sqrt(q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z)


def inverse(q: Quaternion) -> Quaternion:
    n2 = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z
    if n2 == 0.0:
        raise DivisionByZero("zero quaternion has no inverse")
    return Quaternion(q.w / n2, -q.x / n2, -q.y / n2, -q.z / n2)


def _vnorm(q: Quaternion) -> float:
    return math.sqrt(q.x * q.x + q.y * q.y + q.z * q.z)


def _dot3(a: Quaternion, b: Quaternion) -> float:
    return a.x * b.x + a.y * b.y + a.z * b.z


def puq_of(q: Quaternion) -> PureUnitQuaternion:
    """Unit axis of ``q``: its vector part divided by the vector-part norm."""
    if _vnorm(q) == 0.0:
        raise DegenerateInput(f"{format_quaternion(q)} has no vector part, so no axis")
    return PureUnitQuaternion(0.0, q.x, q.y, q.z)


def are_orthogonal(mu: Quaternion, nu: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    return abs(_dot3(mu, nu)) < tol


def orthogonal_complement(mu: PureUnitQuaternion) -> PureUnitQuaternion:
    """Deterministic axis orthogonal to ``mu``.

    Gram-Schmidt of ``j`` against ``mu``; ``k`` is used instead when ``mu``
    lies within 1e-6 of ``+j`` or ``-j``.
    """
    near_j = (math.dist(mu.vector, J.vector) <= 1e-6
              or math.dist(mu.vector, (0.0, -1.0, 0.0)) <= 1e-6)
    seed = K if near_j else J
    d = _dot3(seed, mu)
    return PureUnitQuaternion(0.0, seed.x - d * mu.x, seed.y - d * mu.y, seed.z - d * mu.z)


def in_complex_subfield(q: Quaternion, mu: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    """True when ``q = a + b*mu`` for reals ``a, b``.

    The perpendicular residue of the vector part is compared against
    ``tol * max(1, |q|)``.
    """
    d = _dot3(q, mu)
    px, py, pz = q.x - d * mu.x, q.y - d * mu.y, q.z - d * mu.z
    return math.sqrt(px * px + py * py + pz * pz) <= tol * max(1.0, modulus(q))


def check_axes(mu: Quaternion, mu_perp: Quaternion, tol: float = DEFAULT_TOL):
    """Validate an axis pair and return both as :class:`PureUnitQuaternion`."""
    try:
        mu = PureUnitQuaternion.from_quaternion(mu)
        mu_perp = PureUnitQuaternion.from_quaternion(mu_perp)
    except DegenerateInput as exc:
        raise InvalidAxes(str(exc)) from exc
    if not are_orthogonal(mu, mu_perp, tol):
        raise InvalidAxes(f"axes {mu} and {mu_perp} are not orthogonal")
    return mu, mu_perp


def symplectic_decompose(q: Quaternion, mu: Quaternion, mu_perp: Quaternion) -> SymplecticParts:
    mu, mu_perp = check_axes(mu, mu_perp)
    nu = mul(mu, mu_perp)
    a = _dot3(q, mu)
    c = _dot3(q, mu_perp)
    d = _dot3(q, nu)
    q0p = Quaternion(q.w, a * mu.x, a * mu.y, a * mu.z)
    q1p = Quaternion(c, d * mu.x, d * mu.y, d * mu.z)
    return SymplecticParts(q0p, q1p, mu, mu_perp)


def to_polar(q: Quaternion) -> PolarForm:
    """Polar form ``|q| (cos a + mu sin a)``.

    Of the two equivalent choices ``(mu, a)`` and ``(-mu, -a)`` the one whose
    first nonzero axis component is positive is returned. Real inputs get
    axis ``i`` (angle 0 or pi).
    """
    r = modulus(q)
    if r == 0.0:
        raise DegenerateInput("zero quaternion has no polar form")
    vn = _vnorm(q)
    if vn == 0.0:
        return PolarForm(r, I, 0.0 if q.w > 0 else math.pi)
    angle = math.atan2(vn, q.w)
    axis = PureUnitQuaternion(0.0, q.x / vn, q.y / vn, q.z / vn)
    lead = next(c for c in axis.vector if c != 0.0)
    if lead < 0:
        axis = PureUnitQuaternion(0.0, -axis.x, -axis.y, -axis.z)
        angle = -angle
    return PolarForm(r, axis, angle)


def exp(q: Quaternion) -> Quaternion:
    ew = math.exp(q.w)
    vn = _vnorm(q)
    if vn == 0.0:
        return Quaternion(ew)
    s = ew * math.sin(vn) / vn
    return Quaternion(ew * math.cos(vn), s * q.x, s * q.y, s * q.z)


def canonical_representative(q: Quaternion) -> Quaternion:
    """Member of the similarity class of ``q`` of the form ``a + b i``, ``b >= 0``."""
    return Quaternion(q.w, _vnorm(q), 0.0, 0.0)


def similar(p: Quaternion, q: Quaternion, tol: float = DEFAULT_TOL) -> bool:
    cp, cq = canonical_representative(p), canonical_representative(q)
    scale = max(1.0, modulus(p), modulus(q))
    return abs(cp.w - cq.w) <= tol * scale and abs(cp.x - cq.x) <= tol * scale


# -- text syntax --------------------------------------------------------------

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_TERM = re.compile(rf"([+-])?({_NUMBER})?([ijk])?")
_SLOT = {"": 0, "i": 1, "j": 2, "k": 3}


def parse_quaternion(text: str) -> Quaternion:
    """Parse ``a+bi+cj+dk`` with any subset of terms, e.g. ``1-2i+0.5k`` or ``-j``."""
    s = text.strip()
    if not s:
        raise ParseError("empty quaternion literal")
    comps = [0.0, 0.0, 0.0, 0.0]
    seen = set()
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        sign, number, unit = m.group(1), m.group(2), m.group(3) or ""
        if m.end() == pos or (number is None and not unit):
            raise ParseError(f"cannot parse quaternion literal {text!r} at offset {pos}")
        if pos > 0 and sign is None:
            raise ParseError(f"missing sign between terms in {text!r}")
        if unit in seen:
            raise ParseError(f"repeated {'real' if not unit else unit} term in {text!r}")
        seen.add(unit)
        value = float(number) if number is not None else 1.0
        comps[_SLOT[unit]] = -value if sign == "-" else value
        pos = m.end()
    try:
        return Quaternion(*comps)
    except ValueError as exc:
        raise ParseError(f"{text!r}: {exc}") from exc


def format_float(value: float) -> str:
    return "%.17g" % value


def format_quaternion(q: Quaternion) -> str:
    parts = []
    for value, unit in zip(q.components, ("", "i", "j", "k")):
        if value == 0.0:
            continue
        token = format_float(value)
        if parts and not token.startswith("-"):
            token = "+" + token
        parts.append(token + unit)
    return "".join(parts) or "0"
