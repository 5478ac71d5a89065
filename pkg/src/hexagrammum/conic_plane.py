"""The plane P(S_2), the conic of squares, polarity and the quadratic involution.

A point of the plane is a quadratic form up to scale.  The conic is the
image of the Veronese map ``[u] -> [u^2]``; a point of the conic is kept as
its linear form ``u``.  A line is stored by its pole, so every incidence
question reduces to a transvectant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .binary_forms import BinaryForm, DegenerateInputError, ProjectiveForm, transvectant


class _Infinity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()

Affine = Union[Fraction, _Infinity]


class InvalidCentreError(DegenerateInputError):
    """The centre of an involution lies on the conic."""


def parse_affine(value) -> Affine:
    if value is INF:
        return INF
    if isinstance(value, str) and value.strip().lower() in ("inf", "oo", "infinity"):
        return INF
    return Fraction(value)


@dataclass(frozen=True)
class ConicPoint:
    form: ProjectiveForm

    def __post_init__(self):
        if self.form.order != 1:
            raise ValueError("a conic point is a linear form")

    @classmethod
    def from_affine(cls, alpha) -> "ConicPoint":
        """x1 - alpha*x2 for finite alpha; x2 for infinity."""
        alpha = parse_affine(alpha)
        if alpha is INF:
            return cls(ProjectiveForm([0, 1]))
        return cls(ProjectiveForm([1, -alpha]))

    @classmethod
    def from_linear(cls, u: BinaryForm) -> "ConicPoint":
        return cls(ProjectiveForm(u))

    @property
    def linear(self) -> BinaryForm:
        return self.form.form

    @property
    def affine(self) -> Affine:
        a, b = self.form.coeffs
        if a == 0:
            return INF
        return Fraction(-b, a)

    def __repr__(self) -> str:
        return f"ConicPoint({self.affine})"


@dataclass(frozen=True)
class PlanePoint:
    form: ProjectiveForm

    def __post_init__(self):
        if self.form.order != 2:
            raise ValueError("a plane point is a quadratic form")

    @classmethod
    def of(cls, quad) -> "PlanePoint":
        """Build from a BinaryForm or a coefficient triple (a0, a1, a2)."""
        return cls(ProjectiveForm(quad))

    @property
    def quadratic(self) -> BinaryForm:
        return self.form.form

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self.form.coeffs

    def __repr__(self) -> str:
        return f"PlanePoint{self.form!r}"


@dataclass(frozen=True)
class Line:
    pole: PlanePoint

    @property
    def coeffs(self) -> tuple[int, int, int]:
        return self.pole.coeffs

    def __repr__(self) -> str:
        return f"Line(pole={self.pole.form!r})"


def veronese(z: ConicPoint) -> PlanePoint:
    u = z.linear
    return PlanePoint.of(u * u)


def self_pairing(P: PlanePoint) -> Fraction:
    Q = P.quadratic
    return transvectant(Q, Q, 2).coeffs[0]


def on_conic(P: PlanePoint) -> bool:
    return self_pairing(P) == 0


def polar(P: PlanePoint) -> Line:
    return Line(P)


def pole(L: Line) -> PlanePoint:
    return L.pole


def _first_transvectant(Q: BinaryForm, R: BinaryForm, what: str) -> ProjectiveForm:
    X = transvectant(Q, R, 1)
    if X.is_zero():
        raise DegenerateInputError(f"{what} of coincident arguments is undefined")
    return ProjectiveForm(X)


def join(P: PlanePoint, R: PlanePoint) -> Line:
    return Line(PlanePoint(_first_transvectant(P.quadratic, R.quadratic, "join")))


def meet(L1: Line, L2: Line) -> PlanePoint:
    return PlanePoint(_first_transvectant(L1.pole.quadratic, L2.pole.quadratic, "meet"))


def pairing(P: PlanePoint, R: PlanePoint) -> Fraction:
    """(P, R)_2; zero exactly when each lies on the polar of the other."""
    return transvectant(P.quadratic, R.quadratic, 2).coeffs[0]


def incident(P: PlanePoint, L: Line) -> bool:
    return pairing(P, L.pole) == 0


def collinear(P1: PlanePoint, P2: PlanePoint, P3: PlanePoint) -> bool:
    if P1 == P2:
        return True
    return incident(P3, join(P1, P2))


def concurrent(L1: Line, L2: Line, L3: Line) -> bool:
    if L1 == L2:
        return True
    return incident(meet(L1, L2), L3)


def chord(z1: ConicPoint, z2: ConicPoint) -> Line:
    """Line through two conic points; the tangent when they coincide."""
    return Line(PlanePoint.of(z1.linear * z2.linear))


def tangent(z: ConicPoint) -> Line:
    return chord(z, z)


def _homogeneous(z: ConicPoint) -> tuple[Fraction, Fraction]:
    # affine alpha <-> (alpha, 1); infinity <-> (1, 0)
    a, b = z.form.coeffs
    return Fraction(-b), Fraction(a)


def _bracket(z: ConicPoint, w: ConicPoint) -> Fraction:
    (a1, b1), (a2, b2) = _homogeneous(z), _homogeneous(w)
    return a1 * b2 - a2 * b1


def cross_ratio(z1: ConicPoint, z2: ConicPoint, z3: ConicPoint, z4: ConicPoint) -> Affine:
    """<z1,z2,z3,z4> = (z1-z3)(z2-z4) / ((z1-z4)(z2-z3)), so <inf,0,1,w> = w."""
    if z1 == z2 or z1 == z3 or z2 == z3:
        raise DegenerateInputError("cross-ratio needs z1, z2, z3 pairwise distinct")
    num = _bracket(z1, z3) * _bracket(z2, z4)
    den = _bracket(z1, z4) * _bracket(z2, z3)
    if den == 0:
        return INF
    return num / den


def harmonic_pairs(Q1: PlanePoint, Q2: PlanePoint) -> bool:
    """Root pairs of Q1 and Q2 separate each other harmonically (apolarity)."""
    return pairing(Q1, Q2) == 0


def sigma_conic(Q: PlanePoint, z: ConicPoint) -> ConicPoint:
    """The other intersection of the line Qz with the conic."""
    if on_conic(Q):
        raise InvalidCentreError("involution centre lies on the conic")
    return ConicPoint(ProjectiveForm(transvectant(Q.quadratic, z.linear, 1)))


def sigma_plane(Q: PlanePoint, R: PlanePoint) -> PlanePoint:
    if on_conic(Q):
        raise InvalidCentreError("involution centre lies on the conic")
    q, r = Q.quadratic, R.quadratic
    qq = transvectant(q, q, 2).coeffs[0]
    qr = transvectant(q, r, 2).coeffs[0]
    return PlanePoint.of(r.scale(qq) - q.scale(2 * qr))


def quadratic_of_pair(z1: ConicPoint, z2: ConicPoint) -> PlanePoint:
    """The plane point whose quadratic has roots z1, z2 (the pole of chord z1 z2)."""
    return PlanePoint.of(z1.linear * z2.linear)
