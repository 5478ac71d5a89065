"""Synthetic constructions of hexads with coincident Pascals.

Each generator returns the hexad together with the auxiliary points of the
construction, and checks the coincidences it is supposed to produce.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binary_forms import BinaryForm, DegenerateInputError, substitute
from .conic_plane import (
    ConicPoint,
    Line,
    PlanePoint,
    chord,
    incident,
    join,
    meet,
    on_conic,
    parse_affine,
    polar,
    sigma_conic,
    tangent,
)
from .labelling import Label, parse_array
from .pascal_engine import Hexad, pascal_of_array
from .solver import FAMILIES, DegenerateConfigurationError, solution_family

__all__ = [
    "DegenerateConfigurationError",
    "InvolutionData",
    "RicochetData",
    "TripleSymmetricData",
    "make_involution",
    "make_ricochet",
    "make_triple_symmetric",
    "family_hexad",
    "family_sextic",
    "ricochet_invariant_value",
    "solution_family",
    "INVOLUTION_LABELS",
    "RICOCHET_ARRAYS",
    "TRIPLE_QUADRUPLES",
    "TRIPLE_TRIPLE",
]

# Pascals equal to the polar of the centre when sigma swaps A<->F, B<->E, C<->D
INVOLUTION_ARRAYS = ("ABC/FED", "ABD/FEC", "FBC/AED", "AEC/FBD")
INVOLUTION_LABELS = (Label(1, 2, 3), Label(4, 2, 3), Label(5, 2, 3), Label(6, 2, 3))
RICOCHET_ARRAYS = ("ABC/FED", "AEC/DBF")

TRIPLE_QUADRUPLES = (
    (Label(1, 4, 5), Label(2, 4, 5), Label(3, 4, 5), Label(6, 4, 5)),
    (Label(1, 5, 6), Label(2, 5, 6), Label(3, 5, 6), Label(4, 5, 6)),
    (Label(1, 4, 6), Label(2, 4, 6), Label(3, 4, 6), Label(5, 4, 6)),
)
TRIPLE_TRIPLE = (Label(1, 2, 3), Label(2, 1, 3), Label(3, 1, 2))

# the cyclic substitution x1 -> x1 - x2, x2 -> x1
SIGMA = ((1, -1), (1, 0))


def _as_point(z) -> ConicPoint:
    return z if isinstance(z, ConicPoint) else ConicPoint.from_affine(parse_affine(z))


def _distinct_or_raise(points, what: str) -> None:
    if len(set(points)) != len(points):
        raise DegenerateConfigurationError(f"{what}: constructed points collide")


@dataclass(frozen=True)
class InvolutionData:
    hexad: Hexad
    centre: PlanePoint
    pascal: Line


def make_involution(Q, z1, z2, z3) -> InvolutionData:
    """A = z1, B = z2, C = z3 and F, E, D their images under the involution centred at Q."""
    Q = Q if isinstance(Q, PlanePoint) else PlanePoint.of(Q)
    if on_conic(Q):
        raise DegenerateConfigurationError("involution centre lies on the conic")
    A, B, C = (_as_point(z) for z in (z1, z2, z3))
    F, E, D = (sigma_conic(Q, z) for z in (A, B, C))
    _distinct_or_raise([A, B, C, D, E, F], "involution")
    h = Hexad((A, B, C, D, E, F))
    line = polar(Q)
    for text in INVOLUTION_ARRAYS:
        if pascal_of_array(h, parse_array(text)) != line:
            raise AssertionError(f"Pascal {text} is not the polar of the centre")
    return InvolutionData(h, Q, line)


@dataclass(frozen=True)
class RicochetData:
    hexad: Hexad
    V: PlanePoint
    W: PlanePoint
    Z: ConicPoint
    pascal: Line


def make_ricochet(A, B, C, D) -> RicochetData:
    A, B, C, D = (_as_point(z) for z in (A, B, C, D))
    _distinct_or_raise([A, B, C, D], "ricochet input")
    V = meet(tangent(A), tangent(C))
    F = sigma_conic(V, D)
    _distinct_or_raise([A, B, C, D, F], "ricochet (F)")
    W = meet(chord(A, F), chord(C, D))
    if on_conic(W):
        raise DegenerateConfigurationError("ricochet: W lies on the conic")
    Z = sigma_conic(V, B)
    E = sigma_conic(W, Z)
    _distinct_or_raise([A, B, C, D, E, F], "ricochet (E)")
    h = Hexad((A, B, C, D, E, F))
    try:
        line = join(V, W)
    except DegenerateInputError as exc:
        raise DegenerateConfigurationError("ricochet: V = W") from exc
    for text in RICOCHET_ARRAYS:
        if pascal_of_array(h, parse_array(text)) != line:
            raise AssertionError(f"Pascal {text} is not the line VW")
    return RicochetData(h, V, W, Z, line)


@dataclass(frozen=True)
class TripleSymmetricData:
    hexad: Hexad
    T: PlanePoint
    Q4: PlanePoint
    Q5: PlanePoint
    Q6: PlanePoint

    @property
    def centres(self) -> dict[str, PlanePoint]:
        return {"Q4": self.Q4, "Q5": self.Q5, "Q6": self.Q6}


# which three chords pass through which centre
TRIPLE_CONCURRENCES = {
    "Q6": (("A", "D"), ("B", "E"), ("C", "F")),
    "Q4": (("A", "E"), ("C", "D"), ("B", "F")),
    "Q5": (("A", "F"), ("C", "E"), ("B", "D")),
}


def make_triple_symmetric(p) -> TripleSymmetricData:
    p = Fraction(p)
    if p in (0, 1):
        raise DegenerateConfigurationError(f"p = {p} is excluded")
    q, r = (p - 1) / p, 1 / (1 - p)
    pts = [ConicPoint.from_affine(x) for x in (0, 1, "inf", p, q, r)]
    _distinct_or_raise(pts, f"triple-symmetric p={p}")
    h = Hexad(tuple(pts))
    alpha, beta, gamma = p - 1, Fraction(1), -p
    T = PlanePoint.of([1, -1, 1])
    Q6 = PlanePoint.of([alpha, 2 * beta, gamma])
    Q4 = PlanePoint.of([beta, 2 * gamma, alpha])
    Q5 = PlanePoint.of([gamma, 2 * alpha, beta])
    data = TripleSymmetricData(h, T, Q4, Q5, Q6)
    for name, pairs in TRIPLE_CONCURRENCES.items():
        lines = [chord(h[x], h[y]) for x, y in pairs]
        centre = data.centres[name]
        if not all(incident(centre, L) for L in lines):
            raise AssertionError(f"chords {pairs} miss {name}")
    return data


def family_hexad(case, *params) -> Hexad:
    p, q, r = solution_family(case, *params)
    return Hexad.from_affine([0, 1, "inf", p, q, r])


def family_sextic(case, *params) -> BinaryForm:
    """G for the family, each linear form taken with the denominator of its coordinate cleared.

    This is the normalization in which theta_15_0 is a polynomial in the
    parameters (so ratios between parameter values are meaningful).
    """
    key = str(case) if str(case).startswith("I") else f"I{case}"
    fam = FAMILIES[key]
    solution_family(key, *params)  # collision check
    env = [Fraction(0)] * 3
    for name, v in zip(fam.params, params):
        env["pqr".index(name)] = Fraction(v)
    G = BinaryForm([1, 0]) * BinaryForm([1, -1]) * BinaryForm([0, 1])
    for num, den in fam.coords:
        G = G * BinaryForm([den.evaluate(env), -num.evaluate(env)])
    return G


def ricochet_invariant_value(p) -> Fraction:
    p = Fraction(p)
    return (
        p**18
        * (p**2 + 3)
        * (3 * p**2 + 1)
        * (p**2 + 1)
        * (p**2 + p + 1)
        * (p**2 - p + 1)
        * (p**2 + 2 * p - 1) ** 2
        * (p**2 - 2 * p - 1) ** 2
        * (p - 1) ** 3
        * (p + 1) ** 3
    )


def sigma_image(F: BinaryForm) -> BinaryForm:
    return substitute(F, SIGMA)
