"""Symbolic Pascal poles over Q[p, q, r] and the pairwise coincidence systems.

The hexad is normalized to A = 0, B = 1, C = inf, D = p, E = q, F = r.  For
two labels s, t the Pascals coincide iff the 2x3 matrix of their pole
coefficients has rank one, i.e. its three 2x2 minors vanish.

Known solution families are checked by substituting their rational
parametrization into the minors.  Completeness is probed by exhaustive
enumeration over small prime fields: every common zero is either illegal
(two points of the hexad collide), on the known family, or reported as
unexplained.  A finite-field scan is evidence, not proof.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Callable, Sequence

from . import kernels
from .binary_forms import BinaryForm, DegenerateInputError, transvectant
from .labelling import BASE_LABEL, REPRESENTATIVES, Label, array_of_label, interference_class
from .multipoly import ONE, P, Q, R, MultiPoly
from .pascal_engine import CollinearityError, pascal_raw

SCAN_CAVEAT = (
    "finite-field scan: evidence only; emptiness mod p does not certify emptiness over Q-bar"
)

ZERO = MultiPoly()
SYMBOLIC_LINEAR = {
    "A": BinaryForm([ONE, ZERO]),
    "B": BinaryForm([ONE, -ONE]),
    "C": BinaryForm([ZERO, ONE]),
    "D": BinaryForm([ONE, -P]),
    "E": BinaryForm([ONE, -Q]),
    "F": BinaryForm([ONE, -R]),
}

# differences of the finite points 0, 1, p, q, r; the only factors the
# chord/meet/join pipeline can introduce
_POINT_DIFFERENCES = (P, Q, R, P - 1, Q - 1, R - 1, P - Q, P - R, Q - R)


def _strip_common_factors(coeffs: Sequence[MultiPoly]) -> tuple[MultiPoly, ...]:
    coeffs = list(coeffs)
    changed = True
    while changed:
        changed = False
        for f in _POINT_DIFFERENCES:
            quotients = [c.exact_div(f) if c else c for c in coeffs]
            if all(q is not None for q in quotients):
                coeffs = quotients
                changed = True
    nonzero = [c for c in coeffs if c]
    contents = [c.content() for c in nonzero]
    num = gcd(*(x.numerator for x in contents))
    den = lcm(*(x.denominator for x in contents))
    scale = Fraction(den, num)
    _, lead = nonzero[0].leading()
    if lead < 0:
        scale = -scale
    return tuple(c * scale for c in coeffs)


@lru_cache(maxsize=None)
def symbolic_pascal(s: Label) -> tuple[MultiPoly, MultiPoly, MultiPoly]:
    """Pole coefficients (x1^2, x1 x2, x2^2) of Pascal s, with common factors removed."""
    pole, xs = pascal_raw(SYMBOLIC_LINEAR, array_of_label(s))
    if not transvectant(xs[2], pole, 2).coeffs[0].is_zero():
        raise CollinearityError(f"symbolic cross-hairs of {s} are not collinear")
    return _strip_common_factors(pole.coeffs)


@dataclass(frozen=True)
class MinorSystem:
    s: Label
    t: Label
    rows: tuple[tuple[MultiPoly, ...], tuple[MultiPoly, ...]]
    minors: tuple[MultiPoly, MultiPoly, MultiPoly]

    @property
    def case(self) -> str:
        return interference_class(self.s, self.t)


def minor_system(s: Label, t: Label) -> MinorSystem:
    if s == t:
        raise ValueError("minor system needs two different labels")
    a, b = symbolic_pascal(s), symbolic_pascal(t)
    minors = tuple(a[i] * b[j] - a[j] * b[i] for i, j in ((0, 1), (0, 2), (1, 2)))
    return MinorSystem(s, t, (a, b), minors)


def representative_system(case: str) -> MinorSystem:
    return minor_system(BASE_LABEL, REPRESENTATIVES[case])


# -- solution families ----------------------------------------------------------


class DegenerateConfigurationError(DegenerateInputError):
    """Parameters make two points of the configuration collide."""


@dataclass(frozen=True)
class SolutionFamily:
    """(p, q, r) as rational functions of the parameters.

    Parameters reuse the slots of p, q, r: ``params`` names the free ones.
    Each coordinate is a (numerator, denominator) pair of MultiPolys, and
    ``relations`` are polynomials vanishing exactly on the family (given a
    legal hexad), used to classify finite-field solutions.
    """

    case: str
    params: tuple[str, ...]
    coords: tuple[tuple[MultiPoly, MultiPoly], ...]
    relations: tuple[MultiPoly, ...]

    def point(self, values: dict[str, Fraction]) -> tuple[Fraction, Fraction, Fraction]:
        env = [Fraction(values.get(v, 0)) for v in ("p", "q", "r")]
        out = []
        for num, den in self.coords:
            d = den.evaluate(env)
            if d == 0:
                raise DegenerateConfigurationError(f"family {self.case} undefined at {values}")
            out.append(num.evaluate(env) / d)
        return tuple(out)


FAMILIES: dict[str, SolutionFamily] = {
    "I1": SolutionFamily(
        "I1", ("p",),
        ((P, ONE), (P * (1 - P), 1 + P), (-P, ONE)),
        (Q * (1 + P) - P * (1 - P), R + P),
    ),
    "I4": SolutionFamily(
        "I4", ("p",),
        ((P, ONE), (P, P + 1), (P, 1 - P * P)),
        (Q * (P + 1) - P, R * (1 - P * P) - P),
    ),
    "I5": SolutionFamily(
        "I5", ("p",),
        ((P, ONE), (P - 1, P), (ONE, 1 - P)),
        (Q * P - (P - 1), R * (1 - P) - 1),
    ),
    "I9": SolutionFamily(
        "I9", ("p", "r"),
        ((P, ONE), (P * (R - 1), P - 1), (R, ONE)),
        (Q * (P - 1) - P * (R - 1),),
    ),
}


def hexad_collision(p, q, r) -> bool:
    pts = [Fraction(0), Fraction(1), p, q, r]
    return len(set(pts)) < 5


def solution_family(case: str | int, *params) -> tuple[Fraction, Fraction, Fraction]:
    """Numeric (p, q, r) on the family of the given interference case."""
    key = str(case) if str(case).startswith("I") else f"I{case}"
    fam = FAMILIES[key]
    if len(params) != len(fam.params):
        raise TypeError(f"family {key} takes parameters {fam.params}")
    values = dict(zip(fam.params, (Fraction(x) for x in params)))
    pqr = fam.point(values)
    if hexad_collision(*pqr):
        raise DegenerateConfigurationError(f"family {key} at {params} has colliding points")
    return pqr


def verify_family(system: MinorSystem, family: SolutionFamily) -> bool:
    """True iff every minor vanishes identically along the family."""
    if system.case != family.case:
        raise ValueError(f"family {family.case} does not match system of case {system.case}")
    nums = [num for num, _ in family.coords]
    dens = [den for _, den in family.coords]
    for m in system.minors:
        degs = [m.degree(i) for i in range(3)]
        total = ZERO
        for e, c in m.terms.items():
            t = MultiPoly.const(c)
            for i in range(3):
                t = t * nums[i] ** e[i] * dens[i] ** (degs[i] - e[i])
            total = total + t
        if not total.is_zero():
            return False
    return True


# -- finite-field scans -----------------------------------------------------------


@dataclass
class ScanReport:
    s: Label
    t: Label
    case: str
    prime: int
    total: int
    illegal: int
    family: int
    unexplained: int
    unexplained_points: list[tuple[int, int, int]] = field(default_factory=list)
    backend: str = ""

    def to_dict(self) -> dict:
        return {
            "s": str(self.s),
            "t": str(self.t),
            "case": self.case,
            "prime": self.prime,
            "total": self.total,
            "illegal": self.illegal,
            "family": self.family,
            "unexplained": self.unexplained,
            "unexplained_points": [list(x) for x in self.unexplained_points],
            "caveat": SCAN_CAVEAT,
        }

    def render(self) -> str:
        lines = [
            f"scan {self.s} {self.t} case={self.case} prime={self.prime}",
            f"total {self.total}",
            f"illegal {self.illegal}",
            f"family {self.family}",
            f"unexplained {self.unexplained}",
        ]
        lines += [f"  {p} {q} {r}" for p, q, r in self.unexplained_points]
        lines.append(f"note: {SCAN_CAVEAT}")
        return "\n".join(lines)


def _reduce_mod(poly: MultiPoly, prime: int) -> list[tuple[int, int, int, int]]:
    out = []
    for (i, j, k), c in poly.terms.items():
        if c.denominator % prime == 0:
            raise ValueError(f"coefficient {c} not defined mod {prime}")
        v = c.numerator * pow(c.denominator, -1, prime) % prime
        if v:
            out.append((i, j, k, v))
    return out


def _relations_hold(relations, prime: int) -> Callable[[int, int, int], bool]:
    reduced = [_reduce_mod(rel, prime) for rel in relations]

    def check(p, q, r):
        for terms in reduced:
            if sum(c * pow(p, i, prime) * pow(q, j, prime) * pow(r, k, prime) for i, j, k, c in terms) % prime:
                return False
        return True

    return check


def finite_field_scan(s: Label, t: Label, prime: int, backend: str | None = None) -> ScanReport:
    if prime < 5:
        raise ValueError("scan prime must be at least 5")
    system = minor_system(s, t)
    case = system.case
    polys = [_reduce_mod(m, prime) for m in system.minors]
    zeros = kernels.common_zeros(polys, prime, backend=backend)
    fam = FAMILIES.get(case)
    on_family = _relations_hold(fam.relations, prime) if fam else None
    illegal = family = 0
    unexplained = []
    for p, q, r in zeros:
        if len({0, 1, p, q, r}) < 5:
            illegal += 1
        elif on_family is not None and on_family(p, q, r):
            family += 1
        else:
            unexplained.append((p, q, r))
    unexplained.sort()
    return ScanReport(
        s, t, case, prime, len(zeros), illegal, family, len(unexplained), unexplained,
        backend=backend or kernels.BACKEND,
    )


def scan_case(case: str, prime: int, backend: str | None = None) -> ScanReport:
    return finite_field_scan(BASE_LABEL, REPRESENTATIVES[case], prime, backend)
