"""Pascal lines of hexads, their coincidences, and the degenerate (one double point) case."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Mapping, Sequence

from .binary_forms import BinaryForm, DegenerateInputError, ProjectiveForm, transvectant
from .conic_plane import ConicPoint, Line, PlanePoint, chord, concurrent, incident, meet, parse_affine
from .labelling import (
    LABELS,
    LTR,
    SYNTHEME_OF_LETTER_DUAD,
    Label,
    crosshair_pairs,
    duad,
    interference_class,
    label_array_table,
)


class UndefinedPascalError(DegenerateInputError):
    """All cross-hairs coincide, or two opposite sides are the same line."""


class CollinearityError(AssertionError):
    """The three cross-hair points failed to be collinear (would contradict Pascal)."""


class IllegalHexadError(DegenerateInputError):
    pass


# -- generic pipeline ----------------------------------------------------------


def crosshairs_raw(linear: Mapping[str, BinaryForm], arr) -> list[BinaryForm]:
    """Cross-hair points of an array as raw quadratics over any coefficient ring."""
    out = []
    for (x1, y1), (x2, y2) in crosshair_pairs(arr):
        side1 = linear[x1] * linear[y1]
        side2 = linear[x2] * linear[y2]
        out.append(transvectant(side1, side2, 1))
    return out


def pascal_raw(linear: Mapping[str, BinaryForm], arr) -> tuple[BinaryForm, list[BinaryForm]]:
    """Pole of the Pascal through the first two cross-hairs, unnormalized."""
    xs = crosshairs_raw(linear, arr)
    return transvectant(xs[0], xs[1], 1), xs


# -- hexads --------------------------------------------------------------------


@dataclass(frozen=True)
class Hexad:
    """Points A..F on the conic.

    With ``relaxed=True`` exactly one coincident pair is tolerated; a triple
    point or two double points are rejected either way.
    """

    points: tuple[ConicPoint, ...]
    relaxed: bool = False

    def __post_init__(self):
        if len(self.points) != 6:
            raise ValueError("a hexad has six points")
        mult = sorted(Counter(self.points).values(), reverse=True)
        if mult[0] == 1:
            return
        if not self.relaxed:
            raise IllegalHexadError("hexad points must be distinct")
        if mult[0] > 2 or mult[1] > 1:
            raise IllegalHexadError("at most one coincident pair is allowed")

    @classmethod
    def from_affine(cls, values: Iterable[Any], relaxed: bool = False) -> "Hexad":
        return cls(tuple(ConicPoint.from_affine(parse_affine(v)) for v in values), relaxed)

    def __getitem__(self, letter: str) -> ConicPoint:
        return self.points[LTR.index(letter)]

    @property
    def linear(self) -> dict[str, BinaryForm]:
        return {x: self[x].linear for x in LTR}

    @property
    def affine(self) -> tuple:
        return tuple(z.affine for z in self.points)

    def double_pair(self) -> tuple[str, str] | None:
        for x, y in combinations(LTR, 2):
            if self[x] == self[y]:
                return (x, y)
        return None

    def sextic(self) -> BinaryForm:
        G = BinaryForm([1])
        for z in self.points:
            G = G * z.linear
        return G


def pascal_of_array(h: Hexad, arr) -> Line:
    """The Pascal line of an array; a coincident pair XY is read as the tangent at X."""
    xs = []
    for q in crosshairs_raw(h.linear, arr):
        if q.is_zero():
            raise UndefinedPascalError(f"opposite sides coincide in {arr}")
        xs.append(PlanePoint(ProjectiveForm(q)))
    distinct = list(dict.fromkeys(xs))
    if len(distinct) == 1:
        raise UndefinedPascalError(f"all cross-hairs coincide in {arr}")
    line = Line(PlanePoint(ProjectiveForm(transvectant(distinct[0].quadratic, distinct[1].quadratic, 1))))
    for x in xs:
        if not incident(x, line):
            raise CollinearityError(f"cross-hairs of {arr} are not collinear")
    return line


def pascal_of_label(h: Hexad, s: Label) -> Line:
    return pascal_of_array(h, label_array_table()[s])


@dataclass
class CoincidencePartition:
    lines: dict[Label, Line]
    classes: list[tuple[Label, ...]]

    @property
    def n_classes(self) -> int:
        return len(self.classes)

    def census(self) -> dict[int, int]:
        """Class size -> number of classes of that size."""
        return dict(sorted(Counter(len(c) for c in self.classes).items(), reverse=True))

    def nontrivial(self) -> list[tuple[Label, ...]]:
        return [c for c in self.classes if len(c) > 1]

    def class_of(self, s: Label) -> tuple[Label, ...]:
        return next(c for c in self.classes if s in c)

    def coincident_pairs(self) -> Iterable[tuple[Label, Label]]:
        for c in self.classes:
            yield from combinations(c, 2)


def all_pascals(h: Hexad) -> CoincidencePartition:
    lines = {s: pascal_of_label(h, s) for s in LABELS}
    groups: dict[Line, list[Label]] = {}
    for s in LABELS:
        groups.setdefault(lines[s], []).append(s)
    return CoincidencePartition(lines, [tuple(g) for g in groups.values()])


# -- the discriminant locus -----------------------------------------------------


@dataclass(frozen=True)
class DegenerateClass:
    kind: str  # "I", "II" or "III"
    labels: frozenset


def _common_element_labels(s1: frozenset, s2: frozenset) -> list[Label]:
    out = []
    for d1 in s1:
        for d2 in s2:
            shared = d1 & d2
            if len(shared) == 1:
                (a,) = shared
                (b,) = d1 - shared
                (c,) = d2 - shared
                out.append(Label(a, b, c))
    return out


def degenerate_classes(pair: tuple[str, str] = ("A", "B")) -> list[DegenerateClass]:
    """Predicted equal-Pascal classes when the two given letters coincide."""
    x, y = pair
    others = [z for z in LTR if z not in pair]
    classes = []
    for z in others:
        labels = _common_element_labels(
            SYNTHEME_OF_LETTER_DUAD[duad(x, z)], SYNTHEME_OF_LETTER_DUAD[duad(y, z)]
        )
        classes.append(DegenerateClass("I", frozenset(labels)))
    synth = sorted(tuple(sorted(d)) for d in SYNTHEME_OF_LETTER_DUAD[duad(x, y)])
    for (a, b), (c, d) in combinations(synth, 2):
        labels = {Label(a, c, d), Label(b, c, d), Label(c, a, b), Label(d, a, b)}
        classes.append(DegenerateClass("II", frozenset(labels)))
    seen = set()
    for ab in synth:
        for cd in synth:
            if ab == cd:
                continue
            for a, b in (ab, ab[::-1]):
                for c, d in (cd, cd[::-1]):
                    cls = frozenset({Label(a, b, c), Label(b, a, d)})
                    if cls not in seen:
                        seen.add(cls)
                        classes.append(DegenerateClass("III", cls))
    return classes


# -- classification -------------------------------------------------------------

def _perfect_matchings(items: Sequence[str]) -> list[tuple[tuple[str, str], ...]]:
    if not items:
        return [()]
    first, rest = items[0], items[1:]
    out = []
    for i, other in enumerate(rest):
        remaining = rest[:i] + rest[i + 1:]
        for m in _perfect_matchings(remaining):
            out.append(((first, other),) + m)
    return out


MATCHINGS = tuple(_perfect_matchings(LTR))


def involution_centres(h: Hexad) -> list[PlanePoint]:
    """Points where three chords pairing up the hexad are concurrent."""
    centres = []
    for m in MATCHINGS:
        lines = [chord(h[x], h[y]) for x, y in m]
        if len(set(lines)) < 3:
            continue
        if concurrent(*lines):
            c = meet(lines[0], lines[1])
            if c not in centres:
                centres.append(c)
    return centres


GENERIC = "Generic60"
DEGENERATE = "Degenerate19"
DEGENERATE_BAD = "DegenerateBad"
INVOLUTIVE = "Involutive"
TRIPLE = "TripleSymmetric"
RICOCHET = "Ricochet"
RICOCHET_INVOLUTIVE = "RicochetAndInvolutive"


class UnexplainedCoincidenceError(RuntimeError):
    """Pascals coincide but the sextuple is neither involutive nor ricochet."""


@dataclass
class Classification:
    kind: str
    centres: tuple[PlanePoint, ...] = ()
    partition: CoincidencePartition | None = None
    theta_15_0: Any = None
    detail: dict = field(default_factory=dict)

    def __str__(self) -> str:
        if self.centres:
            return f"{self.kind} centres=" + ",".join(repr(c.form) for c in self.centres)
        return self.kind


def has_ricochet_pattern(partition: CoincidencePartition) -> bool:
    return any(interference_class(s, t) == "I1" for s, t in partition.coincident_pairs())


def classify_sextuple(points: Sequence[Any]) -> Classification:
    from . import covariants

    pts = [p if isinstance(p, ConicPoint) else ConicPoint.from_affine(parse_affine(p)) for p in points]
    if len(pts) != 6:
        raise ValueError("a sextuple has six points")
    mult = sorted(Counter(pts).values(), reverse=True)
    if mult[0] >= 3 or (mult[0] == 2 and mult[1] == 2):
        return Classification(DEGENERATE_BAD, detail={"multiplicities": mult})
    h = Hexad(tuple(pts), relaxed=mult[0] == 2)
    partition = all_pascals(h)
    if mult[0] == 2:
        return Classification(DEGENERATE, partition=partition, detail={"classes": partition.n_classes})
    if partition.n_classes == 60:
        return Classification(GENERIC, partition=partition)
    G = h.sextic()
    t15 = covariants.theta_15_0(G).coeffs[0]
    ricochet = has_ricochet_pattern(partition)
    if t15 == 0:
        centres = tuple(involution_centres(h))
        if ricochet:
            return Classification(RICOCHET_INVOLUTIVE, centres, partition, t15)
        t82 = covariants.theta_8_2(G)
        if t82.is_zero():
            return Classification(TRIPLE, centres, partition, t15)
        return Classification(INVOLUTIVE, (PlanePoint.of(t82.form),), partition, t15)
    if ricochet:
        return Classification(RICOCHET, (), partition, t15)
    raise UnexplainedCoincidenceError(
        f"coincidences {partition.nontrivial()} without involution or ricochet pattern"
    )
