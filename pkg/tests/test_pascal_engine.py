from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from hexagrammum.conic_plane import INF, ConicPoint, PlanePoint, chord, incident, join, meet, tangent, veronese
from hexagrammum.labelling import LABELS, LTR, Label, array_of_label, parse_array
from hexagrammum.pascal_engine import (
    DEGENERATE,
    DEGENERATE_BAD,
    GENERIC,
    INVOLUTIVE,
    RICOCHET,
    TRIPLE,
    Hexad,
    IllegalHexadError,
    UndefinedPascalError,
    all_pascals,
    classify_sextuple,
    crosshairs_raw,
    degenerate_classes,
    involution_centres,
    pascal_of_array,
    pascal_of_label,
)

from conftest import affine_points, hexads

ARRAYS = [array_of_label(s) for s in LABELS]
arrays = st.permutations(LTR).map(lambda p: ((p[0], p[1], p[2]), (p[3], p[4], p[5])))


def labels(*texts):
    return frozenset(Label.parse(t) for t in texts)


def test_generic_example_pole(generic_points):
    h = Hexad.from_affine(generic_points)
    assert pascal_of_array(h, parse_array("ABC/FED")).coeffs == (3, -11, 14)


def test_ricochet_example_pole():
    h = Hexad.from_affine([0, 1, "inf", 2, Fraction(-2, 3), -2])
    assert pascal_of_array(h, parse_array("ABC/FED")).coeffs == (1, 0, 4)


def test_generic_sixty_distinct(generic_points):
    part = all_pascals(Hexad.from_affine(generic_points))
    assert part.n_classes == 60
    assert part.census() == {1: 60}


def test_involutive_hexad_has_57_lines():
    part = all_pascals(Hexad.from_affine([2, 3, 5, -5, -3, -2]))
    assert part.n_classes == 57
    (big,) = part.nontrivial()
    assert frozenset(big) == labels("k(1,23)", "k(4,23)", "k(5,23)", "k(6,23)")


def test_degenerate_nineteen_classes():
    h = Hexad.from_affine([0, 0, "inf", 1, -2, 3], relaxed=True)
    part = all_pascals(h)
    assert part.n_classes == 19
    assert part.census() == {6: 4, 4: 3, 2: 12}
    predicted = {c.labels for c in degenerate_classes()}
    assert {frozenset(c) for c in part.classes} == predicted


def test_degenerate_classes_combinatorics():
    classes = degenerate_classes()
    kinds = sorted((c.kind, len(c.labels)) for c in classes)
    assert kinds == [("I", 6)] * 4 + [("II", 4)] * 3 + [("III", 2)] * 12
    union = frozenset().union(*(c.labels for c in classes))
    assert union == frozenset(LABELS)
    found = {c.labels for c in classes}
    assert labels("k(1,56)", "k(6,12)", "k(2,46)", "k(4,23)", "k(5,13)", "k(3,45)") in found
    assert labels("k(4,36)", "k(1,36)", "k(3,14)", "k(6,14)") in found
    assert labels("k(2,15)", "k(5,24)") in found


@given(st.lists(affine_points, min_size=5, max_size=5, unique_by=lambda x: str(x)))
def test_degenerate_partition_matches_prediction(vals):
    """With A = B every class has the predicted labels; generic positions give exactly 19."""
    h = Hexad.from_affine([vals[0]] + vals, relaxed=True)
    part = all_pascals(h)
    predicted = [c.labels for c in degenerate_classes()]
    for cls in predicted:
        assert len({part.lines[s] for s in cls}) == 1
    assert part.n_classes <= 19


def test_degenerate_type_one_and_two_lines():
    h = Hexad.from_affine([0, 0, "inf", 1, -2, 3], relaxed=True)
    assert pascal_of_array(h, parse_array("ABD/FEC")) == chord(h["A"], h["C"])
    X = meet(chord(h["C"], h["E"]), chord(h["D"], h["F"]))
    assert pascal_of_array(h, parse_array("ACD/BFE")) == join(veronese(h["A"]), X)


@given(st.lists(affine_points, min_size=5, max_size=5, unique_by=lambda x: str(x)))
def test_type_three_points_distinct(vals):
    h = Hexad.from_affine([vals[0]] + vals, relaxed=True)
    P = meet(tangent(h["A"]), chord(h["C"], h["F"]))
    P2 = meet(chord(h["A"], h["E"]), chord(h["D"], h["F"]))
    assert P != P2
    # and the array in that position still has a well-defined Pascal
    pascal_of_array(h, parse_array("ACD/FBE"))


def test_illegal_hexads_rejected():
    with pytest.raises(IllegalHexadError):
        Hexad.from_affine([0, 0, 0, 1, 2, 3], relaxed=True)
    with pytest.raises(IllegalHexadError):
        Hexad.from_affine([0, 0, 1, 1, 2, 3], relaxed=True)
    with pytest.raises(IllegalHexadError):
        Hexad.from_affine([0, 0, "inf", 1, 2, 3])


def test_undefined_pascal_when_cross_hairs_coincide():
    # bypass the hexad checks to exercise the pipeline on a triple point
    pts = tuple(ConicPoint.from_affine(x) for x in (0, 0, 0, 1, 2, 3))
    h = object.__new__(Hexad)
    object.__setattr__(h, "points", pts)
    object.__setattr__(h, "relaxed", True)
    with pytest.raises(UndefinedPascalError):
        pascal_of_array(h, parse_array("ABC/FED"))


@given(hexads, arrays)
def test_pascal_theorem_exact(vals, arr):
    h = Hexad.from_affine(vals)
    xs = [PlanePoint.of(q) for q in crosshairs_raw(h.linear, arr)]
    line = join(xs[0], xs[1])
    assert incident(xs[2], line)


@given(hexads, st.sampled_from(LABELS))
def test_pascal_constant_on_array_class(vals, s):
    h = Hexad.from_affine(vals)
    top, bot = array_of_label(s)
    cols = list(zip(top, bot))
    expected = pascal_of_label(h, s)
    for perm in permutations(cols):
        for swap in (0, 1):
            arr = (tuple(c[swap] for c in perm), tuple(c[1 - swap] for c in perm))
            assert pascal_of_array(h, arr) == expected


def test_classify_examples(generic_points):
    assert classify_sextuple(generic_points).kind == GENERIC
    c = classify_sextuple([1, -1, 2, -2, 3, -3])
    assert c.kind == INVOLUTIVE and c.centres[0].coeffs == (0, 1, 0)
    assert classify_sextuple([0, 1, "inf", 2, Fraction(1, 2), -1]).kind == TRIPLE
    assert classify_sextuple([0, 1, "inf", 2, Fraction(-2, 3), -2]).kind == RICOCHET
    assert classify_sextuple([0, 0, "inf", 1, -2, 3]).kind == DEGENERATE
    assert classify_sextuple([0, 0, 0, 1, 2, 3]).kind == DEGENERATE_BAD
    assert classify_sextuple([0, 0, 1, 1, 2, 3]).kind == DEGENERATE_BAD


@given(hexads)
def test_coincident_hexads_never_classified_generic(vals):
    c = classify_sextuple(vals)
    if c.partition.n_classes < 60:
        assert c.kind != GENERIC
    else:
        assert c.kind == GENERIC


def test_involution_centres_of_even_hexad():
    h = Hexad.from_affine([1, -1, 2, -2, 3, -3])
    assert [c.coeffs for c in involution_centres(h)] == [(0, 1, 0)]


def test_sextic_and_accessors():
    h = Hexad.from_affine([0, 1, "inf", 2, 3, 4])
    assert h.affine[2] is INF
    assert h.sextic().order == 6
    assert h.double_pair() is None
    assert Hexad.from_affine([5, 1, 5, 2, 3, 4], relaxed=True).double_pair() == ("A", "C")
