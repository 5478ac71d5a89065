from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from hexagrammum.binary_forms import ProjectiveForm, substitute
from hexagrammum.conic_plane import (
    ConicPoint,
    PlanePoint,
    chord,
    harmonic_pairs,
    incident,
    meet,
    pairing,
    polar,
    quadratic_of_pair,
    tangent,
)
from hexagrammum.configurations import (
    INVOLUTION_LABELS,
    SIGMA,
    TRIPLE_QUADRUPLES,
    TRIPLE_TRIPLE,
    family_sextic,
    make_involution,
    make_ricochet,
    make_triple_symmetric,
    ricochet_invariant_value,
    sigma_image,
)
from hexagrammum.covariants import theta_8_2, theta_15_0
from hexagrammum.labelling import LTR, Label
from hexagrammum.pascal_engine import all_pascals, has_ricochet_pattern, pascal_of_label
from hexagrammum.solver import DegenerateConfigurationError, solution_family

pt = ConicPoint.from_affine
ratl = st.fractions(min_value=-9, max_value=9, max_denominator=6)


def test_involution_example():
    data = make_involution(PlanePoint.of([0, 1, 0]), 2, 3, 5)
    assert sorted(data.hexad.affine) == [-5, -3, -2, 2, 3, 5]
    assert data.hexad.affine == (2, 3, 5, -5, -3, -2)
    for s in INVOLUTION_LABELS:
        assert pascal_of_label(data.hexad, s) == polar(PlanePoint.of([0, 1, 0]))


def test_involution_rejects_bad_centres():
    with pytest.raises(DegenerateConfigurationError):
        make_involution(PlanePoint.of([1, 0, 0]), 2, 3, 5)
    # 0 is fixed by z -> -z
    with pytest.raises(DegenerateConfigurationError):
        make_involution(PlanePoint.of([0, 1, 0]), 0, 3, 5)


def test_ricochet_example():
    data = make_ricochet(0, 1, "inf", 2)
    assert data.hexad.affine[4:] == (Fraction(-2, 3), -2)
    assert data.V.coeffs == (0, 1, 0)
    assert data.W.coeffs == (1, -4, -4)
    assert data.pascal.coeffs == (1, 0, 4)


@pytest.mark.parametrize("p", [2, 3, Fraction(-5, 2), Fraction(7, 3)])
def test_ricochet_general_points(p):
    data = make_ricochet(0, 1, "inf", p)
    p = Fraction(p)
    assert data.hexad.affine[4:] == (p * (1 - p) / (1 + p), -p)


def test_ricochet_rejects_collision():
    with pytest.raises(DegenerateConfigurationError):
        make_ricochet(0, 1, "inf", 0)


@st.composite
def ricochet_inputs(draw):
    vals = draw(st.lists(ratl, min_size=4, max_size=4, unique=True))
    return vals


@given(ricochet_inputs())
def test_ricochet_witnesses(vals):
    try:
        data = make_ricochet(*vals)
    except DegenerateConfigurationError:
        assume(False)
    h = data.hexad
    assert data.V == meet(tangent(h["A"]), tangent(h["C"]))
    assert incident(data.V, chord(h["D"], h["F"]))
    assert data.W == meet(chord(h["A"], h["F"]), chord(h["C"], h["D"]))
    assert incident(data.V, chord(h["B"], data.Z))
    assert incident(data.W, chord(data.Z, h["E"]))
    P = data.pascal.pole
    assert harmonic_pairs(quadratic_of_pair(h["A"], h["C"]), P)
    assert harmonic_pairs(quadratic_of_pair(h["D"], h["F"]), P)
    part = all_pascals(h)
    assert has_ricochet_pattern(part)
    assert part.class_of(Label(1, 2, 3)) == (Label(1, 2, 3), Label(1, 4, 5))


@given(ricochet_inputs(), ratl)
def test_ricochet_line_independent_of_b(vals, b2):
    A, B, C, D = vals
    try:
        first = make_ricochet(A, B, C, D)
        second = make_ricochet(A, b2, C, D)
    except DegenerateConfigurationError:
        assume(False)
    assert first.pascal == second.pascal


def test_triple_example():
    data = make_triple_symmetric(2)
    assert data.hexad.affine[3:] == (2, Fraction(1, 2), -1)
    assert data.Q6.coeffs == (1, 2, -2)


@pytest.mark.parametrize("p", [0, 1])
def test_triple_excluded_values(p):
    with pytest.raises(DegenerateConfigurationError):
        make_triple_symmetric(p)


def test_triple_special_values_share_one_hexad():
    sets = {frozenset(make_triple_symmetric(p).hexad.points) for p in (2, -1, Fraction(1, 2))}
    assert len(sets) == 1


@given(ratl)
def test_triple_properties(p):
    try:
        data = make_triple_symmetric(p)
    except DegenerateConfigurationError:
        assume(False)
    h = data.hexad
    G = h.sextic()
    assert ProjectiveForm(sigma_image(G)) == ProjectiveForm(G)
    assert theta_8_2(G).is_zero()
    T = data.T
    for Q in data.centres.values():
        assert pairing(Q, T) == 0
        assert incident(Q, polar(T))
    # centres cycle Q6 -> Q4 -> Q5 -> Q6 under sigma
    image = {k: PlanePoint.of(substitute(v.quadratic, SIGMA)) for k, v in data.centres.items()}
    assert image == {"Q6": data.Q4, "Q4": data.Q5, "Q5": data.Q6}
    # sigma permutes the points as (A B C)(D F E)
    moved = {x: ConicPoint.from_linear(substitute(h[x].linear, SIGMA)) for x in LTR}
    perm = {x: next(y for y in LTR if h[y] == moved[x]) for x in LTR}
    assert perm == {"A": "B", "B": "C", "C": "A", "D": "F", "F": "E", "E": "D"}
    for quad in TRIPLE_QUADRUPLES:
        assert len({pascal_of_label(h, s) for s in quad}) == 1
    assert {pascal_of_label(h, s) for s in TRIPLE_TRIPLE} == {polar(T)}


def test_solution_family_examples():
    assert solution_family(4, 2) == (2, Fraction(2, 3), Fraction(-2, 3))
    assert solution_family(9, 2, 3) == (2, 4, 3)
    assert solution_family(1, 2) == (2, Fraction(-2, 3), -2)
    assert solution_family("I5", 3) == (3, Fraction(2, 3), Fraction(-1, 2))
    with pytest.raises(DegenerateConfigurationError):
        solution_family(1, 0)
    with pytest.raises(DegenerateConfigurationError):
        solution_family(4, -1)
    with pytest.raises(TypeError):
        solution_family(9, 2)


def test_ricochet_invariant_roots():
    for p in (0, 1, -1):
        assert ricochet_invariant_value(p) == 0
    assert ricochet_invariant_value(2) != 0


def test_ricochet_invariant_ratio_constant():
    ratios = {theta_15_0(family_sextic(1, p)).coeffs[0] / ricochet_invariant_value(p) for p in range(2, 8)}
    assert len(ratios) == 1 and ratios != {0}
