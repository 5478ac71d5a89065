import pytest
from hypothesis import assume, given, settings, strategies as st

from hexagrammum.binary_forms import ProjectiveForm
from hexagrammum.labelling import BASE_LABEL, LABELS, REPRESENTATIVES, Label
from hexagrammum.multipoly import P, Q, R
from hexagrammum.pascal_engine import Hexad, pascal_of_label
from hexagrammum.solver import (
    FAMILIES,
    SCAN_CAVEAT,
    SolutionFamily,
    finite_field_scan,
    minor_system,
    representative_system,
    scan_case,
    symbolic_pascal,
    verify_family,
)

ratl = st.fractions(min_value=-15, max_value=15, max_denominator=8)


def test_symbolic_k123():
    assert symbolic_pascal(Label(1, 2, 3)) == (Q - R, P * R - P * Q + P - Q, R * (Q - P))


def test_symbolic_k124():
    assert symbolic_pascal(Label(1, 2, 4)) == (P - R, R - P * Q, P * R * (Q - 1))


def test_symbolic_specializes_to_generic_example():
    coeffs = [c.evaluate((3, -5, 7)) for c in symbolic_pascal(BASE_LABEL)]
    assert ProjectiveForm(coeffs).coeffs == (3, -11, 14)


@settings(max_examples=15)
@given(st.tuples(ratl, ratl, ratl))
def test_specialization_all_labels(pqr):
    assume(len({0, 1, *pqr}) == 5)
    h = Hexad.from_affine([0, 1, "inf", *pqr])
    for s in LABELS:
        values = [c.evaluate(pqr) for c in symbolic_pascal(s)]
        expected = pascal_of_label(h, s)
        if any(values):
            assert ProjectiveForm(values) == expected.pole.form
        else:
            pytest.fail(f"symbolic pole of {s} vanishes at a legal point {pqr}")


def test_minor_system_examples():
    sys_ = minor_system(Label(1, 2, 3), Label(1, 2, 4))
    # q=1, r=p is an illegal branch: every minor vanishes there
    for m in sys_.minors:
        assert m.evaluate((3, 1, 3)) == 0
    with pytest.raises(ValueError):
        minor_system(BASE_LABEL, BASE_LABEL)


def test_minor_system_is_determinants():
    sys_ = representative_system("I7")
    a, b = sys_.rows
    assert sys_.minors[1] == a[0] * b[2] - a[2] * b[0]
    assert sys_.case == "I7"


@pytest.mark.parametrize("case", sorted(FAMILIES))
def test_families_verify(case):
    assert verify_family(representative_system(case), FAMILIES[case])


def test_family_case_mismatch_rejected():
    with pytest.raises(ValueError):
        verify_family(representative_system("I1"), FAMILIES["I9"])


def test_wrong_family_fails_verification():
    fam = FAMILIES["I1"]
    bogus = SolutionFamily("I1", ("p",), (fam.coords[0], fam.coords[1], (P, P ** 0)), ())
    assert not verify_family(representative_system("I1"), bogus)


def test_scan_i2_empty():
    report = scan_case("I2", 31)
    assert report.unexplained == 0 and report.family == 0
    assert report.total == report.illegal


def test_scan_i1_solutions_on_family():
    report = scan_case("I1", 31)
    assert report.unexplained == 0 and report.family > 0
    assert report.total == report.illegal + report.family + report.unexplained


def test_scan_i9_solutions_on_family():
    report = scan_case("I9", 31)
    assert report.unexplained == 0 and report.family > 0


def test_scan_report_rendering():
    report = finite_field_scan(BASE_LABEL, REPRESENTATIVES["I7"], 31)
    data = report.to_dict()
    assert data["case"] == "I7" and data["caveat"] == SCAN_CAVEAT
    assert "unexplained 0" in report.render()
    with pytest.raises(ValueError):
        finite_field_scan(BASE_LABEL, REPRESENTATIVES["I7"], 3)


def test_scan_detects_unexplained_when_family_missing(monkeypatch):
    # without the recorded family every legal I1 solution is unexplained
    monkeypatch.delitem(FAMILIES, "I1")
    report = scan_case("I1", 31)
    assert report.unexplained > 0 and report.family == 0
    for p, q, r in report.unexplained_points:
        assert len({0, 1, p, q, r}) == 5


@pytest.mark.parametrize("case", ["I3", "I6", "I8"])
def test_scan_backends_agree(case):
    from hexagrammum import kernels

    reports = [scan_case(case, 31, backend=b) for b in kernels.available_backends()]
    assert len({(r.total, r.illegal, r.family, r.unexplained) for r in reports}) == 1
