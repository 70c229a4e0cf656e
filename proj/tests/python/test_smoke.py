import pytest

import homaloidal as hm


def test_triangle_is_homaloidal_everywhere():
    for field in (0, 2, 3, 5):
        rep = hm.verdict("x0*x1*x2", field=field, trials=2, seed=1)
        assert rep["verdict"] == "homaloidal"
        assert rep["multidegree"]["d0"] == 1
        assert rep["multidegree"]["d1"] == 2
        assert rep["multidegree"]["d2"] == 1


def test_full_report_shape():
    rep = hm.analyze("x0*x1*(x0+x1)*x2", field=3, trials=2, seed=7)
    assert rep["schemaVersion"] == "curve-report/1"
    assert rep["analysis"]["verdict"] == "homaloidal"
    assert rep["analysis"]["multidegree"] == {"d0": 1, "d1": 3, "d2": 1}
    assert rep["entryIdealRadical"] == "(x0, x1)"
    assert rep["linearityHypotheses"]["all"] is True
    assert rep["timing"]["seconds"] >= 0


def test_family_extends_small_fields():
    rep = hm.family("near-pencil", n=4, field=2, seed=3)
    assert rep["family"]["extended"] is True
    assert "GF(2^2)" in rep["family"]["label"]
    assert rep["analysis"]["verdict"] == "homaloidal"

    with pytest.raises(hm.MathError):
        hm.family("near-pencil", n=4, field=2, allow_extension=False)


def test_family_is_seeded():
    a = hm.family("near-pencil", n=5, field=7, slope_seed=11, seed=2)
    b = hm.family("near-pencil", n=5, field=7, slope_seed=11, seed=2)
    assert a["family"]["f"] == b["family"]["f"]


def test_ramphoid_changes_with_the_characteristic():
    char3 = hm.analyze(
        "x2*(x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 - x1*x2^3)", field=3,
        trials=2, seed=5,
    )
    char0 = hm.analyze(
        "x2*(x1^4 - 2*x0*x1^2*x2 + x0^2*x2^2 - x1*x2^3)", field=0,
        trials=2, seed=5,
    )
    assert char3["analysis"]["verdict"] == "homaloidal"
    assert char0["analysis"]["verdict"] == "degree-greater-than-one"
    assert char0["analysis"]["multidegree"]["d0"] == 3
    assert char3["presentation"]["columnDegrees"] == [1, 3]
    assert char0["presentation"]["columnDegrees"] == [2, 2]


def test_arrangement_classification():
    rep = hm.arrangement(["x0", "x1", "x2", "x0+x1+x2"], field=(2, 2),
                         cross_check=True, seed=9)
    assert rep["classification"] == "not-homaloidal"
    assert rep["degreeFormulaExact"] is False
    assert rep["d0"] == 3
    assert rep["algebraicD0"] == 2

    concurrent = hm.arrangement(["x0", "x1", "x0+x1"], field=7)
    assert concurrent["classification"] == "not-dominant"
    assert concurrent["concurrent"] is True


def test_presentation_of_the_triangle():
    rep = hm.presentation("x0*x1*x2", field=5)
    assert rep["columnDegrees"] == [1, 1]


def test_sweep_counts():
    rep = hm.sweep(field=2, d_lo=3, d_hi=4, sample=4, seed=13)
    assert rep["homaloidalCount"] == 28 + 7
    assert rep["checksAgree"] is True


def test_errors_are_math_errors():
    with pytest.raises(hm.MathError):
        hm.analyze("x0 + ", field=3)
    with pytest.raises(hm.MathError):
        hm.analyze("x0*x1*x2", field=4)
