"""Bound arithmetic, closed-form tables, and report assembly."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuplength.bounds import (
    BoundReport,
    NilpotencyData,
    OrientedSummary,
    PoincareProfile,
    check_a2,
    full_report,
    grossman_upper,
    lower_a3,
    prop_b_certificate,
    prop_b_lower,
    prop_d_upper,
    prop_d_upper_table_value,
    rational_bounds,
    summarize_oriented,
    upper_a1,
    upper_b1,
)
from cuplength.grassmann import GrassmannPresentation
from cuplength.heights import rational_p1_height, tabulated_w2_height


def profile(N, r=2, q=3):
    return PoincareProfile(N, r, q, "Z2")


def test_profile_validation():
    with pytest.raises(ValueError):
        PoincareProfile(9, 0, 3, "Z2")
    with pytest.raises(ValueError):
        PoincareProfile(9, 4, 3, "Z2")
    with pytest.raises(ValueError):
        PoincareProfile(9, 2, 9, "Z2")
    with pytest.raises(ValueError):
        PoincareProfile(9, 2, 3, "GF4")


def test_degree_count_basics():
    assert upper_a1(profile(18)) == 9
    assert check_a2(profile(18), 9) == 9
    assert check_a2(profile(18), 8) is None
    assert lower_a3(profile(18), 4, 8) == 5
    assert lower_a3(profile(18), 9, 18) == 9
    with pytest.raises(ValueError):
        lower_a3(profile(18), 4, 19)
    with pytest.raises(ValueError):
        lower_a3(profile(18), 0, 0)


def test_nilpotency_refinement():
    assert upper_b1(profile(9), NilpotencyData((1,))) == 3
    assert upper_b1(profile(18), NilpotencyData((4,))) == 7
    assert upper_b1(profile(21), NilpotencyData((4,))) == 8
    with pytest.raises(ValueError):
        upper_b1(profile(18, q=2), NilpotencyData((4,)))
    with pytest.raises(ValueError):
        upper_b1(profile(18), NilpotencyData((9,)))
    with pytest.raises(ValueError):
        NilpotencyData(())
    with pytest.raises(ValueError):
        NilpotencyData((0,))


@settings(max_examples=120)
@given(st.integers(4, 200), st.integers(3, 9), st.integers(1, 60))
def test_refinement_strictly_beats_degree_count(N, q, total):
    if not (2 < q < N and 2 * total < N):
        return
    p = PoincareProfile(N, 2, q, "Z2")
    bound = upper_b1(p, NilpotencyData((total,)))
    assert 2 * bound < N
    assert bound <= upper_a1(p)


def test_prop_b_lower_closed_forms():
    assert prop_b_lower(6, 3) == 3
    assert prop_b_lower(7, 3) == 5
    assert prop_b_lower(9, 3) == 5
    assert prop_b_lower(12, 3) == 5
    assert prop_b_lower(13, 3) == 8
    assert prop_b_lower(14, 3) == 8
    assert prop_b_lower(15, 3) == 9
    assert prop_b_lower(10, 4) == 5
    assert prop_b_lower(13, 4) == 5
    assert prop_b_lower(14, 4) == 8
    assert prop_b_lower(15, 5) == 8
    with pytest.raises(ValueError):
        prop_b_lower(7, 4)


def test_prop_b_certificate_consistency():
    for k in (3, 4, 5):
        for n in range(2 * k, 40):
            exps, length, degree = prop_b_certificate(n, k)
            assert degree == sum(e * w for e, w in zip(exps, range(2, k + 1)))
            assert length == sum(exps)
            p = profile(k * (n - k))
            assert lower_a3(p, length, degree) == prop_b_lower(n, k), (n, k)


def test_prop_d_upper_spots():
    assert prop_d_upper(6, 3) == 3
    assert prop_d_upper(9, 3) == 8
    assert prop_d_upper(10, 4) == 12
    assert prop_d_upper(12, 5) == 16
    assert prop_d_upper(10, 5) == 12
    assert prop_d_upper_table_value(10, 5) == 13


def test_prop_d_dichotomy_identity():
    for k in range(3, 9):
        for n in range(2 * k, 65):
            if (n, k) == (6, 3):
                continue
            N = k * (n - k)
            ht = tabulated_w2_height(n, k)
            p = profile(N)
            expect = (
                upper_b1(p, NilpotencyData((ht,))) if 2 * ht < N else upper_a1(p)
            )
            assert prop_d_upper(n, k) == expect, (n, k)


def test_rational_walkthroughs():
    assert rational_bounds(8, 4) == rational_bounds(8, 4).__class__(4, 4, True)
    assert (rational_bounds(13, 4).lower, rational_bounds(13, 4).upper) == (9, 9)
    assert rational_bounds(10, 4).exact
    assert rational_bounds(11, 4).exact
    assert not rational_bounds(12, 5).exact
    with pytest.raises(ValueError):
        rational_bounds(9, 3)


@settings(max_examples=150)
@given(st.integers(4, 12), st.integers(0, 40))
def test_rational_bounds_are_ordered(k, spread):
    n = 2 * k + spread
    rb = rational_bounds(n, k)
    h = rational_p1_height(n, k)
    assert rb.lower <= rb.upper
    assert rb.upper == k * (n - k) // 4
    assert rb.exact == (rb.lower == rb.upper)
    if n % 2 == 0 and k % 2 == 0:
        assert rb.exact, "even/even equality family"


def test_grossman_and_cat_lower():
    assert grossman_upper(9, 2) == 5
    assert grossman_upper(18, 2) == 10
    with pytest.raises(ValueError):
        grossman_upper(1, 2)


def test_report_smallest_space():
    report = full_report(6, 3)
    assert (report.lower, report.upper, report.exact) == (3, 3, True)
    assert (report.cat_lower, report.cat_upper) == (4, 5)
    assert report.lower_method == "B(a)"
    assert report.paper_upper_method == "D(a)"


def test_report_sharpened_upper():
    report = full_report(9, 3)
    assert (report.paper_lower, report.paper_upper) == (5, 8)
    assert (report.lower, report.upper) == (5, 7)
    assert report.upper_method == "(b1) computed height"
    assert dict(report.certificates)["oriented-height"].startswith("ht = 4")


def test_report_product_sharpened_lower():
    report = full_report(11, 3)
    assert report.lower == 6
    assert report.lower_method == "(a3) product"
    assert report.paper_lower == 5


def test_report_closed_form_only():
    report = full_report(9, 3, with_computation=False)
    assert (report.lower, report.upper) == (5, 8)
    assert report.certificates == ()
    assert report.cat_lower == 6


def test_report_q_override():
    default = full_report(9, 3)
    wide = full_report(9, 3, q_override=4)
    assert wide.upper <= default.upper
    assert wide.lower <= wide.upper


def test_report_from_summary_matches_fresh():
    pres = GrassmannPresentation(10, 3)
    summary = summarize_oriented(pres)
    round_tripped = OrientedSummary.from_record(summary.to_record())
    assert round_tripped == summary
    assert full_report(10, 3, summary=round_tripped) == full_report(10, 3)


def test_report_rejects_crossed_bounds():
    with pytest.raises(ValueError):
        BoundReport(
            n=9,
            k=3,
            field_tag="Z2",
            lower=9,
            lower_method="x",
            upper=3,
            upper_method="y",
            paper_lower=5,
            paper_lower_method="x",
            paper_upper=8,
            paper_upper_method="y",
            cat_lower=10,
            cat_upper=10,
            paper_cat_lower=6,
            exact=False,
        )


def test_rational_report():
    report = full_report(13, 4, field_tag="Q")
    assert (report.lower, report.upper, report.exact) == (9, 9, True)
    assert report.cat_lower == 10
    assert report.cat_upper == grossman_upper(36, 2)
    with pytest.raises(ValueError):
        full_report(9, 3, field_tag="Q")
