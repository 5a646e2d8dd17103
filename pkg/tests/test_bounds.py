"""Exact inequality arithmetic and the membership verdict table.

Expected numbers in this file were computed by hand from the stated
formulas, so the assertions are oracles rather than snapshots of the
implementation.
"""

from __future__ import annotations

from fractions import Fraction

import pytest

from epgrid.bounds import (
    Membership,
    RangeError,
    UnsupportedMError,
    acp_lower,
    heldt_n,
    lbl1,
    lbl_crossings,
    mlbl,
    mlbl2,
    threshold_b2m3,
    verdict,
)


# ----------------------------------------------------------------------
# lbl1 (general paths)
# ----------------------------------------------------------------------


def test_lbl1_violated_cases():
    # m=4, n=6, k=2: lhs = 2*2*10 = 40, d = 3*10 - 24 = 6, rhs = 36.
    v = lbl1(4, 6, 2)
    assert (v.lhs, v.rhs, v.violated) == (40, 36, True)
    # m=5, n=11, k=3: lhs = 2*3*16 = 96, d = 4*16 - 55 = 9, rhs = 81.
    v = lbl1(5, 11, 3)
    assert (v.lhs, v.rhs, v.violated) == (96, 81, True)


def test_lbl1_satisfied_cases():
    # m=5, n=10, k=3: lhs = 90, d = 10, rhs = 100.
    v = lbl1(5, 10, 3)
    assert (v.lhs, v.rhs, v.violated) == (90, 100, False)
    # m=3, n=3, k=2: lhs = 24, d = 9, rhs = 81.
    v = lbl1(3, 3, 2)
    assert (v.lhs, v.rhs, v.violated) == (24, 81, False)


def test_lbl1_negative_margin_counts_as_violation():
    # Large n with tiny k drives d negative; the squared form must
    # preserve the sign, not hide it.
    v = lbl1(10, 100, 0)
    assert v.rhs < 0 and v.violated


def test_lbl1_rejects_out_of_range_parameters():
    with pytest.raises(RangeError):
        lbl1(2, 5, 1)
    with pytest.raises(RangeError):
        lbl1(5, 4, 1)
    with pytest.raises(RangeError):
        lbl1(3, 3, -1)


# ----------------------------------------------------------------------
# lbl_crossings and acp_lower (count-parameterized forms)
# ----------------------------------------------------------------------


def test_lbl_crossings_values():
    # m=3, n=10, k=1, c=0: lhs = 10*(6-1-2) = 30, rhs = 0 + 2*2*3 = 12.
    v = lbl_crossings(3, 10, 1, 0)
    assert (v.lhs, v.rhs, v.violated) == (30, 12, True)
    # Nine crossings close the gap exactly: rhs = 18 + 12 = 30.
    v = lbl_crossings(3, 10, 1, 9)
    assert (v.lhs, v.rhs, v.violated) == (30, 30, False)
    with pytest.raises(RangeError):
        lbl_crossings(3, 10, 1, -1)


def test_acp_lower_values():
    # m=3, n=5, k=3: lhs = 5*(3-2) = 5.
    v = acp_lower(3, 5, 3, 2, 1, 1)
    assert (v.lhs, v.rhs, v.violated) == (5, 5, False)
    v = acp_lower(3, 5, 3, 2, 0, 2)
    assert (v.lhs, v.rhs, v.violated) == (5, 4, True)
    with pytest.raises(RangeError):
        acp_lower(3, 5, 3, -1, 0, 0)


# ----------------------------------------------------------------------
# mlbl and mlbl2 (monotonic paths)
# ----------------------------------------------------------------------


def test_mlbl_values():
    # m=4, n=156, k=5: lhs = 156*1 = 156, rhs = 60 + 8 + 48 = 116.
    v = mlbl(4, 156, 5)
    assert (v.lhs, v.rhs, v.violated) == (156, 116, True)
    # m=4, n=49, k=4: lhs = 49*2 = 98, rhs = 48 + 8 + 40 = 96.
    v = mlbl(4, 49, 4)
    assert (v.lhs, v.rhs, v.violated) == (98, 96, True)
    # m=3, n=36, k=3: lhs = 36, rhs = 18 + 9/2 + 24 = 93/2.
    v = mlbl(3, 36, 3)
    assert (v.lhs, v.rhs, v.violated) == (36, Fraction(93, 2), False)


def test_mlbl2_values():
    # m=3, k=3: floor = ceil = 2, lhs = n, rhs = 3*11 + 9/4 = 141/4.
    v = mlbl2(3, 35, 3)
    assert (v.lhs, v.rhs, v.violated) == (35, Fraction(141, 4), False)
    v = mlbl2(3, 36, 3)
    assert (v.lhs, v.rhs, v.violated) == (36, Fraction(141, 4), True)
    # Even k exercises the (ceil-floor)^2 correction: m=4, n=10, k=2
    # gives lhs = 20 and rhs = 6*6 + 4*2 = 44.
    v = mlbl2(4, 10, 2)
    assert (v.lhs, v.rhs, v.violated) == (20, 44, False)


def test_mlbl2_threshold_between_35_and_36_matches_the_closed_form():
    # The flip point of mlbl2 for m=3, k=3 sits exactly at the closed
    # form: the largest satisfying n is floor(141/4) = 35.
    assert not mlbl2(3, 35, 3).violated
    assert mlbl2(3, 36, 3).violated


def test_violation_is_monotone_in_n():
    for m, k in ((4, 3), (5, 4), (6, 7)):
        flipped = False
        for n in range(m, 4000):
            now = mlbl(m, n, k).violated
            if flipped:
                assert now, f"violation must persist for larger n (m={m}, k={k}, n={n})"
            flipped = flipped or now


def test_bound_verdict_documents_use_exact_fraction_strings():
    doc = mlbl2(3, 36, 3).to_doc()
    assert doc["rhs"] == "141/4"
    assert doc["lhs"] == "36"
    assert doc["violated"] is True
    assert doc["name"] == "mlbl2"


# ----------------------------------------------------------------------
# closed forms: threshold and witness sizes
# ----------------------------------------------------------------------


def test_threshold_values():
    assert threshold_b2m3(2) == 13
    assert threshold_b2m3(3) == Fraction(95, 2)
    assert threshold_b2m3(4) == 117
    with pytest.raises(RangeError):
        threshold_b2m3(1)


def test_threshold_agrees_with_mlbl_flip_for_small_m():
    # For k = 2m-3 the first violated integer n should be the first
    # integer strictly beyond the closed-form threshold... up to the
    # inequality actually used; at minimum every n past the threshold
    # must be certified impossible by one of the two inequalities.
    for m in (3, 4, 5):
        k = 2 * m - 3
        n = int(threshold_b2m3(m)) + 1
        assert mlbl(m, n, k).violated or mlbl2(m, n, k).violated


def test_heldt_witness_sizes():
    assert heldt_n(4) == 8
    assert heldt_n(6) == 34
    assert heldt_n(8) == 92
    assert heldt_n(10) == 194
    assert heldt_n(12) == 352
    assert heldt_n(7) == 42
    assert heldt_n(9) == 108
    assert heldt_n(11) == 220
    assert heldt_n(13) == 390


def test_heldt_unsupported_m():
    for m in (0, 1, 2, 3, 5):
        with pytest.raises(UnsupportedMError):
            heldt_n(m)


def test_heldt_witnesses_need_more_bends_monotonically():
    # For the listed witness pairs, even a budget of m-1 bends (which
    # suffices for general paths) violates the monotonic inequality,
    # so the monotonic bend number strictly exceeds the bend number.
    for m in (8, 9, 10, 11, 12, 13):
        assert mlbl(m, heldt_n(m), m - 1).violated
    # Spot-check the two ends of that loop by hand:
    v = mlbl(8, 92, 7)
    assert (v.lhs, v.rhs) == (644, 552)
    v = mlbl(13, 390, 12)
    assert (v.lhs, v.rhs) == (4680, Fraction(4589, 2))


def test_heldt_witnesses_exceed_m_minus_2_bends():
    # The defining property of the witness size: m-2 bends are not
    # enough.  The monotonic inequality certifies this for all listed
    # m except the two smallest witnesses (4 and 7), whose proofs need
    # different arguments.
    for m in (6, 8, 9, 10, 11, 12, 13):
        assert mlbl(m, heldt_n(m), m - 2).violated
    assert not mlbl(4, heldt_n(4), 2).violated
    assert not mlbl(7, heldt_n(7), 5).violated


# ----------------------------------------------------------------------
# verdict
# ----------------------------------------------------------------------


def test_verdict_trivial_sides():
    assert verdict(0, 0, 0).membership is Membership.YES
    assert verdict(1, 100, 0).membership is Membership.YES


def test_verdict_two_row_table():
    assert verdict(2, 2, 1).membership is Membership.YES
    assert verdict(2, 2, 0).membership is Membership.NO
    assert verdict(2, 4, 1).membership is Membership.YES
    assert verdict(2, 5, 1).membership is Membership.NO
    assert verdict(2, 5, 2).membership is Membership.YES
    assert verdict(2, 1000, 2).membership is Membership.YES


def test_verdict_staircase_suffices():
    assert verdict(3, 1000, 4).membership is Membership.YES
    assert verdict(4, 10**6, 6).membership is Membership.YES
    assert verdict(4, 10**6, 6, monotonic=True).membership is Membership.YES


def test_verdict_lbl1_route():
    status = verdict(4, 6, 2)
    assert status.membership is Membership.NO
    assert "lbl1" in status.reason
    assert verdict(5, 11, 3).membership is Membership.NO
    assert verdict(5, 10, 3).membership is Membership.UNKNOWN


def test_verdict_monotone_routes():
    status = verdict(3, 36, 3, monotonic=True)
    assert status.membership is Membership.NO
    assert "mlbl2" in status.reason
    assert verdict(3, 36, 3).membership is Membership.UNKNOWN
    assert verdict(3, 35, 3, monotonic=True).membership is Membership.UNKNOWN
    status = verdict(4, 156, 5, monotonic=True)
    assert status.membership is Membership.NO
    assert "mlbl" in status.reason


def test_verdict_rejects_bad_parameters():
    with pytest.raises(RangeError):
        verdict(5, 4, 1)
    with pytest.raises(RangeError):
        verdict(-1, 4, 1)
    with pytest.raises(RangeError):
        verdict(3, 4, -1)


def test_verdict_never_contradicts_itself():
    # A graph possible with k bends stays possible with k+1, and a
    # graph impossible with k stays impossible with k-1.  The verdict
    # may weaken to unknown, but must never flip between yes and no.
    for m in range(0, 7):
        for n in range(m, 30):
            prev = None
            for k in range(0, 2 * m + 2):
                now = verdict(m, n, k, monotonic=True).membership
                if prev is Membership.YES:
                    assert now is Membership.YES
                if now is Membership.NO:
                    assert prev in (None, Membership.NO)
                prev = now
