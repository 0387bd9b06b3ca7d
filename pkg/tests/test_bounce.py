import pytest
from hypothesis import given, settings, strategies as st

from bouncepaths.bounce import (
    BounceTable,
    b_lr_closed_form,
    bounce_free_ab,
    bounce_free_prefix,
    bounce_free_total,
    bounce_table,
    bounce_table_from_closed_forms,
    expand_marker_quotient,
    g_b_series,
    no_left_bounce_total,
    nrb_series,
    one_sided_bounce_series,
)
from bouncepaths.closed_forms import Restriction, Slope, Step, g_ab_series, g_series
from bouncepaths.enumeration import count_matching, count_table, enumerate_profiles
from bouncepaths.series import Series
from bouncepaths.verify import coprime_slopes


def coeffs(series, start=1):
    return list(series.coeffs[start:])


# --------------------------------------------------------- no-bounce series


def test_nrb_series_frozen_values():
    # enumeration: EENN is the only EN-path to (2,2) without a right bounce
    assert coeffs(nrb_series(Slope(1, 1), Restriction.EN, 3)) == [1, 1, 3]
    assert coeffs(nrb_series(Slope(1, 1), Restriction.EE, 2)) == [0, 1]
    assert coeffs(nrb_series(Slope(2, 1), Restriction.EN, 1)) == [1]


def test_nrb_series_rejects_other_restrictions():
    with pytest.raises(ValueError):
        nrb_series(Slope(1, 1), Restriction.NE, 3)
    with pytest.raises(ValueError):
        nrb_series(Slope(1, 1), Restriction.ALL, 3)


@pytest.mark.parametrize("slope", [Slope(1, 1), Slope(2, 1), Slope(2, 3)], ids=str)
def test_nrb_series_counts_both_statistics(slope):
    order = 12 // (slope.alpha + slope.beta)
    for restriction in (Restriction.EE, Restriction.EN, Restriction.NN):
        series = nrb_series(slope, restriction, order)
        for k in range(1, order + 1):
            profiles = enumerate_profiles(slope, k)
            no_right = count_matching(
                profiles, first=restriction.first, last=restriction.last, right=0
            )
            assert series.coefficient(k) == no_right
            # the no-left twin lives on the mirrored class for EN
            if restriction is Restriction.EN:
                no_left = count_matching(profiles, first=Step.N, last=Step.E, left=0)
            else:
                no_left = count_matching(
                    profiles, first=restriction.first, last=restriction.last, left=0
                )
            assert series.coefficient(k) == no_left


# --------------------------------------------------------- bounce-free forms


def test_bounce_free_ab_frozen_values():
    assert coeffs(bounce_free_ab(Slope(1, 1), Restriction.EN, 3)) == [1, 1, 3]
    assert coeffs(bounce_free_ab(Slope(2, 1), Restriction.EE, 8)) == [
        1, 4, 18, 89, 466, 2537, 14209, 81316,
    ]
    assert coeffs(bounce_free_ab(Slope(2, 1), Restriction.EN, 8)) == [
        1, 3, 13, 63, 326, 1761, 9808, 55895,
    ]
    assert bounce_free_ab(Slope(2, 3), Restriction.NE, 6) == bounce_free_ab(
        Slope(2, 3), Restriction.EN, 6
    )
    with pytest.raises(ValueError):
        bounce_free_ab(Slope(1, 1), Restriction.ALL, 3)


def test_bounce_free_total_frozen_values():
    assert coeffs(bounce_free_total(Slope(1, 1), 4)) == [2, 4, 10, 28]
    # exhaustive: 10 paths at k=1 (no interior line point), 162 of 210 at k=2
    assert coeffs(bounce_free_total(Slope(3, 2), 2)) == [10, 162]


@pytest.mark.parametrize("slope", coprime_slopes(6), ids=str)
def test_bounce_free_total_splits_by_first_and_last(slope):
    order = 10
    total = (
        bounce_free_ab(slope, Restriction.EE, order)
        + 2 * bounce_free_ab(slope, Restriction.EN, order)
        + bounce_free_ab(slope, Restriction.NN, order)
    )
    assert total == bounce_free_total(slope, order)


def test_bounce_free_prefix():
    f_estar = bounce_free_prefix(Slope(2, 1), Step.E, 6)
    expected = bounce_free_ab(Slope(2, 1), Restriction.EE, 6) + bounce_free_ab(
        Slope(2, 1), Restriction.EN, 6
    )
    assert f_estar == expected


# ----------------------------------------------------------- one-sided series


def test_one_sided_frozen_values():
    # NENE is the single path to (2,2) with one left and no right bounce
    assert one_sided_bounce_series(Slope(1, 1), "left", 1, 2).coefficient(2) == 1
    # ENEN is its right-bounce mirror
    assert one_sided_bounce_series(Slope(1, 1), "right", 1, 2).coefficient(2) == 1


def test_one_sided_mirror_symmetry():
    for m in (1, 2, 3):
        assert one_sided_bounce_series(Slope(2, 3), "left", m, 8) == (
            one_sided_bounce_series(Slope(3, 2), "right", m, 8)
        )


def test_one_sided_validation():
    with pytest.raises(ValueError):
        one_sided_bounce_series(Slope(1, 1), "up", 1, 3)
    with pytest.raises(ValueError):
        one_sided_bounce_series(Slope(1, 1), "left", 0, 3)


def test_no_left_bounce_total_frozen_values():
    assert coeffs(no_left_bounce_total(Slope(1, 1), 3)) == [2, 5, 15]
    assert coeffs(no_left_bounce_total(Slope(2, 1), 1)) == [3]


@pytest.mark.parametrize("slope", [Slope(1, 1), Slope(2, 1), Slope(2, 3)], ids=str)
def test_no_left_bounce_total_sums_one_sided(slope):
    order = 8
    total = bounce_free_total(slope, order)
    for m in range(1, order + 1):
        total = total + one_sided_bounce_series(slope, "left", m, order)
    assert total == no_left_bounce_total(slope, order)


# ------------------------------------------------------------ two-sided cells


def test_b_lr_frozen_values():
    series = b_lr_closed_form(Slope(1, 1), 1, 1, 4)
    # no path to (2,2) or (3,3) carries a bounce on both sides; two at (4,4)
    assert [series.coefficient(k) for k in (2, 3, 4)] == [0, 0, 2]
    with pytest.raises(ValueError):
        b_lr_closed_form(Slope(1, 1), 0, 1, 4)


@given(st.integers(1, 4), st.integers(1, 4), st.integers(1, 5))
@settings(deadline=None)
def test_b_lr_vanishes_when_bounces_exceed_semilength(left, right, k):
    if left + right < k:
        return
    assert b_lr_closed_form(Slope(1, 1), left, right, 5).coefficient(k) == 0


# -------------------------------------------------------------------- table


def test_expand_marker_quotient_geometric():
    one = Series.one(3)
    # 1 / (1 - s): constant series along the left index, zero elsewhere
    grid = expand_marker_quotient({(0, 0): one}, {(0, 0): one, (1, 0): -one}, 2, 2)
    for l in range(3):
        for r in range(3):
            assert grid[l][r] == (one if r == 0 else Series.zero(3))


def test_bounce_table_frozen_values():
    table = bounce_table(Slope(1, 1), Restriction.ALL, 3, 3, 4)
    assert coeffs(table.entry(0, 0)) == [2, 4, 10, 28]
    row = [table.entry(0, 0), table.entry(1, 0), table.entry(0, 1), table.entry(1, 1)]
    assert [s.coefficient(2) for s in row] == [4, 1, 1, 0]


def test_bounce_table_sums_to_all_paths():
    order = 6
    table = bounce_table(Slope(1, 1), Restriction.ALL, order - 1, order - 1, order)
    assert table.sum_all() == g_series(Slope(1, 1), order)


@pytest.mark.parametrize("slope", [Slope(1, 1), Slope(2, 1), Slope(1, 3)], ids=str)
def test_bounce_table_matches_enumeration_per_restriction(slope):
    order = 12 // (slope.alpha + slope.beta)
    bound = max(order - 1, 1)
    for restriction in Restriction:
        table = bounce_table(slope, restriction, bound, bound, order)
        for k in range(1, order + 1):
            grid = count_table(slope, k, restriction)
            for l in range(bound + 1):
                for r in range(bound + 1):
                    assert table.entry(l, r).coefficient(k) == grid.get((l, r), 0), (
                        restriction, k, l, r,
                    )


def test_bounce_table_restricted_entry_00_is_bounce_free():
    for restriction in (Restriction.EE, Restriction.EN, Restriction.NE, Restriction.NN):
        table = bounce_table(Slope(2, 1), restriction, 2, 2, 6)
        assert table.entry(0, 0) == bounce_free_ab(Slope(2, 1), restriction, 6)


def test_bounce_table_zero_bounds_reduce_to_bounce_free():
    table = bounce_table(Slope(2, 3), Restriction.ALL, 0, 0, 5)
    assert table.entry(0, 0) == bounce_free_total(Slope(2, 3), 5)


def test_dual_route_tables_agree():
    for slope in (Slope(1, 1), Slope(2, 1), Slope(2, 3)):
        expanded = bounce_table(slope, Restriction.ALL, 4, 4, 9)
        assembled = bounce_table_from_closed_forms(slope, 4, 4, 9)
        assert expanded.entries == assembled.entries


def test_bounce_table_validation():
    good = bounce_table(Slope(1, 1), Restriction.ALL, 1, 1, 3)
    with pytest.raises(ValueError):
        BounceTable(
            slope=good.slope,
            trunc_order=good.trunc_order,
            max_left=1,
            max_right=1,
            restriction=good.restriction,
            entries=((Series((0, -1, 0, 0)),) * 2,) * 2,
        )
    with pytest.raises(ValueError):
        BounceTable(
            slope=good.slope,
            trunc_order=3,
            max_left=2,
            max_right=1,
            restriction=good.restriction,
            entries=good.entries,
        )
    with pytest.raises(ValueError):
        bounce_table(Slope(1, 1), Restriction.ALL, -1, 0, 3)


# ----------------------------------------------------------- total bounces


def test_g_b_series_frozen_values():
    series = g_b_series(1, 4)
    assert [series.coefficient(j) for j in (2, 3, 4)] == [2, 8, 28]
    assert g_b_series(0, 8) == bounce_free_total(Slope(1, 1), 8)
    # exactly NENE and ENEN at semilength 2
    assert g_b_series(1, 2).coefficient(2) == 2
    with pytest.raises(ValueError):
        g_b_series(-1, 4)


def test_g_b_series_partitions_all_paths():
    order = 8
    total = Series.zero(order)
    for b in range(order):
        total = total + g_b_series(b, order)
    assert total == g_series(Slope(1, 1), order)
